#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "permpoly/field.hpp"

using namespace permpoly;

namespace {

std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t cap) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q <= cap; ++q)
        if (factorize(q).size() == 1) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("construction picks the minimal irreducible modulus") {
    CHECK(make_field(3, 1)->modulus() == std::vector<Elem>{0, 1});
    CHECK(make_field(3, 2)->modulus() == std::vector<Elem>{1, 0, 1});
    CHECK(make_field(2, 2)->modulus() == std::vector<Elem>{1, 1, 1});
    CHECK(make_field(2, 4)->modulus() == std::vector<Elem>{1, 1, 0, 0, 1});
    CHECK(make_field(5, 2)->modulus() == std::vector<Elem>{2, 0, 1});
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Field(4, 1), NotPrime);
    CHECK_THROWS_AS(Field(2, 1, std::vector<Elem>{1, 1, 1}), DegreeMismatch);
    CHECK_THROWS_AS(Field(3, 2, std::vector<Elem>{0, 0, 1}), NotIrreducible);  // x^2
    CHECK_THROWS_AS(Field(2, 17), FieldTooLarge);
    CHECK_THROWS_AS(make_field_from_order(12), NotPrime);
    CHECK(make_field_from_order(9)->r() == 2);
    CHECK(make_field_from_order(27)->q() == 27);
}

TEST_CASE("construction is deterministic") {
    Field a(3, 3), b(3, 3);
    CHECK(a == b);
    CHECK(a.primitive_element() == b.primitive_element());
    CHECK(make_field(3, 3).get() == make_field(3, 3).get());  // memoized
}

TEST_CASE("prime field arithmetic") {
    auto F = make_field(11, 1);
    CHECK(F->add(7, 8) == 4);
    CHECK(F->sub(3, 5) == 9);
    CHECK(F->mul(6, 8) == 4);
    CHECK(F->inv(7) == 8);  // 7*8 = 56 = 1
    CHECK(F->pow(2, 10) == 1);
    CHECK_THROWS_AS(make_field(7, 1)->inv(0), DivisionByZero);
}

TEST_CASE("extension arithmetic in the nine-element field") {
    auto F = make_field(3, 2);
    // code 3 is the adjoined root t; t^2 = -1 = 2 under modulus x^2 + 1
    CHECK(F->mul(3, 3) == 2);
    CHECK(F->add(4, 4) == 8);  // (1+t) + (1+t) = 2 + 2t
    CHECK(F->pow(3, 2) == 2);
    CHECK(F->pow(3, 4) == 1);
    CHECK(F->inv(3) == F->pow(3, 3));  // t^-1 = t^3 since t^4 = 1
}

TEST_CASE("square detection and roots") {
    auto F11 = make_field(11, 1);
    std::set<Elem> squares;
    for (Elem c = 0; c < 11; ++c) squares.insert(F11->mul(c, c));
    for (Elem a = 0; a < 11; ++a) CHECK(F11->is_square(a) == (squares.count(a) > 0));
    CHECK(F11->is_square(3));
    CHECK_FALSE(F11->is_square(8));

    auto F9 = make_field(3, 2);
    CHECK(F9->sqrt(2) == 3);  // smaller of the two roots of x^2 = 2
    CHECK(F9->mul(6, 6) == 2);

    auto F8 = make_field(2, 3);
    for (Elem a = 0; a < 8; ++a) {
        CHECK(F8->is_square(a));
        CHECK(F8->sqrt(a).has_value());
    }
}

TEST_CASE("primitive elements") {
    CHECK(make_field(2, 1)->primitive_element() == 1);
    CHECK(make_field(7, 1)->primitive_element() == 3);
    auto F9 = make_field(3, 2);
    Elem g = F9->primitive_element();
    // smallest code of multiplicative order 8, found exhaustively
    auto order = [&](Elem a) {
        Elem x = a;
        int k = 1;
        while (x != 1) {
            x = F9->mul(x, a);
            ++k;
        }
        return k;
    };
    for (Elem a = 1; a < g; ++a) CHECK(order(a) < 8);
    CHECK(order(g) == 8);
}

TEST_CASE("field axioms and power identities, exhaustive for q <= 81") {
    for (std::uint32_t q : prime_powers_up_to(81)) {
        auto F = make_field_from_order(q);
        const std::uint32_t p = F->p();
        for (Elem a = 0; a < q; ++a) {
            CHECK(F->pow(a, q) == a);  // a^q = a
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->is_square(F->mul(a, a)));
        }
        // Frobenius additivity: (a+b)^p = a^p + b^p
        for (Elem a = 0; a < q; ++a)
            for (Elem b = a; b < q; ++b)
                CHECK(F->pow(F->add(a, b), p) == F->add(F->pow(a, p), F->pow(b, p)));
        if (p != 2) {
            std::size_t count = 0;
            for (Elem a = 1; a < q; ++a)
                if (F->is_square(a)) ++count;
            CHECK(count == (q - 1) / 2);
        }
    }
}

TEST_CASE("tables agree with raw arithmetic") {
    Field with_tables(3, 3);
    Field without(3, 3, std::nullopt, 0);
    REQUIRE(with_tables.has_tables());
    REQUIRE_FALSE(without.has_tables());
    for (Elem a = 0; a < 27; ++a)
        for (Elem b = 0; b < 27; ++b) {
            CHECK(with_tables.mul(a, b) == without.mul(a, b));
            CHECK(with_tables.add(a, b) == without.add(a, b));
        }
    for (Elem a = 1; a < 27; ++a) CHECK(with_tables.inv(a) == without.inv(a));
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    auto F3 = make_field(3, 1);
    auto F9 = make_field(3, 2);
    auto F81 = make_field(3, 4);
    for (auto [sub, sup] : {std::pair{F3, F9}, {F3, F81}, {F9, F81}}) {
        auto emb = subfield_embedding(*sub, *sup);
        CHECK(emb[0] == 0);
        CHECK(emb[1] == 1);
        std::set<Elem> image(emb.begin(), emb.end());
        CHECK(image.size() == sub->q());
        for (Elem a = 0; a < sub->q(); ++a)
            for (Elem b = 0; b < sub->q(); ++b) {
                CHECK(emb[sub->add(a, b)] == sup->add(emb[a], emb[b]));
                CHECK(emb[sub->mul(a, b)] == sup->mul(emb[a], emb[b]));
            }
    }
    CHECK_THROWS_AS(subfield_embedding(*make_field(2, 2), *make_field(2, 3)), FieldMismatch);
}
