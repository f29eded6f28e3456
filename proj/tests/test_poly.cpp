#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "doctest.h"
#include "permpoly/lucas.hpp"
#include "permpoly/poly.hpp"

using namespace permpoly;

namespace {

Poly random_poly(const FieldPtr& field, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<Elem> code(0, field->q() - 1);
    std::vector<Elem> coeffs(deg(rng) + 1);
    for (Elem& c : coeffs) c = code(rng);
    return Poly(field, std::move(coeffs));
}

// Exact multinomial mod p via the chained-binomial identity, binomials
// computed over the integers.
std::uint32_t multinomial_oracle(std::uint64_t t, const std::vector<std::uint64_t>& ks,
                                 std::uint32_t p) {
    auto binom = [](std::uint64_t n, std::uint64_t k) {
        if (k > n) return std::uint64_t(0);
        k = std::min(k, n - k);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
        return acc;
    };
    std::uint64_t partial = 0, result = 1;
    for (std::uint64_t k : ks) {
        partial += k;
        result = result * (binom(partial, k) % p) % p;
    }
    (void)t;
    return std::uint32_t(result);
}

}  // namespace

TEST_CASE("ring operations") {
    auto F11 = make_field(11, 1);
    Poly f(F11, {1, 0, 0, 1});  // x^3 + 1
    CHECK(f.compose(Poly(F11, {1, 1})) == Poly(F11, {2, 3, 3, 1}));
    CHECK(f + Poly::zero(F11) == f);

    auto F3 = make_field(3, 1);
    CHECK(Poly(F3, {1, 1}) * Poly(F3, {2, 1}) == Poly(F3, {2, 0, 1}));

    auto F7 = make_field(7, 1);
    CHECK_THROWS_AS(Poly(F7, {1}) + Poly(F11, {1}), FieldMismatch);
    CHECK(Poly::zero(F7).degree() == -1);
}

TEST_CASE("evaluation tables match the worked examples") {
    auto F11 = make_field(11, 1);
    Poly g(F11, {1, 0, 0, 1});  // x^3 + 1
    CHECK(g.eval_table() == std::vector<Elem>{1, 2, 9, 6, 10, 5, 8, 3, 7, 4, 0});

    Poly h(F11, {5, 3, 1});  // x^2 + 3x + 5
    CHECK(h.eval_table() == std::vector<Elem>{5, 9, 4, 1, 0, 1, 4, 9, 5, 3, 3});
    CHECK(h.evaluate(4) == 0);

    Poly big(F11, {1, 1, 5, 2, 6, 8, 9, 4, 7, 3});
    CHECK(big.eval_table() == std::vector<Elem>{1, 2, 0, 3, 4, 5, 6, 7, 8, 9, 10});

    CHECK(Poly::zero(F11).evaluate(5) == 0);
}

TEST_CASE("reduction mod x^q - x") {
    auto F5 = make_field(5, 1);
    CHECK(reduce_mod_xq_minus_x(Poly::monomial(F5, 5)) == Poly::x(F5));

    auto F3 = make_field(3, 1);
    Poly f(F3, {0, 0, 0, 1, 0, 0, 0, 0, 0, 1});  // x^9 + x^3
    CHECK(reduce_mod_xq_minus_x(f) == Poly(F3, {0, 2}));

    auto F7 = make_field(7, 1);
    Poly low(F7, {3, 1, 4});
    CHECK(reduce_mod_xq_minus_x(low) == low);
}

TEST_CASE("reduction preserves the induced function") {
    std::mt19937_64 rng(7);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto F = make_field_from_order(q);
        // all monomials c x^k for k <= 2q
        for (std::uint32_t k = 0; k <= 2 * q; ++k)
            for (Elem c = 1; c < q; ++c) {
                Poly m = Poly::monomial(F, k, c);
                CHECK(reduce_mod_xq_minus_x(m).eval_table() == m.eval_table());
            }
        for (int i = 0; i < 25; ++i) {
            Poly f = random_poly(F, int(2 * q), rng);
            Poly red = reduce_mod_xq_minus_x(f);
            CHECK(red.degree() < int(q));
            CHECK(red.eval_table() == f.eval_table());
        }
    }
}

TEST_CASE("interpolation") {
    auto F5 = make_field(5, 1);
    CHECK(carlitz_interpolate(F5, {0, 1, 2, 3, 4}) == Poly::x(F5));
    CHECK(carlitz_interpolate(F5, {3, 3, 3, 3, 3}) == Poly::constant(F5, 3));
    CHECK_THROWS_AS(carlitz_interpolate(F5, {0, 1}), WrongLength);

    auto F3 = make_field(3, 1);
    CHECK(carlitz_interpolate(F3, {1, 0, 2}) == Poly(F3, {1, 2}));  // swap 0,1
}

TEST_CASE("interpolation round trip") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto F = make_field_from_order(q);
        if (q <= 5) {
            // every polynomial of degree <= 3
            std::vector<Elem> coeffs(std::min<std::uint32_t>(4, q), 0);
            while (true) {
                Poly f(F, coeffs);
                CHECK(carlitz_interpolate(F, f.eval_table()) == f);
                std::size_t i = 0;
                while (i < coeffs.size() && ++coeffs[i] == q) coeffs[i++] = 0;
                if (i == coeffs.size()) break;
            }
        }
        for (int i = 0; i < 20; ++i) {
            Poly f = reduce_mod_xq_minus_x(random_poly(F, int(q) - 1, rng));
            CHECK(carlitz_interpolate(F, f.eval_table()) == f);
        }
    }
}

TEST_CASE("transpositions") {
    auto F3 = make_field(3, 1);
    CHECK(transposition_poly(F3, 0, 1) == Poly(F3, {1, 2}));
    CHECK_THROWS_AS(transposition_poly(F3, 2, 2), EqualPoints);

    auto F5 = make_field(5, 1);
    Poly t = transposition_poly(F5, 0, 1);
    CHECK(t.eval_table() == std::vector<Elem>{1, 0, 2, 3, 4});
    CHECK(t.degree() == 3);  // maximal degree q - 2 for a reduced permutation

    // involution: composing with itself gives the identity table
    Poly tt = reduce_mod_xq_minus_x(t.compose(t));
    CHECK(tt.eval_table() == std::vector<Elem>{0, 1, 2, 3, 4});

    auto F9 = make_field(3, 2);
    Poly s = transposition_poly(F9, 3, 7);
    auto table = s.eval_table();
    CHECK(table[3] == 7);
    CHECK(table[7] == 3);
    for (Elem c = 0; c < 9; ++c)
        if (c != 3 && c != 7) CHECK(table[c] == c);
}

TEST_CASE("shift-scale-compose") {
    auto F7 = make_field(7, 1);
    Poly f(F7, {0, 3, 0, 0, 1});  // x^4 + 3x
    CHECK(shift_scale_compose(f, 0, 1, 0) == f);
    CHECK(shift_scale_compose(f, 1, 2, 1) == Poly(F7, {2, 0, 5, 1, 2}));
    CHECK_THROWS_AS(shift_scale_compose(f, 1, 0, 1), ZeroScale);
    CHECK(shift_scale_compose(f, 2, 3, 6).degree() == f.degree());
}

TEST_CASE("difference quotient") {
    auto F7 = make_field(7, 1);
    BiPoly q2 = difference_quotient(Poly::monomial(F7, 2));
    CHECK(q2.get(1, 0) == 1);
    CHECK(q2.get(0, 1) == 1);
    CHECK(q2.terms().size() == 2);

    BiPoly q3 = difference_quotient(Poly::monomial(F7, 3));
    CHECK(q3.get(2, 0) == 1);
    CHECK(q3.get(1, 1) == 1);
    CHECK(q3.get(0, 2) == 1);

    CHECK_THROWS_AS(difference_quotient(Poly::constant(F7, 5)), ConstantInput);

    // x^p + a has quotient (x - y)^(p-1)
    auto F9 = make_field(3, 2);
    BiPoly qp = difference_quotient(Poly(F9, {5, 0, 0, 1}));
    CHECK(qp.get(2, 0) == 1);
    CHECK(qp.get(1, 1) == 1);  // -2 = 1 mod 3
    CHECK(qp.get(0, 2) == 1);
    CHECK(qp.terms().size() == 3);
}

TEST_CASE("difference quotient identity over random polynomials") {
    std::mt19937_64 rng(23);
    for (std::uint32_t q : {3u, 5u, 9u}) {
        auto F = make_field_from_order(q);
        for (int i = 0; i < 30; ++i) {
            Poly f = random_poly(F, 6, rng);
            if (f.degree() < 1) continue;
            CHECK(multiply_by_x_minus_y(difference_quotient(f)) == bivariate_difference(f));
        }
    }
}

TEST_CASE("multinomial coefficients mod p") {
    CHECK(multinomial_mod_p(5, {5}, 3) == 1);
    CHECK(multinomial_mod_p(6, {2, 2, 2}, 3) == 0);  // 90 = 0 mod 3
    CHECK(multinomial_mod_p(17, {4, 0, 0, 1, 12}, 3) == 1);
    CHECK_THROWS_AS(multinomial_mod_p(5, {2, 2}, 3), SumMismatch);
    CHECK_THROWS_AS(multinomial_mod_p(4, {2, 2}, 4), NotPrime);
}

TEST_CASE("multinomial agrees with the exact binomial-chain oracle") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint64_t t = 0; t <= 30; ++t) {
            // all splittings of t into at most 5 parts (3 enumerated + remainder)
            for (std::uint64_t k1 = 0; k1 <= t; ++k1)
                for (std::uint64_t k2 = 0; k1 + k2 <= t; k2 += 3)
                    for (std::uint64_t k3 = 0; k1 + k2 + k3 <= t; k3 += 2) {
                        std::uint64_t k4 = (t - k1 - k2 - k3) / 2;
                        std::uint64_t k5 = t - k1 - k2 - k3 - k4;
                        std::vector<std::uint64_t> ks{k1, k2, k3, k4, k5};
                        CHECK(multinomial_mod_p(t, ks, p) == multinomial_oracle(t, ks, p));
                    }
        }
    }
}
