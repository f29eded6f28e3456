#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "permpoly/criteria.hpp"
#include "permpoly/families.hpp"

using namespace permpoly;

TEST_CASE("monomials") {
    auto F11 = make_field(11, 1);
    CHECK(monomial_is_pp(3, *F11));
    CHECK(is_pp_bruteforce(Poly(F11, {1, 0, 0, 1})).is_pp);  // x^3 + 1 shifts x^3
    CHECK_FALSE(monomial_is_pp(2, *F11));
    CHECK(monomial_is_pp(5, *make_field(3, 2)));
    CHECK(is_pp_bruteforce(Poly::monomial(make_field(3, 2), 5)).is_pp);
}

TEST_CASE("additive polynomials via root scan") {
    auto F9 = make_field(3, 2);
    CHECK(p_polynomial_is_pp(Poly::monomial(F9, 3)));
    CHECK_FALSE(p_polynomial_is_pp(Poly(F9, {0, F9->neg(1), 0, 1})));  // x^3 - x

    auto F27 = make_field(3, 3);
    // x^9 + 2x vanishes exactly on the prime subfield
    std::vector<Elem> c(10, 0);
    c[1] = F27->from_int(2);
    c[9] = 1;
    CHECK_FALSE(p_polynomial_is_pp(Poly(F27, c)));

    CHECK_THROWS_AS(p_polynomial_is_pp(Poly(F9, {0, 1, 1})), NotLinearized);
}

TEST_CASE("additive polynomials are additive") {
    for (auto [p, r] : {std::pair{3u, 2u}, {3u, 3u}, {2u, 3u}}) {
        auto F = make_field(p, r);
        std::mt19937_64 rng(p * 100 + r);
        std::uniform_int_distribution<Elem> code(0, F->q() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Elem> coeffs(p * p + 1, 0);
            coeffs[1] = code(rng);
            coeffs[p] = code(rng);
            coeffs[p * p] = code(rng);
            Poly L(F, coeffs);
            if (L.is_zero()) continue;
            for (Elem a = 0; a < F->q(); ++a)
                for (Elem b = 0; b < F->q(); ++b)
                    CHECK(L.evaluate(F->add(a, b)) ==
                          F->add(L.evaluate(a), L.evaluate(b)));
        }
    }
}

TEST_CASE("all three linearized routes agree with brute force") {
    // p-polynomials of degree <= p^2 over q in {9, 27}
    for (auto [p, r] : {std::pair{3u, 2u}, {3u, 3u}}) {
        auto F = make_field(p, r);
        for (Elem a0 = 0; a0 < F->q(); ++a0)
            for (Elem a1 = 0; a1 < F->q(); ++a1)
                for (Elem a2 = 0; a2 < F->q(); ++a2) {
                    std::vector<Elem> coeffs(p * p + 1, 0);
                    coeffs[1] = a0;
                    coeffs[p] = a1;
                    coeffs[p * p] = a2;
                    Poly L(F, coeffs);
                    if (L.is_zero()) continue;
                    CHECK(p_polynomial_is_pp(L) == is_pp_bruteforce(L).is_pp);
                }
    }

    // q-polynomial coefficient tuples over F_{q^m}, (q, m) in {(2,2), (3,2)}
    for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}}) {
        auto base = make_field(p, 1);
        auto ext = make_field(p, m);
        const std::uint32_t Q = ext->q();
        auto emb = subfield_embedding(*base, *ext);
        for (Elem a0 = 0; a0 < Q; ++a0)
            for (Elem a1 = 0; a1 < Q; ++a1) {
                std::vector<Elem> coeffs{a0, a1};
                Poly L = q_polynomial_realize(*base, ext, coeffs);
                bool brute = !L.is_zero() && is_pp_bruteforce(L).is_pp;
                CHECK(q_polynomial_is_pp_det(*base, *ext, coeffs) == brute);

                // subfield-coefficient route, where it applies
                if (a0 < p && a1 < p) {
                    std::vector<Elem> sub{a0, a1};
                    CHECK(q_polynomial_is_pp_gcd(*base, 2, sub) == brute);
                    (void)emb;
                }
            }
    }
}

TEST_CASE("polynomials permuting every extension") {
    auto F3 = make_field(3, 1);
    Poly f(F3, {1, 0, 0, 2});  // 2x^3 + 1
    auto form = all_extensions_form(f);
    CHECK(form.matches);
    CHECK(form.a == 2);
    CHECK(form.b == 1);
    CHECK(form.h == 1);
    CHECK(all_extensions_verify(f));

    CHECK_FALSE(all_extensions_form(Poly(F3, {0, 1, 0, 1})).matches);  // x^3 + x
    CHECK(all_extensions_form(Poly::x(F3)).matches);                   // h = 0

    // anything outside the shape fails over some small extension
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<Elem> code(0, 2);
    int tested = 0;
    for (int i = 0; tested < 100 && i < 10000; ++i) {
        std::vector<Elem> c(5);
        for (Elem& v : c) v = code(rng);
        Poly g(F3, c);
        if (g.degree() < 1 || all_extensions_form(g).matches) continue;
        ++tested;
        bool fails_somewhere = false;
        for (std::uint32_t mult = 2; mult <= 4 && !fails_somewhere; ++mult) {
            auto ext = make_field(3, mult);
            auto emb = subfield_embedding(*F3, *ext);
            std::vector<Elem> ec(g.coeffs().size());
            for (std::size_t k = 0; k < ec.size(); ++k) ec[k] = emb[g.coeffs()[k]];
            if (!is_pp_bruteforce(Poly(ext, ec)).is_pp) fails_somewhere = true;
        }
        CHECK(fails_somewhere);
    }
    CHECK(tested == 100);
}

TEST_CASE("product family x^h g(x^s)^((q-1)/s)") {
    auto F7 = make_field(7, 1);
    auto f = specific_class_build(1, 3, Poly(F7, {3, 1}));  // g = x + 3
    REQUIRE(f.has_value());
    CHECK(is_pp_bruteforce(*f).is_pp);

    // g = x + 6: g(x^3) = x^3 - 1 vanishes at 1
    CHECK_FALSE(specific_class_build(1, 3, Poly(F7, {6, 1})).has_value());

    // constant g degenerates to a scalar multiple of the monomial x^h
    auto mono = specific_class_build(5, 3, Poly::constant(F7, 2));
    REQUIRE(mono.has_value());
    CHECK(is_pp_bruteforce(*mono).is_pp);
    CHECK(monomial_is_pp(5, *F7));

    CHECK_THROWS_AS(specific_class_build(2, 3, Poly(F7, {3, 1})), BadParameters);
    CHECK_THROWS_AS(specific_class_build(1, 4, Poly(F7, {3, 1})), BadParameters);
}

TEST_CASE("quadratic binomial x^((q+1)/2) + ax") {
    auto F11 = make_field(11, 1);
    CHECK(quadratic_binomial_is_pp(2, *F11));   // 3 is a square mod 11
    CHECK_FALSE(quadratic_binomial_is_pp(1, *F11));
    CHECK_FALSE(quadratic_binomial_is_pp(3, *F11));  // 8 is not a square
    CHECK(is_pp_bruteforce(quadratic_binomial_poly(F11, 2)).is_pp);
    CHECK_THROWS_AS(quadratic_binomial_is_pp(1, *make_field(2, 3)), EvenCharacteristic);
}

TEST_CASE("quadratic binomial criterion matches brute force for all odd q <= 27") {
    for (std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
        auto F = make_field_from_order(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(quadratic_binomial_is_pp(a, *F) ==
                  is_pp_bruteforce(quadratic_binomial_poly(F, a)).is_pp);
        }
    }
}

TEST_CASE("m-th binomial x^((q+m-1)/m) + ax") {
    auto F11 = make_field(11, 1);
    CHECK(m_binomial_is_pp(5, 0, *F11));  // reduces to the monomial x^3
    CHECK_THROWS_AS(m_binomial_is_pp(4, 1, *F11), BadDivisor);

    for (std::uint32_t q : {7u, 11u, 13u}) {
        auto F = make_field_from_order(q);
        for (std::uint32_t m = 2; m <= q - 1; ++m) {
            if ((q - 1) % m != 0) continue;
            for (Elem a = 0; a < q; ++a) {
                INFO("q=", q, " m=", m, " a=", a);
                CHECK(m_binomial_is_pp(m, a, *F) ==
                      is_pp_bruteforce(m_binomial_poly(F, m, a)).is_pp);
            }
        }
    }

    // m = 2 is exactly the quadratic case
    for (std::uint32_t q : {7u, 11u, 13u, 19u, 27u}) {
        auto F = make_field_from_order(q);
        for (Elem a = 0; a < q; ++a)
            CHECK(m_binomial_is_pp(2, a, *F) == quadratic_binomial_is_pp(a, *F));
    }
}

TEST_CASE("dickson polynomials") {
    auto F7 = make_field(7, 1);
    CHECK(dickson_poly(F7, 2, 1) == Poly(F7, {5, 0, 1}));       // x^2 - 2
    CHECK(dickson_poly(F7, 3, 1) == Poly(F7, {0, 4, 0, 1}));    // x^3 - 3x
    CHECK(dickson_is_pp(5, 1, *F7));  // gcd(5, 48) = 1

    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u}) {
        auto F = make_field_from_order(q);
        for (std::uint32_t k = 1; k <= 24; ++k)
            for (Elem a = 0; a < q; ++a) {
                CHECK(dickson_poly(F, k, a) == dickson_poly_recurrence(F, k, a));
                INFO("q=", q, " k=", k, " a=", a);
                CHECK(dickson_is_pp(k, a, *F) ==
                      is_pp_bruteforce(dickson_poly(F, k, a)).is_pp);
            }
    }
}
