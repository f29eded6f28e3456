#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "permpoly/classify.hpp"
#include "permpoly/criteria.hpp"

using namespace permpoly;

namespace {

// All monic f with f(0) = 0 and 1 <= deg f <= max_deg.
std::vector<Poly> monic_corpus(const FieldPtr& field, std::uint32_t max_deg) {
    std::vector<Poly> out;
    const std::uint32_t q = field->q();
    for (std::uint32_t n = 1; n <= max_deg; ++n) {
        std::vector<Elem> coeffs(n + 1, 0);
        coeffs[n] = 1;
        std::uint64_t inner = 1;
        for (std::uint32_t i = 1; i < n; ++i) inner *= q;
        for (std::uint64_t idx = 0; idx < inner; ++idx) {
            std::uint64_t v = idx;
            for (std::uint32_t i = 1; i < n; ++i) {
                coeffs[i] = Elem(v % q);
                v /= q;
            }
            out.emplace_back(field, coeffs);
        }
    }
    return out;
}

void check_all_agree(const Poly& f) {
    CriterionReport rep = run_criteria(f);
    for (const auto& [name, outcome] : rep.per_criterion) {
        INFO("criterion ", name, " on ", f.to_string(), " over q=", f.field().q());
        CHECK(outcome.verdict == rep.is_pp);
    }
    if (rep.stats) {
        auto items = turnwald_items(*rep.stats, f.field().q(), rep.is_pp);
        for (std::size_t i = 0; i < items.size(); ++i) {
            INFO("equivalence item ", i + 1, " on ", f.to_string());
            CHECK(items[i] == rep.is_pp);
        }
    }
    if (rep.wan) CHECK(rep.wan->satisfied);
}

}  // namespace

TEST_CASE("brute force with collision witness") {
    auto F11 = make_field(11, 1);
    Poly cyc(F11, {1, 1, 5, 2, 6, 8, 9, 4, 7, 3});
    CHECK(is_pp_bruteforce(cyc).is_pp);

    Poly h(F11, {5, 3, 1});  // x^2 + 3x + 5, value 1 at x = 3 and x = 5
    auto res = is_pp_bruteforce(h);
    CHECK_FALSE(res.is_pp);
    REQUIRE(res.collision.has_value());
    CHECK(res.collision->first == 3);
    CHECK(res.collision->second == 5);

    CHECK(is_pp_bruteforce(Poly::x(F11)).is_pp);
}

TEST_CASE("power sum profile") {
    auto F5 = make_field(5, 1);
    CHECK(power_sum_profile(Poly::x(F5)) == std::vector<Elem>{0, 0, 0, 4});
    CHECK(power_sum_is_pp(power_sum_profile(Poly::x(F5)), *F5));

    auto F7 = make_field(7, 1);
    auto prof = power_sum_profile(Poly::monomial(F7, 2));
    bool some_nonzero = false;
    for (std::size_t i = 0; i + 1 < prof.size(); ++i)
        if (prof[i] != 0) some_nonzero = true;
    CHECK(some_nonzero);

    // constant: q * c^t = 0 in the characteristic, so the whole profile is 0
    auto cprof = power_sum_profile(Poly::constant(F7, 3));
    for (Elem v : cprof) CHECK(v == 0);
    CHECK_FALSE(power_sum_is_pp(cprof, *F7));
}

TEST_CASE("hermite criterion") {
    auto F11 = make_field(11, 1);
    Poly pp(F11, {0, 2, 0, 0, 0, 0, 1});  // x^6 + 2x
    auto h = hermite_test(pp);
    CHECK(h.is_pp);
    CHECK(h.exactly_one_root);
    CHECK(h.exactly_one_root == h.top_power_monic);

    auto F7 = make_field(7, 1);
    auto h2 = hermite_test(Poly::monomial(F7, 2));
    CHECK_FALSE(h2.is_pp);
    CHECK(h2.offending_exponent == 3);  // x^6 reaches degree q-1

    Poly bad(F11, {0, 3, 0, 0, 0, 0, 1});  // x^6 + 3x
    CHECK_FALSE(hermite_test(bad).is_pp);
    CHECK_FALSE(is_pp_bruteforce(bad).is_pp);
}

TEST_CASE("hermite power coefficient") {
    auto F11 = make_field(11, 1);
    Poly f(F11, {0, 1, 1, 1, 0, 0, 1});  // x^6 + x^3 + x^2 + x
    CHECK(hermite_power_coefficient(f, 3) == 9);

    Poly pp(F11, {0, 2, 0, 0, 0, 0, 1});
    CHECK(hermite_power_coefficient(pp, 3) == 0);
    CHECK(hermite_power_coefficient(pp, 10) == 1);  // top power of any permutation

    // agrees with the negated power sum for arbitrary polynomials
    auto F9 = make_field(3, 2);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Elem> code(0, 8);
    for (int i = 0; i < 20; ++i) {
        std::vector<Elem> c(7);
        for (Elem& v : c) v = code(rng);
        Poly g(F9, c);
        if (g.degree() < 1) continue;
        for (std::uint32_t t = 1; t <= 8; ++t) {
            Elem sum = power_sum_profile(g)[t - 1];
            CHECK(hermite_power_coefficient(g, t) == F9->neg(sum));
        }
    }
}

TEST_CASE("raussnitz criterion") {
    auto F5 = make_field(5, 1);
    auto r = raussnitz_test(Poly::x(F5));
    CHECK(r.is_pp);
    CHECK(r.char_poly == std::vector<Elem>{4, 0, 0, 0, 1});  // x^4 - 1

    CHECK_FALSE(raussnitz_test(Poly::monomial(F5, 2)).is_pp);
    CHECK(raussnitz_test(Poly::monomial(F5, 3)).is_pp);
    CHECK_THROWS_AS(raussnitz_test(Poly::monomial(F5, 4)), DegreeTooHigh);
}

TEST_CASE("resultant criterion") {
    auto F5 = make_field(5, 1);
    CHECK(resultant_test(Poly::x(F5)).is_pp);

    auto F7 = make_field(7, 1);
    Poly notpp(F7, {5, 3, 1});
    auto res = resultant_test(notpp);
    CHECK_FALSE(res.is_pp);
    CHECK(res.witness_point.has_value());
    // x^3 does not permute F_7 (7 = 1 mod 3); the residual must be nonzero
    CHECK_FALSE(resultant_test(Poly::monomial(F7, 3)).is_pp);
    CHECK_FALSE(is_pp_bruteforce(Poly::monomial(F7, 3)).is_pp);
    CHECK(resultant_test(Poly(F7, {0, 3, 0, 0, 1})).is_pp);  // x^4 + 3x permutes
    CHECK_THROWS_AS(resultant_test(Poly::constant(F7, 2)), ConstantInput);
}

TEST_CASE("value set statistics") {
    auto F7 = make_field(7, 1);
    auto s = turnwald_stats(Poly::monomial(F7, 2));
    CHECK(s.v == 4);  // squares mod 7
    REQUIRE(s.u.has_value());
    REQUIRE(s.w.has_value());
    CHECK(*s.u == 3);
    CHECK(*s.w == 3);

    auto pp_stats = turnwald_stats(Poly(F7, {0, 3, 0, 0, 1}));  // x^4 + 3x permutes
    CHECK(pp_stats.v == 7);
    CHECK(pp_stats.u == 6);
    CHECK(pp_stats.w == 6);

    // projection onto a coset map kills every power sum: w stays infinite
    auto F9 = make_field(3, 2);
    Poly proj(F9, {0, F9->neg(1), 0, 1});  // x^3 - x
    auto ps = turnwald_stats(proj);
    CHECK_FALSE(ps.w.has_value());
    CHECK(ps.v == 3);
}

TEST_CASE("wan bound") {
    auto F11 = make_field(11, 1);
    auto w = wan_bound_check(Poly(F11, {5, 3, 1}));
    CHECK(w.v == 6);
    CHECK(w.bound == 6);  // attained with equality
    CHECK(w.satisfied);
    CHECK_FALSE(w.is_pp);

    auto wp = wan_bound_check(Poly(F11, {0, 2, 0, 0, 0, 0, 1}));
    CHECK(wp.is_pp);
    CHECK(wp.v == 11);

    auto F9 = make_field(3, 2);
    auto w9 = wan_bound_check(Poly(F9, {0, F9->neg(1), 0, 1}));
    CHECK(w9.bound == 9 - 3);
    CHECK(w9.v <= 6);
}

TEST_CASE("moreno criterion") {
    auto F5 = make_field(5, 1);
    auto m = moreno_test(Poly::x(F5));
    CHECK(m.condition1);
    CHECK(m.condition2);

    auto F7 = make_field(7, 1);
    auto m2 = moreno_test(Poly::monomial(F7, 2));
    CHECK_FALSE(m2.condition1);
    CHECK(m2.witness_c.has_value());

    auto F11 = make_field(11, 1);
    auto m3 = moreno_test(Poly(F11, {1, 0, 0, 1}));
    CHECK(m3.condition1);
    CHECK(m3.condition2);
}

TEST_CASE("all criteria agree on exhaustive small corpora") {
    for (std::uint32_t q : {5u, 7u}) {
        auto F = make_field_from_order(q);
        for (const Poly& f : monic_corpus(F, 4)) check_all_agree(f);
    }
    auto F9 = make_field(3, 2);
    for (const Poly& f : monic_corpus(F9, 3)) check_all_agree(f);
}

TEST_CASE("all criteria agree on random polynomials over larger prime fields") {
    std::mt19937_64 rng(2024);
    for (std::uint32_t q : {11u, 13u}) {
        auto F = make_field_from_order(q);
        std::uniform_int_distribution<Elem> code(0, q - 1);
        for (int i = 0; i < 150; ++i) {
            std::vector<Elem> coeffs(7);
            for (Elem& c : coeffs) c = code(rng);
            Poly f(F, coeffs);
            if (f.degree() < 1) continue;
            check_all_agree(f);
        }
    }
}

TEST_CASE("no permutation polynomial of degree n when q = 1 mod n") {
    for (auto [q, n] : {std::pair{7u, 3u}, {13u, 6u}, {25u, 6u}, {13u, 4u}, {9u, 4u}}) {
        auto res = classify_normalized(make_field_from_order(q), n);
        INFO("q=", q, " n=", n);
        CHECK(res.polynomials.empty());
    }
}

TEST_CASE("permutations reduce to degree at most q-2") {
    for (std::uint32_t q : {5u, 7u, 9u}) {
        auto F = make_field_from_order(q);
        for (const Poly& f : monic_corpus(F, 5)) {
            if (!is_pp_bruteforce(f).is_pp) continue;
            CHECK(reduce_mod_xq_minus_x(f).degree() <= int(q) - 2);
        }
    }
}
