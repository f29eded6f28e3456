#include "permpoly/audits.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "permpoly/classify.hpp"
#include "permpoly/criteria.hpp"
#include "permpoly/families.hpp"
#include "permpoly/lucas.hpp"
#include "permpoly/orthomorphism.hpp"
#include "permpoly/table_families.hpp"

namespace permpoly {

namespace {

std::string plural(std::uint64_t n, const char* what) {
    return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

void for_each_monic(const FieldPtr& field, std::uint32_t max_degree,
                    const std::function<void(const Poly&)>& fn) {
    const std::uint32_t q = field->q();
    for (std::uint32_t n = 2; n <= max_degree; ++n) {
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
            fn(Poly(field, coeffs));
        }
    }
}

}  // namespace

AuditResult audit_mullen() {
    AuditResult out{"mullen", "6", {}};
    auto F = make_field(3, 3);
    const std::uint32_t q = F->q(), n = 6;

    std::uint32_t pp_count = 0;
    std::uint32_t full_value_sets = 0;
    for (Elem a = 1; a < q; ++a) {
        std::vector<Elem> coeffs(7, 0);
        coeffs[5] = a;
        coeffs[2] = F->neg(F->pow(a, 4));
        coeffs[6] = 1;
        Poly f(F, coeffs);
        if (is_pp_bruteforce(f).is_pp) ++pp_count;
        if (wan_bound_check(f).v == q) ++full_value_sets;
    }
    out.checks.push_back({"x^6 + a x^5 - a^4 x^2 permutes for all 26 nonzero a",
                          pp_count == 26, plural(pp_count, "permutation")});
    const std::uint32_t bound = q - (q - 1 + n - 1) / n;
    out.checks.push_back({"q exceeds n(n-2): 27 > 24", q > n * (n - 2),
                          std::to_string(q) + " > " + std::to_string(n * (n - 2))});
    out.checks.push_back({"value set size 27 exceeds the bound 22",
                          full_value_sets == 26 && q > bound,
                          "|V_f| = 27 for all 26 members; bound = " + std::to_string(bound)});
    return out;
}

AuditResult audit_wilson(std::uint32_t q) {
    AuditResult out{"wilson", "9", {}};
    auto F = make_field_from_order(q);
    WilsonCount w = wilson_count(F, q <= 7);
    out.checks.push_back({"q! = q(q-1)(1 + k2 + q k1)", w.identity_holds,
                          "k1 = " + std::to_string(w.k1) + ", k2 = " + std::to_string(w.k2)});
    if (w.exhaustive_pp_count) {
        std::uint64_t fact = 1;
        for (std::uint32_t i = 2; i <= q; ++i) fact *= i;
        out.checks.push_back({"exhaustive map scan finds exactly q! bijections",
                              *w.exhaustive_pp_count == fact,
                              std::to_string(*w.exhaustive_pp_count) + " of " +
                                  std::to_string(fact)});
    }
    return out;
}

AuditResult audit_wan_bound(std::uint32_t q, std::uint32_t max_degree) {
    AuditResult out{"wan-bound", "8", {}};
    auto F = make_field_from_order(q);
    std::uint64_t violations = 0, tested = 0, tight = 0;
    for_each_monic(F, std::min(max_degree, q - 1), [&](const Poly& f) {
        WanBoundResult w = wan_bound_check(f);
        if (w.is_pp) return;
        ++tested;
        if (!w.satisfied) ++violations;
        if (w.v == w.bound) ++tight;
    });
    out.checks.push_back({"no bound violation among non-permutations", violations == 0,
                          plural(tested, "polynomial") + ", " + plural(tight, "tight case")});
    return out;
}

AuditResult audit_tables(std::uint32_t q, std::uint32_t degree, unsigned jobs) {
    AuditResult out{"tables", degree == 6 ? (q == 11 ? "1" : (q == 9 ? "2" : "3")) : "5", {}};
    auto F = make_field_from_order(q);
    auto expansion = expand_table_union(F, degree);
    auto search = classify_normalized(F, degree, Prefilter::none, jobs);
    bool equal = expansion == search.polynomials;
    out.checks.push_back(
        {"classification equals the table expansion", equal,
         "search " + std::to_string(search.polynomials.size()) + ", expansion " +
             std::to_string(expansion.size()) + ", rows " +
             std::to_string(table_rows_for(*F, degree).size())});
    return out;
}

AuditResult audit_ortho(unsigned jobs) {
    AuditResult out{"ortho", "10", {}};
    auto F9 = make_field(3, 2);
    auto res9 = classify_orthomorphisms(F9, 6, jobs);
    auto table = ortho_table_f9();
    out.checks.push_back({"degree-6 orthomorphism classification matches the families",
                          res9.polynomials == table,
                          "search " + std::to_string(res9.polynomials.size()) +
                              ", expansion " + std::to_string(table.size())});

    auto res27 = classify_orthomorphisms(make_field(3, 3), 6, jobs);
    out.checks.push_back({"no degree-6 orthomorphism over the 27-element field",
                          res27.polynomials.empty(),
                          plural(res27.polynomials.size(), "member")});

    for (std::uint32_t q : {5u, 7u}) {
        bool ok = ortho_degree_bound_audit(make_field_from_order(q));
        out.checks.push_back({"every orthomorphism of F_" + std::to_string(q) +
                                  " reduces to degree <= q-3",
                              ok, q == 5 ? "120 permutations" : "5040 permutations"});
    }
    return out;
}

AuditResult audit_nonexistence(unsigned jobs) {
    AuditResult out{"nonexistence", "4", {}};
    for (std::uint32_t q : {13u, 17u, 23u, 25u}) {
        auto count = classify_normalized(make_field_from_order(q), 6,
                                         Prefilter::none, jobs)
                         .polynomials.size();
        out.checks.push_back({"no degree-6 permutation polynomial over F_" + std::to_string(q),
                              count == 0, plural(count, "member")});
    }
    auto count27 = classify_normalized(make_field(3, 3), 6, Prefilter::none, jobs)
                       .polynomials.size();
    out.checks.push_back({"the degree-6 classification over F_27 is nonempty",
                          count27 == 702, plural(count27, "member")});
    for (std::uint32_t q : {5u, 7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
        auto count = classify_normalized(make_field_from_order(q), 2,
                                         Prefilter::none, jobs)
                         .polynomials.size();
        out.checks.push_back({"no degree-2 permutation polynomial over odd F_" +
                                  std::to_string(q),
                              count == 0, plural(count, "member")});
    }
    return out;
}

AuditResult audit_criteria_agreement(std::uint64_t seed, std::size_t random_per_field) {
    AuditResult out{"criteria-agreement", "7", {}};

    std::uint64_t disagreements = 0, tested = 0;
    auto check_poly = [&](const Poly& f) {
        ++tested;
        CriterionReport rep = run_criteria(f);
        for (const auto& [name, outcome] : rep.per_criterion)
            if (outcome.verdict != rep.is_pp) ++disagreements;
        if (rep.stats) {
            auto items = turnwald_items(*rep.stats, f.field().q(), rep.is_pp);
            for (bool item : items)
                if (item != rep.is_pp) ++disagreements;
        }
    };

    for (std::uint32_t q : {5u, 7u}) for_each_monic(make_field_from_order(q), 4, check_poly);
    for_each_monic(make_field(3, 2), 3, check_poly);

    std::mt19937_64 rng(seed);
    for (std::uint32_t q : {11u, 13u}) {
        auto F = make_field_from_order(q);
        std::uniform_int_distribution<Elem> code(0, q - 1);
        for (std::size_t i = 0; i < random_per_field; ++i) {
            std::vector<Elem> coeffs(7);
            for (Elem& c : coeffs) c = code(rng);
            Poly f(F, coeffs);
            if (f.degree() < 1) continue;
            check_poly(f);
        }
    }
    out.checks.push_back({"all criteria agree with brute force", disagreements == 0,
                          plural(tested, "polynomial") + ", " +
                              plural(disagreements, "disagreement")});
    return out;
}

AuditResult audit_families() {
    AuditResult out{"families", "11", {}};

    std::uint64_t bad_quadratic = 0;
    for (std::uint32_t q : {7u, 9u, 11u, 13u, 17u, 19u, 23u, 25u, 27u}) {
        auto F = make_field_from_order(q);
        for (Elem a = 0; a < q; ++a)
            if (quadratic_binomial_is_pp(a, *F) !=
                is_pp_bruteforce(quadratic_binomial_poly(F, a)).is_pp)
                ++bad_quadratic;
    }
    out.checks.push_back({"quadratic binomial criterion matches brute force",
                          bad_quadratic == 0, plural(bad_quadratic, "disagreement")});

    std::uint64_t bad_dickson = 0;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
        auto F = make_field_from_order(q);
        for (std::uint32_t k = 1; k <= 24; ++k)
            for (Elem a = 1; a < q; ++a) {
                Poly g = dickson_poly(F, k, a);
                if (g != dickson_poly_recurrence(F, k, a)) ++bad_dickson;
                if (dickson_is_pp(k, a, *F) != is_pp_bruteforce(g).is_pp) ++bad_dickson;
            }
    }
    out.checks.push_back({"dickson criterion and recurrence match brute force",
                          bad_dickson == 0, plural(bad_dickson, "disagreement")});

    std::uint64_t bad_mbin = 0;
    for (std::uint32_t q : {7u, 11u, 13u}) {
        auto F = make_field_from_order(q);
        for (std::uint32_t m = 2; m < q; ++m) {
            if ((q - 1) % m != 0) continue;
            for (Elem a = 0; a < q; ++a)
                if (m_binomial_is_pp(m, a, *F) !=
                    is_pp_bruteforce(m_binomial_poly(F, m, a)).is_pp)
                    ++bad_mbin;
        }
    }
    out.checks.push_back({"m-th binomial criterion matches brute force", bad_mbin == 0,
                          plural(bad_mbin, "disagreement")});

    std::uint64_t bad_linearized = 0;
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
                    if (p_polynomial_is_pp(L) != is_pp_bruteforce(L).is_pp)
                        ++bad_linearized;
                }
    }
    for (auto [p, m] : {std::pair{2u, 2u}, {3u, 2u}}) {
        auto base = make_field(p, 1);
        auto ext = make_field(p, m);
        for (Elem a0 = 0; a0 < ext->q(); ++a0)
            for (Elem a1 = 0; a1 < ext->q(); ++a1) {
                std::vector<Elem> coeffs{a0, a1};
                Poly L = q_polynomial_realize(*base, ext, coeffs);
                bool brute = !L.is_zero() && is_pp_bruteforce(L).is_pp;
                if (q_polynomial_is_pp_det(*base, *ext, coeffs) != brute) ++bad_linearized;
                if (a0 < p && a1 < p &&
                    q_polynomial_is_pp_gcd(*base, 2, {a0, a1}) != brute)
                    ++bad_linearized;
            }
    }
    out.checks.push_back({"linearized routes match brute force", bad_linearized == 0,
                          plural(bad_linearized, "disagreement")});
    return out;
}

AuditResult audit_lucas() {
    AuditResult out{"lucas", "12", {}};

    // Exact oracle: chained binomial coefficients computed over the integers.
    auto binom = [](std::uint64_t n, std::uint64_t k) {
        if (k > n) return std::uint64_t(0);
        k = std::min(k, n - k);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
        return acc;
    };
    auto oracle = [&](const std::vector<std::uint64_t>& ks, std::uint32_t p) {
        std::uint64_t partial = 0, result = 1;
        for (std::uint64_t k : ks) {
            partial += k;
            result = result * (binom(partial, k) % p) % p;
        }
        return std::uint32_t(result);
    };

    std::uint64_t mismatches = 0, tested = 0;
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint64_t t = 0; t <= 30; ++t)
            for (std::uint64_t k1 = 0; k1 <= t; ++k1)
                for (std::uint64_t k2 = 0; k1 + k2 <= t; ++k2)
                    for (std::uint64_t k3 = 0; k1 + k2 + k3 <= t; ++k3)
                        for (std::uint64_t k4 = 0; k1 + k2 + k3 + k4 <= t; ++k4) {
                            std::uint64_t k5 = t - k1 - k2 - k3 - k4;
                            std::vector<std::uint64_t> ks{k1, k2, k3, k4, k5};
                            ++tested;
                            if (multinomial_mod_p(t, ks, p) != oracle(ks, p)) ++mismatches;
                        }
    }
    out.checks.push_back({"digit method matches exact multinomials", mismatches == 0,
                          plural(tested, "coefficient") + ", " +
                              std::to_string(mismatches) + " mismatched"});
    out.checks.push_back({"anchor value (17; 4,0,0,1,12) = 1 mod 3",
                          multinomial_mod_p(17, {4, 0, 0, 1, 12}, 3) == 1, ""});
    return out;
}

const std::vector<std::string>& audit_names() {
    static const std::vector<std::string> names = {
        "mullen", "wilson", "wan-bound", "tables", "ortho", "nonexistence",
        "criteria-agreement"};
    return names;
}

AuditResult run_audit(const std::string& name, std::uint32_t q, std::uint32_t degree,
                      std::uint32_t max_degree, std::uint64_t seed, unsigned jobs) {
    if (name == "mullen") return audit_mullen();
    if (name == "wilson") return audit_wilson(q);
    if (name == "wan-bound") return audit_wan_bound(q, max_degree);
    if (name == "tables") return audit_tables(q, degree, jobs);
    if (name == "ortho") return audit_ortho(jobs);
    if (name == "nonexistence") return audit_nonexistence(jobs);
    if (name == "criteria-agreement") return audit_criteria_agreement(seed);
    throw UnknownAudit("no audit named " + name);
}

}  // namespace permpoly
