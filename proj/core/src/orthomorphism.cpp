#include "permpoly/orthomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "permpoly/criteria.hpp"
#include "search_engine.hpp"

namespace permpoly {

OrthoReport orthomorphism_report(const Poly& f) {
    OrthoReport rep;
    rep.is_pp = is_pp_bruteforce(f).is_pp;
    Poly shifted = f - Poly::x(f.field_ptr());
    rep.shifted_is_pp = is_pp_bruteforce(shifted).is_pp;
    rep.is_orthomorphism = rep.is_pp && rep.shifted_is_pp;
    rep.is_complete_mapping = is_complete_mapping(f);
    rep.reduced_degree = reduce_mod_xq_minus_x(f).degree();
    return rep;
}

bool is_complete_mapping(const Poly& f) {
    // A complete mapping is itself a permutation whose sum with the identity
    // also permutes; that makes f a complete mapping exactly when f + x is
    // an orthomorphism.
    return is_pp_bruteforce(f).is_pp &&
           is_pp_bruteforce(f + Poly::x(f.field_ptr())).is_pp;
}

ClassificationResult classify_orthomorphisms(FieldPtr field, std::uint32_t n,
                                             unsigned jobs) {
    const Field& F = *field;
    const std::uint32_t q = F.q();
    if (n < 2 || n > q - 1) throw DegreeOutOfRange("need 2 <= n <= q-1");

    auto t0 = std::chrono::steady_clock::now();
    ClassificationResult res;
    res.field = field;
    res.degree = n;
    res.mode = "orthomorphism";

    // Branch A: coefficient of x^(n-1) zero, everything below free.
    detail::Search a;
    a.field = &F;
    a.fixed.assign(n + 1, 0);
    a.slots.push_back({n, 1, Elem(q)});
    for (std::uint32_t e = n - 2; e >= 1 && e < n; --e) a.slots.push_back({e, 0, Elem(q)});
    a.predicate = detail::Predicate::orthomorphism;
    a.jobs = jobs;

    // Branch B: x^(n-1) nonzero, x^(n-2) zero.
    detail::Search b;
    b.field = &F;
    b.fixed.assign(n + 1, 0);
    b.slots.push_back({n, 1, Elem(q)});
    b.slots.push_back({n - 1, 1, Elem(q)});
    for (std::uint32_t e = (n >= 3 ? n - 3 : 0); e >= 1 && e < n; --e)
        b.slots.push_back({e, 0, Elem(q)});
    b.predicate = detail::Predicate::orthomorphism;
    b.jobs = jobs;

    res.search_space = a.total() + b.total();
    if (res.search_space > 100'000'000) throw SearchTooLarge("search space too large");

    res.polynomials = a.run();
    for (auto& v : b.run()) res.polynomials.push_back(std::move(v));
    std::sort(res.polynomials.begin(), res.polynomials.end(), poly_vec_less);
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ClassificationResult classify_all_orthomorphisms(FieldPtr field, std::uint32_t n,
                                                 unsigned jobs) {
    const Field& F = *field;
    const std::uint32_t q = F.q();
    if (n < 1 || n > q - 1) throw DegreeOutOfRange("need 1 <= n <= q-1");

    detail::Search s;
    s.field = &F;
    s.fixed.assign(n + 1, 0);
    s.slots.push_back({n, 1, Elem(q)});
    for (std::uint32_t e = n; e-- > 0;) s.slots.push_back({e, 0, Elem(q)});
    s.predicate = detail::Predicate::orthomorphism;
    s.jobs = jobs;
    if (s.total() > 100'000'000) throw SearchTooLarge("search space too large");

    auto t0 = std::chrono::steady_clock::now();
    ClassificationResult res;
    res.field = field;
    res.degree = n;
    res.mode = "orthomorphism-all";
    res.search_space = s.total();
    res.polynomials = s.run();
    res.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

bool ortho_degree_bound_audit(const FieldPtr& field) {
    const Field& F = *field;
    const std::uint32_t q = F.q();
    if (q <= 2) return true;  // the bound presumes q > 2
    if (q > 9) throw FieldTooLarge("permutation scan capped at q = 9");

    std::vector<Poly> basis = interpolation_basis(field);
    std::vector<Elem> perm(q);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Orthomorphism of the additive group: the difference table must be
        // a permutation as well.
        std::uint32_t seen = 0;
        bool ortho = true;
        for (Elem c = 0; c < q; ++c) {
            Elem d = F.sub(perm[c], c);
            if (seen & (1u << d)) {
                ortho = false;
                break;
            }
            seen |= 1u << d;
        }
        if (!ortho) continue;
        Poly f = Poly::zero(field);
        for (Elem c = 0; c < q; ++c)
            if (perm[c] != 0) f = f + basis[c].scaled(perm[c]);
        if (f.degree() > int(q) - 3) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

std::vector<std::vector<Elem>> ortho_table_f9() {
    FieldPtr f = make_field(3, 2);
    const Field& F = *f;
    std::set<std::vector<Elem>> out;
    Elem two = F.from_int(2);
    std::vector<Elem> roots;
    for (Elem c = 0; c < F.q(); ++c)
        if (F.mul(c, c) == two) roots.push_back(c);

    for (Elem a = 1; a < F.q(); ++a) {
        // a x^6 + a^7 x^4 + a^5 x^2 + 2x
        out.insert({0, two, F.pow(a, 5), 0, F.pow(a, 7), 0, a});
        for (Elem s : roots) {
            // a x^6 + a^7 x^4 - s a^2 x^3 + a^5 x^2 + (2 + s) x
            out.insert({0, F.add(two, s), F.pow(a, 5), F.neg(F.mul(s, F.mul(a, a))),
                        F.pow(a, 7), 0, a});
            // a^5 x^6 + s a^4 x^5 + s a^2 x^3 + a x^2 + 2(1 + s) x
            out.insert({0, F.mul(two, F.add(1, s)), a, F.mul(s, F.mul(a, a)), 0,
                        F.mul(s, F.pow(a, 4)), F.pow(a, 5)});
        }
    }
    std::vector<std::vector<Elem>> v(out.begin(), out.end());
    std::sort(v.begin(), v.end(), poly_vec_less);
    return v;
}

}  // namespace permpoly
