#include "permpoly/criteria.hpp"

#include <algorithm>

namespace permpoly {

namespace {

// Product of two reduced coefficient vectors with exponent folding into
// degree < q.
std::vector<Elem> reduced_mul(const std::vector<Elem>& a, const std::vector<Elem>& b,
                              const Field& F) {
    const std::uint32_t q = F.q();
    std::vector<Elem> out(q, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= q) k = (k - 1) % (q - 1) + 1;
            out[k] = F.add(out[k], F.mul(a[i], b[j]));
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

int vec_degree(const std::vector<Elem>& v) { return int(v.size()) - 1; }

// Exact determinant over the field by Gaussian elimination.
Elem determinant(std::vector<std::vector<Elem>> m, const Field& F) {
    const std::size_t n = m.size();
    Elem det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        Elem inv_p = F.inv(m[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Elem factor = F.mul(m[row][col], inv_p);
            for (std::size_t j = col; j < n; ++j)
                m[row][j] = F.sub(m[row][j], F.mul(factor, m[col][j]));
        }
    }
    return det;
}

}  // namespace

BruteForceResult is_pp_bruteforce(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    std::vector<Elem> first(q, q);  // q = unseen
    for (Elem c = 0; c < q; ++c) {
        Elem v = f.evaluate(c);
        if (first[v] != q) return {false, std::make_pair(first[v], c)};
        first[v] = c;
    }
    return {true, std::nullopt};
}

std::vector<Elem> power_sum_profile(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    std::vector<Elem> table = f.eval_table();
    std::vector<Elem> powers = table;
    std::vector<Elem> profile(q - 1, 0);
    for (std::uint32_t t = 1; t <= q - 1; ++t) {
        Elem sum = 0;
        for (Elem c = 0; c < q; ++c) sum = F.add(sum, powers[c]);
        profile[t - 1] = sum;
        if (t < q - 1)
            for (Elem c = 0; c < q; ++c) powers[c] = F.mul(powers[c], table[c]);
    }
    return profile;
}

bool power_sum_is_pp(const std::vector<Elem>& profile, const Field& F) {
    const Elem minus_one = F.neg(1);
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
        if (profile[i] != 0) return false;
    return !profile.empty() && profile.back() == minus_one;
}

HermiteResult hermite_test(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    if (q < 3) throw DegreeOutOfRange("hermite criterion needs q >= 3");

    HermiteResult res;
    std::uint32_t roots = 0;
    for (Elem c = 0; c < q; ++c)
        if (f.evaluate(c) == 0) ++roots;
    res.exactly_one_root = roots == 1;

    std::vector<Elem> fr = reduce_mod_xq_minus_x(f).coeffs();
    std::vector<Elem> power{1};
    res.degree_condition = true;
    for (std::uint32_t t = 1; t <= q - 1; ++t) {
        power = reduced_mul(power, fr, F);
        if (t <= q - 2 && t % F.p() != 0 && vec_degree(power) > int(q) - 2 &&
            res.degree_condition) {
            res.degree_condition = false;
            res.offending_exponent = t;
        }
    }
    res.top_power_monic = vec_degree(power) == int(q) - 1 && power.back() == 1;
    res.is_pp = res.degree_condition && res.top_power_monic;
    return res;
}

Elem hermite_power_coefficient(const Poly& f, std::uint32_t t) {
    const std::uint32_t q = f.field().q();
    if (t < 1 || t > q - 1) throw DegreeOutOfRange("exponent out of range");
    Poly power = pow_mod_xq_minus_x(f, t);
    return power.coeff(q - 1);
}

RaussnitzResult raussnitz_test(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    const std::uint32_t n = q - 1;
    if (f.degree() > int(q) - 2) throw DegreeTooHigh("reduce to degree <= q-2 first");

    // Circulant with first row (a_0, ..., a_{q-2}).
    std::vector<std::vector<Elem>> m(n, std::vector<Elem>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            m[i][j] = f.coeff((j + n - i) % n);

    // Similarity reduction to upper Hessenberg form.
    for (std::uint32_t col = 0; col + 2 < n; ++col) {
        std::uint32_t pivot = col + 1;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        if (pivot != col + 1) {
            std::swap(m[pivot], m[col + 1]);
            for (std::uint32_t i = 0; i < n; ++i) std::swap(m[i][pivot], m[i][col + 1]);
        }
        Elem inv_p = F.inv(m[col + 1][col]);
        for (std::uint32_t row = col + 2; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Elem t = F.mul(m[row][col], inv_p);
            for (std::uint32_t j = 0; j < n; ++j)
                m[row][j] = F.sub(m[row][j], F.mul(t, m[col + 1][j]));
            for (std::uint32_t i = 0; i < n; ++i)
                m[i][col + 1] = F.add(m[i][col + 1], F.mul(t, m[i][row]));
        }
    }

    // Characteristic polynomials of the leading minors of a Hessenberg
    // matrix, by expansion along the last column.
    FieldPtr field = f.field_ptr();
    std::vector<Poly> p;
    p.push_back(Poly::constant(field, 1));
    for (std::uint32_t k = 1; k <= n; ++k) {
        Poly x_minus_d(field, {F.neg(m[k - 1][k - 1]), 1});
        Poly acc = x_minus_d * p[k - 1];
        Elem subdiag = 1;
        for (std::uint32_t i = k - 1; i >= 1; --i) {
            subdiag = F.mul(subdiag, m[i][i - 1]);
            Elem coeff = F.mul(m[i - 1][k - 1], subdiag);
            if (coeff != 0) acc = acc - p[i - 1].scaled(coeff);
        }
        p.push_back(acc);
    }

    // (x - a_0)^(q-1) - 1, computed as a plain power.
    Poly expected = Poly::constant(field, 1);
    {
        Poly sq(field, {F.neg(f.coeff(0)), 1});
        std::uint32_t e = q - 1;
        while (e > 0) {
            if (e & 1) expected = expected * sq;
            sq = sq * sq;
            e >>= 1;
        }
        expected = expected - Poly::constant(field, 1);
    }

    RaussnitzResult res;
    res.char_poly = p[n].coeffs();
    res.expected_poly = expected.coeffs();
    res.is_pp = res.char_poly == res.expected_poly;
    return res;
}

ResultantResult resultant_test(const Poly& f0) {
    const Field& F = f0.field();
    const std::uint32_t q = F.q();
    if (f0.degree() < 1) throw ConstantInput("resultant criterion needs degree >= 1");
    Poly f = reduce_mod_xq_minus_x(f0);

    ResultantResult res;
    if (f.degree() < 1) {
        // Constant function: pick any point other than the value.
        res.is_pp = false;
        res.witness_point = (f.coeff(0) + 1) % q;
        return res;
    }
    const std::uint32_t n = std::uint32_t(f.degree());

    // Sylvester matrix of x^q - x (monic, degree q) and f - y0 (degree n):
    // n rows of the first, q rows of the second, both descending.
    auto syl_det = [&](const Field& K, const std::vector<Elem>& fc_desc, Elem y0) {
        const std::uint32_t N = q + n;
        std::vector<std::vector<Elem>> m(N, std::vector<Elem>(N, 0));
        for (std::uint32_t row = 0; row < n; ++row) {
            m[row][row] = 1;                       // x^q
            m[row][row + q - 1] = K.neg(1);        // -x
        }
        for (std::uint32_t row = 0; row < q; ++row)
            for (std::uint32_t j = 0; j <= n; ++j) {
                Elem c = fc_desc[j];
                if (j == n) c = K.sub(c, y0);  // constant coefficient picks up -y0
                m[n + row][row + j] = c;
            }
        return determinant(std::move(m), K);
    };

    std::vector<Elem> fc_desc(f.coeffs().rbegin(), f.coeffs().rend());
    for (Elem y0 = 0; y0 < q; ++y0) {
        if (syl_det(F, fc_desc, y0) != 0) {
            res.is_pp = false;
            res.witness_point = y0;
            return res;
        }
    }

    // One more point from F_{q^2}, where the correction (-1)^q (y^q - y)
    // no longer vanishes.
    FieldPtr ext = make_field(F.p(), 2 * F.r());
    std::vector<Elem> emb = subfield_embedding(F, *ext);
    std::vector<bool> in_base(ext->q(), false);
    for (Elem v : emb) in_base[v] = true;
    Elem y1 = 0;
    while (in_base[y1]) ++y1;

    std::vector<Elem> fc_ext(fc_desc.size());
    for (std::size_t i = 0; i < fc_desc.size(); ++i) fc_ext[i] = emb[fc_desc[i]];
    Elem det = syl_det(*ext, fc_ext, y1);
    Elem corr = ext->sub(ext->pow(y1, q), y1);
    if (q % 2 == 1) corr = ext->neg(corr);
    Elem g_f = ext->sub(det, corr);
    if (g_f != 0) {
        res.is_pp = false;
        res.witness_point = y1;
        res.witness_in_extension = true;
    } else {
        res.is_pp = true;
    }
    return res;
}

ValueSetStats turnwald_stats(const Poly& f0) {
    const Field& F = f0.field();
    const std::uint32_t q = F.q();
    Poly f = reduce_mod_xq_minus_x(f0);
    if (f.degree() < 1 || f.degree() >= int(q))
        throw DegreeOutOfRange("need 1 <= deg f < q");

    ValueSetStats s;
    s.n = std::uint32_t(f.degree());
    std::vector<Elem> table = f.eval_table();

    std::vector<bool> seen(q, false);
    for (Elem v : table)
        if (!seen[v]) {
            seen[v] = true;
            ++s.v;
        }

    // prod = PROD_c (x - f(c)); s_k = (-1)^k [x^{q-k}] prod, so the zero
    // pattern of s_k is the zero pattern of the high coefficients.
    std::vector<Elem> prod{1};
    prod.reserve(q + 1);
    for (Elem v : table) {
        std::vector<Elem> next(prod.size() + 1, 0);
        Elem mv = F.neg(v);
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], prod[i]);
            next[i] = F.add(next[i], F.mul(prod[i], mv));
        }
        prod = std::move(next);
    }
    for (std::uint32_t k = 1; k <= q; ++k) {
        if (prod[q - k] != 0) {
            s.u = k;
            break;
        }
    }

    std::vector<Elem> profile = power_sum_profile(f);
    for (std::uint32_t k = 1; k <= q - 1; ++k) {
        if (profile[k - 1] != 0) {
            s.w = k;
            break;
        }
    }
    return s;
}

std::array<bool, 10> turnwald_items(const ValueSetStats& s, std::uint32_t q0, bool is_pp) {
    const std::int64_t n = s.n, v = s.v, q = q0;
    const bool u_fin = s.u.has_value(), w_fin = s.w.has_value();
    const std::int64_t u = u_fin ? *s.u : 0, w = w_fin ? *s.w : 0;
    std::array<bool, 10> item{};
    item[0] = is_pp;
    item[1] = u_fin && u == q - 1;
    item[2] = !u_fin || n * u > q * (n - 1);          // u > q - q/n
    item[3] = !u_fin || u + v > q;                    // u > q - v
    item[4] = n * v > q * n - (q - 1);                // v > q - (q-1)/n
    item[5] = w_fin && w == q - 1;
    item[6] = w_fin && 3 * w > 2 * q - 3;             // 2q/3 - 1 < w
    item[7] = w_fin && n * w > q * n - (q + 1);       // q - (q+1)/n < w
    item[8] = w_fin && (!u_fin || u + w >= q);        // q - u <= w
    item[9] = w_fin && (!u_fin || 2 * u > q - 1);     // u > (q-1)/2
    return item;
}

WanBoundResult wan_bound_check(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    if (f.degree() < 1) throw ConstantInput("bound needs degree >= 1");
    const std::uint32_t n = std::uint32_t(f.degree());

    WanBoundResult res;
    std::vector<bool> seen(q, false);
    for (Elem c = 0; c < q; ++c) {
        Elem v = f.evaluate(c);
        if (!seen[v]) {
            seen[v] = true;
            ++res.v;
        }
    }
    res.bound = q - (q - 1 + n - 1) / n;  // q - ceil((q-1)/n)
    res.is_pp = res.v == q;
    res.satisfied = res.is_pp || res.v <= res.bound;
    return res;
}

MorenoResult moreno_test(const Poly& f) {
    const Field& F = f.field();
    const FieldPtr field = f.field_ptr();
    const std::uint32_t q = F.q();
    MorenoResult res;
    res.condition1 = true;
    res.condition2 = true;
    const Poly one = Poly::constant(field, 1);
    for (Elem c = 0; c < q && res.condition1; ++c) {
        Poly shifted = f - Poly::constant(field, c);
        if (pow_mod_xq_minus_x(shifted, q - 1) == one) {
            res.condition1 = false;
            res.witness_c = c;
        }
    }
    for (Elem c = 0; c < q && res.condition2; ++c) {
        Poly lhs = pow_mod_xq_minus_x(f - Poly::constant(field, f.evaluate(c)), q - 1);
        Poly rhs = pow_mod_xq_minus_x(Poly(field, {F.neg(c), 1}), q - 1);
        if (lhs != rhs) {
            res.condition2 = false;
            if (!res.witness_c) res.witness_c = c;
        }
    }
    return res;
}

const std::vector<std::string>& criterion_names() {
    static const std::vector<std::string> names = {
        "brute", "power-sum", "hermite", "raussnitz", "resultant", "turnwald", "moreno"};
    return names;
}

CriterionReport run_criteria(const Poly& f, const std::set<std::string>& which) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    auto wanted = [&](const std::string& name) {
        return which.empty() || which.count(name) > 0;
    };

    CriterionReport rep{f, false, {}, std::nullopt, std::nullopt};
    BruteForceResult brute = is_pp_bruteforce(f);
    rep.is_pp = brute.is_pp;
    if (wanted("brute")) {
        CriterionOutcome o{brute.is_pp, ""};
        if (brute.collision)
            o.witness = "collision at codes " + std::to_string(brute.collision->first) +
                        "," + std::to_string(brute.collision->second);
        rep.per_criterion.emplace_back("brute", std::move(o));
    }

    Poly reduced = reduce_mod_xq_minus_x(f);

    if (wanted("power-sum")) {
        std::vector<Elem> profile = power_sum_profile(f);
        rep.per_criterion.emplace_back(
            "power-sum", CriterionOutcome{power_sum_is_pp(profile, F), ""});
    }
    if (wanted("hermite") && q >= 3) {
        HermiteResult h = hermite_test(f);
        CriterionOutcome o{h.is_pp, ""};
        if (h.offending_exponent)
            o.witness = "offending exponent " + std::to_string(*h.offending_exponent);
        else if (!h.top_power_monic)
            o.witness = "top power not monic of degree q-1";
        if (h.exactly_one_root != h.top_power_monic)
            o.witness += " [one-root form disagrees]";
        rep.per_criterion.emplace_back("hermite", std::move(o));
    }
    if (wanted("raussnitz")) {
        if (reduced.degree() <= int(q) - 2) {
            RaussnitzResult r = raussnitz_test(reduced);
            CriterionOutcome o{r.is_pp, ""};
            if (!r.is_pp) o.witness = "characteristic polynomial differs";
            rep.per_criterion.emplace_back("raussnitz", std::move(o));
        } else if (q > 2) {
            // Reduced degree q-1 already rules the permutation property out.
            rep.per_criterion.emplace_back(
                "raussnitz", CriterionOutcome{false, "degree q-1 after reduction"});
        }
    }
    if (wanted("resultant") && reduced.degree() >= 1) {
        ResultantResult r = resultant_test(reduced);
        CriterionOutcome o{r.is_pp, ""};
        if (r.witness_point)
            o.witness = std::string("nonzero residual at ") +
                        (r.witness_in_extension ? "extension point " : "point ") +
                        std::to_string(*r.witness_point);
        rep.per_criterion.emplace_back("resultant", std::move(o));
    }
    if (wanted("turnwald") && reduced.degree() >= 1 && reduced.degree() < int(q)) {
        ValueSetStats s = turnwald_stats(reduced);
        rep.stats = s;
        auto items = turnwald_items(s, q, brute.is_pp);
        bool all_same = true;
        for (bool b : items)
            if (b != items[0]) all_same = false;
        CriterionOutcome o{items[1], all_same ? "" : "equivalence items disagree"};
        rep.per_criterion.emplace_back("turnwald", std::move(o));
        rep.wan = wan_bound_check(reduced);
    }
    if (wanted("moreno")) {
        MorenoResult m = moreno_test(f);
        std::string w;
        if (m.witness_c) w = "witness c = " + std::to_string(*m.witness_c);
        rep.per_criterion.emplace_back("moreno-1", CriterionOutcome{m.condition1, w});
        rep.per_criterion.emplace_back("moreno-2", CriterionOutcome{m.condition2, w});
    }
    return rep;
}

}  // namespace permpoly
