#include "permpoly/classify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include "permpoly/criteria.hpp"
#include "search_engine.hpp"

namespace permpoly {

namespace detail {

namespace {

constexpr std::uint64_t kSearchLimit = 100'000'000;  // 1e8 candidates

struct Worker {
    const Search& s;
    std::uint64_t begin, end;
    std::vector<std::vector<Elem>> found;

    void operator()() {
        const Field& F = *s.field;
        const std::uint32_t q = F.q();
        const std::size_t nslots = s.slots.size();

        if (nslots == 0) {
            // Single fixed candidate.
            if (begin == 0 && end == 1) test_fixed();
            return;
        }

        std::vector<Elem> val(nslots);
        {
            std::uint64_t idx = begin;
            for (std::size_t i = nslots; i-- > 0;) {
                std::uint64_t size = s.slots[i].hi - s.slots[i].lo;
                val[i] = s.slots[i].lo + Elem(idx % size);
                idx /= size;
            }
        }

        std::vector<std::vector<Elem>> pows(nslots, std::vector<Elem>(q));
        for (std::size_t i = 0; i < nslots; ++i)
            for (Elem c = 0; c < q; ++c)
                pows[i][c] = F.pow(c, s.slots[i].exponent);

        // lvl[i] = fixed part plus the contributions of slots 0..i-1; the
        // last slot is folded into the test loop itself.
        std::vector<std::vector<Elem>> lvl(nslots, std::vector<Elem>(q));
        for (Elem c = 0; c < q; ++c) {
            Elem acc = 0;
            for (std::size_t k = s.fixed.size(); k-- > 0;)
                acc = F.add(F.mul(acc, c), s.fixed[k]);
            lvl[0][c] = acc;
        }
        auto rebuild = [&](std::size_t i) {  // lvl[i+1] from lvl[i]
            for (Elem c = 0; c < q; ++c)
                lvl[i + 1][c] = F.add(lvl[i][c], F.mul(val[i], pows[i][c]));
        };
        for (std::size_t i = 0; i + 1 < nslots; ++i) rebuild(i);

        const std::size_t words = (q + 63) / 64;
        std::vector<std::uint64_t> mask1(words), mask2(words);
        const std::vector<Elem>& top = lvl[nslots - 1];
        const std::vector<Elem>& pw = pows[nslots - 1];
        std::vector<Elem> scratch;

        for (std::uint64_t idx = begin; idx < end; ++idx) {
            bool skip = false;
            if (s.pre_reject) {
                assemble(val, scratch);
                skip = s.pre_reject(scratch);
            }
            if (!skip) {
                const Elem a_last = val[nslots - 1];
                bool ok = true;
                for (std::size_t w = 0; w < words; ++w) mask1[w] = 0;
                if (s.predicate == Predicate::permutation) {
                    for (Elem c = 0; c < q; ++c) {
                        Elem v = F.add(top[c], F.mul(a_last, pw[c]));
                        std::uint64_t bit = 1ull << (v & 63);
                        if (mask1[v >> 6] & bit) {
                            ok = false;
                            break;
                        }
                        mask1[v >> 6] |= bit;
                    }
                } else {
                    for (std::size_t w = 0; w < words; ++w) mask2[w] = 0;
                    for (Elem c = 0; c < q; ++c) {
                        Elem v = F.add(top[c], F.mul(a_last, pw[c]));
                        std::uint64_t bit = 1ull << (v & 63);
                        if (mask1[v >> 6] & bit) {
                            ok = false;
                            break;
                        }
                        mask1[v >> 6] |= bit;
                        Elem d = F.sub(v, c);
                        std::uint64_t bit2 = 1ull << (d & 63);
                        if (mask2[d >> 6] & bit2) {
                            ok = false;
                            break;
                        }
                        mask2[d >> 6] |= bit2;
                    }
                }
                if (ok) {
                    assemble(val, scratch);
                    found.push_back(scratch);
                }
            }
            if (idx + 1 == end) break;
            std::size_t i = nslots;
            while (i-- > 0) {
                if (++val[i] < s.slots[i].hi) break;
                val[i] = s.slots[i].lo;
            }
            for (std::size_t k = i; k + 1 < nslots; ++k) rebuild(k);
        }
    }

    void assemble(const std::vector<Elem>& val, std::vector<Elem>& out) const {
        out = s.fixed;
        for (std::size_t i = 0; i < s.slots.size(); ++i)
            out[s.slots[i].exponent] = val[i];
    }

    void test_fixed() {
        const Field& F = *s.field;
        const std::uint32_t q = F.q();
        std::vector<bool> seen1(q, false), seen2(q, false);
        for (Elem c = 0; c < q; ++c) {
            Elem acc = 0;
            for (std::size_t k = s.fixed.size(); k-- > 0;)
                acc = F.add(F.mul(acc, c), s.fixed[k]);
            if (seen1[acc]) return;
            seen1[acc] = true;
            if (s.predicate == Predicate::orthomorphism) {
                Elem d = F.sub(acc, c);
                if (seen2[d]) return;
                seen2[d] = true;
            }
        }
        found.push_back(s.fixed);
    }
};

}  // namespace

std::uint64_t Search::total() const {
    std::uint64_t t = 1;
    for (const Slot& s : slots) t *= s.hi - s.lo;
    return t;
}

std::vector<std::vector<Elem>> Search::run() const {
    const std::uint64_t n = total();
    unsigned nthreads = jobs == 0 ? std::thread::hardware_concurrency() : jobs;
    if (nthreads == 0) nthreads = 1;
    if (n < 4096) nthreads = 1;

    std::vector<Worker> workers;
    workers.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) {
        std::uint64_t b = n * i / nthreads;
        std::uint64_t e = n * (i + 1) / nthreads;
        workers.push_back(Worker{*this, b, e, {}});
    }
    if (nthreads == 1) {
        workers[0]();
    } else {
        std::vector<std::thread> threads;
        for (Worker& w : workers) threads.emplace_back(std::ref(w));
        for (std::thread& t : threads) t.join();
    }
    std::vector<std::vector<Elem>> out;
    for (Worker& w : workers)
        for (auto& v : w.found) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), poly_vec_less);
    return out;
}

}  // namespace detail

bool poly_vec_less(const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

NormalizedForm normalize(const Poly& f0) {
    Poly f = reduce_mod_xq_minus_x(f0);
    if (f.degree() < 1) throw NotAPP("not a permutation polynomial");
    if (!is_pp_bruteforce(f).is_pp) throw NotAPP("not a permutation polynomial");
    const Field& F = f.field();
    const std::uint32_t n = std::uint32_t(f.degree());

    Elem c = F.inv(f.leading());
    Elem b = 0;
    if (F.from_int(n) != 0) {
        // b = -a_{n-1} / (a_n * n)
        b = F.neg(F.mul(f.coeff(n - 1), F.inv(F.mul(f.leading(), F.from_int(n)))));
    }
    Poly g = shift_scale_compose(f, b, c, 0);
    Elem d = F.neg(g.coeff(0));
    if (d != 0) g = g + Poly::constant(f.field_ptr(), d);
    return NormalizedForm{std::move(g), b, c, d};
}

std::vector<std::vector<Elem>> orbit_expand(const Poly& g) {
    const Field& F = g.field();
    const int n = g.degree();
    if (n < 1 || g.leading() != 1 || g.coeff(0) != 0)
        throw NotNormalized("expected monic with zero constant term");
    if (F.from_int(n) != 0 && n >= 2 && g.coeff(std::size_t(n) - 1) != 0)
        throw NotNormalized("expected zero coefficient at x^(n-1)");

    const bool shift = n > 1 && F.from_int(n) != 0;
    std::set<std::vector<Elem>> out;
    for (Elem c = 1; c < F.q(); ++c) {
        for (Elem b = 0; b < (shift ? F.q() : 1u); ++b) {
            Poly base = shift_scale_compose(g, b, c, 0);
            for (Elem d = 0; d < F.q(); ++d) {
                Poly h = base + Poly::constant(g.field_ptr(), d);
                out.insert(h.coeffs());
            }
        }
    }
    std::vector<std::vector<Elem>> v(out.begin(), out.end());
    std::sort(v.begin(), v.end(), poly_vec_less);
    return v;
}

namespace {

// First exponent whose power of a degree-n polynomial reaches x^(q-1); the
// rejection is only sound when that exponent is prime to p.
std::function<bool(const std::vector<Elem>&)> hermite_prefilter(FieldPtr field,
                                                                std::uint32_t n) {
    const std::uint32_t q = field->q();
    const std::uint32_t t0 = (q - 1 + n - 1) / n;
    if (t0 % field->p() == 0 || t0 > q - 2) return nullptr;
    return [field, t0](const std::vector<Elem>& coeffs) {
        Poly f(field, coeffs);
        return hermite_power_coefficient(f, t0) != 0;
    };
}

}  // namespace

ClassificationResult classify_normalized(FieldPtr field, std::uint32_t n,
                                         Prefilter prefilter, unsigned jobs) {
    const Field& F = *field;
    const std::uint32_t q = F.q();
    if (n < 2 || n > q - 2) throw DegreeOutOfRange("need 2 <= n <= q-2");

    detail::Search s;
    s.field = &F;
    s.fixed.assign(n + 1, 0);
    s.fixed[n] = 1;
    const std::uint32_t top_free = F.from_int(n) == 0 ? n - 1 : n - 2;
    for (std::uint32_t e = top_free; e >= 1; --e) s.slots.push_back({e, 0, Elem(q)});
    s.predicate = detail::Predicate::permutation;
    s.jobs = jobs;
    if (prefilter == Prefilter::hermite_partial) s.pre_reject = hermite_prefilter(field, n);

    if (s.total() > detail::kSearchLimit) throw SearchTooLarge("search space too large");

    auto t0 = std::chrono::steady_clock::now();
    ClassificationResult res;
    res.field = field;
    res.degree = n;
    res.mode = "normalized";
    res.search_space = s.total();
    res.polynomials = s.run();
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ClassificationResult classify_all_pps(FieldPtr field, std::uint32_t n, unsigned jobs) {
    const Field& F = *field;
    const std::uint32_t q = F.q();
    if (n < 1 || n > q - 1) throw DegreeOutOfRange("need 1 <= n <= q-1");

    detail::Search s;
    s.field = &F;
    s.fixed.assign(n + 1, 0);
    s.slots.push_back({n, 1, Elem(q)});
    for (std::uint32_t e = n; e-- > 0;) s.slots.push_back({e, 0, Elem(q)});
    s.predicate = detail::Predicate::permutation;
    s.jobs = jobs;
    if (s.total() > detail::kSearchLimit) throw SearchTooLarge("search space too large");

    auto t0 = std::chrono::steady_clock::now();
    ClassificationResult res;
    res.field = field;
    res.degree = n;
    res.mode = "all";
    res.search_space = s.total();
    res.polynomials = s.run();
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::uint64_t audit_nonexistence(FieldPtr field, std::uint32_t n, unsigned jobs) {
    std::uint64_t space = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) space *= field->q();
    if (space > detail::kSearchLimit) throw SearchTooLarge("search space too large");
    return classify_normalized(field, n, Prefilter::none, jobs).polynomials.size();
}

WilsonCount wilson_count(FieldPtr field, bool exhaustive, unsigned jobs) {
    const Field& F = *field;
    const std::uint32_t q = F.q();
    WilsonCount out;

    for (std::uint32_t n = 2; n + 2 <= q; ++n) {
        auto res = classify_normalized(field, n, Prefilter::none, jobs);
        if (F.from_int(n) == 0)
            out.k2 += res.polynomials.size();
        else
            out.k1 += res.polynomials.size();
    }

    if (q > 20) throw FieldTooLarge("factorial exceeds 64 bits");
    std::uint64_t fact = 1;
    for (std::uint32_t i = 2; i <= q; ++i) fact *= i;
    out.identity_holds =
        fact == std::uint64_t(q) * (q - 1) * (1 + out.k2 + std::uint64_t(q) * out.k1);

    if (exhaustive) {
        if (q > 7) throw FieldTooLarge("exhaustive map scan capped at q = 7");
        // Every map F_q -> F_q as a value vector; count the bijections.
        std::vector<Elem> table(q, 0);
        std::uint64_t count = 0;
        while (true) {
            std::uint32_t seen = 0;
            bool bij = true;
            for (Elem v : table) {
                if (seen & (1u << v)) {
                    bij = false;
                    break;
                }
                seen |= 1u << v;
            }
            if (bij) ++count;
            std::size_t i = q;
            while (i-- > 0) {
                if (++table[i] < q) break;
                table[i] = 0;
                if (i == 0) {
                    out.exhaustive_pp_count = count;
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace permpoly
