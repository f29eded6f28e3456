#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

struct BruteForceResult {
    bool is_pp = false;
    // First colliding pair (c1, c2) in code order when not a permutation.
    std::optional<std::pair<Elem, Elem>> collision;
};

// Ground truth: the value table hits all q values; early exit on the first
// repeat.
BruteForceResult is_pp_bruteforce(const Poly& f);

// Sums over c of f(c)^t for t = 1..q-1.  The permutation signature is
// (0, ..., 0, -1).
std::vector<Elem> power_sum_profile(const Poly& f);
bool power_sum_is_pp(const std::vector<Elem>& profile, const Field& F);

struct HermiteResult {
    bool is_pp = false;
    bool degree_condition = false;   // every useful power reduces to degree <= q-2
    bool top_power_monic = false;    // f^(q-1) reduces monic of degree q-1
    bool exactly_one_root = false;   // the equivalent one-root form
    std::optional<std::uint32_t> offending_exponent;
};

// Both classical forms; requires q >= 3.  Keeps one running reduced power of
// f, one reduced multiply per exponent.
HermiteResult hermite_test(const Poly& f);

// Coefficient of x^(q-1) in f^t mod (x^q - x), 1 <= t <= q-1.
Elem hermite_power_coefficient(const Poly& f, std::uint32_t t);

struct RaussnitzResult {
    bool is_pp = false;
    std::vector<Elem> char_poly;      // ascending coefficients over F_q
    std::vector<Elem> expected_poly;  // (x - a_0)^(q-1) - 1
};

// Characteristic polynomial of the (q-1)x(q-1) circulant with first row
// (a_0..a_{q-2}), computed exactly via Hessenberg reduction; the polynomial
// permutes iff it equals (x - a_0)^(q-1) - 1.  Requires deg f <= q-2.
RaussnitzResult raussnitz_test(const Poly& f);

struct ResultantResult {
    bool is_pp = false;
    // Specialization point where the residual polynomial is nonzero; the
    // boolean marks the extra point taken from the quadratic extension.
    std::optional<Elem> witness_point;
    bool witness_in_extension = false;
};

// Sylvester resultant criterion: the residual g_f vanishes iff f permutes.
// The determinant is evaluated at the q base-field points (where the
// correction term vanishes) plus one point of F_{q^2} to pin degree q.
ResultantResult resultant_test(const Poly& f);

struct ValueSetStats {
    std::uint32_t v = 0;                 // |V_f|
    std::optional<std::uint32_t> u;      // least k >= 1 with s_k != 0 (nullopt = none)
    std::optional<std::uint32_t> w;      // least k >= 1 with p_k != 0 (nullopt = none)
    std::uint32_t n = 0;                 // degree used
};

// Elementary-symmetric and power-sum statistics of the value multiset;
// requires 1 <= deg f < q after reduction.
ValueSetStats turnwald_stats(const Poly& f);

// Truth values of the ten equivalent permutation characterisations in terms
// of (u, v, w, n, q).  Item 0 is the permutation property itself.
std::array<bool, 10> turnwald_items(const ValueSetStats& s, std::uint32_t q, bool is_pp);

struct WanBoundResult {
    std::uint32_t v = 0;
    std::uint32_t bound = 0;
    bool is_pp = false;
    bool satisfied = false;  // holds whenever f is not a permutation
};

// |V_f| <= q - ceil((q-1)/n) for every non-permutation of degree n >= 1.
WanBoundResult wan_bound_check(const Poly& f);

struct MorenoResult {
    bool condition1 = false;  // (f - c)^(q-1) != 1 mod (x^q - x) for all c
    bool condition2 = false;  // (f - f(c))^(q-1) = (x - c)^(q-1) for all c
    std::optional<Elem> witness_c;
};

MorenoResult moreno_test(const Poly& f);

// One named verdict with a short printable witness.
struct CriterionOutcome {
    bool verdict = false;
    std::string witness;
};

// Verdicts and witnesses for one polynomial across the requested criteria
// ("brute", "power-sum", "hermite", "raussnitz", "resultant", "turnwald",
// "moreno"); empty selection means all applicable.
struct CriterionReport {
    Poly f;
    bool is_pp = false;
    std::vector<std::pair<std::string, CriterionOutcome>> per_criterion;
    std::optional<ValueSetStats> stats;
    std::optional<WanBoundResult> wan;
};

const std::vector<std::string>& criterion_names();
CriterionReport run_criteria(const Poly& f, const std::set<std::string>& which = {});

}  // namespace permpoly
