#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

struct NormalizedForm {
    Poly g;          // monic, g(0) = 0, and no x^(n-1) term when p does not divide n
    Elem b, c, d;    // g = c * f(x + b) + d
};

// Unique normalized representative of a permutation polynomial of degree
// >= 1 (checked; throws NotAPP).  Idempotent.
NormalizedForm normalize(const Poly& f);

// Every c*g(x+b)+d generated by a normalized g: b ranges over the field only
// for nonlinear degree prime to p, otherwise b = 0.  Coefficient vectors,
// deduplicated and sorted.
std::vector<std::vector<Elem>> orbit_expand(const Poly& g);

enum class Prefilter { none, hermite_partial };

struct ClassificationResult {
    FieldPtr field;
    std::uint32_t degree = 0;
    std::string mode;  // "normalized", "all", "orthomorphism", "orthomorphism-all"
    std::vector<std::vector<Elem>> polynomials;  // ascending coefficient codes, sorted
    std::uint64_t search_space = 0;
    double wall_seconds = 0.0;
};

// Exhaustive search over the normalized shapes of degree n (monic, f(0)=0,
// x^(n-1) coefficient zero when p does not divide n), brute-force tested
// with early exit.  The optional prefilter rejects a candidate when its
// first useful power has a nonzero coefficient at x^(q-1); it never changes
// the result set.  Deterministic output for any worker count.
ClassificationResult classify_normalized(FieldPtr field, std::uint32_t n,
                                         Prefilter prefilter = Prefilter::none,
                                         unsigned jobs = 0);

// Every degree-n permutation polynomial: leading coefficient nonzero, all
// lower coefficients (including the constant) free.
ClassificationResult classify_all_pps(FieldPtr field, std::uint32_t n, unsigned jobs = 0);

// Count of degree-n permutation polynomials in normalized form; zero iff no
// degree-n permutation polynomial exists at all.
std::uint64_t audit_nonexistence(FieldPtr field, std::uint32_t n, unsigned jobs = 0);

struct WilsonCount {
    std::uint64_t k1 = 0;  // nonlinear normalized, degree prime to p
    std::uint64_t k2 = 0;  // normalized with degree divisible by p
    bool identity_holds = false;  // q! = q(q-1)(1 + k2 + q k1)
    std::optional<std::uint64_t> exhaustive_pp_count;  // all q^q maps scanned (q <= 7)
};

// The factorial counting identity over the normalized partition.  The
// exhaustive q^q scan is only permitted for q <= 7 (FieldTooLarge above).
WilsonCount wilson_count(FieldPtr field, bool exhaustive = false, unsigned jobs = 0);

// Sort order used for all classification outputs: degree first, then
// coefficients from the highest power down.
bool poly_vec_less(const std::vector<Elem>& a, const std::vector<Elem>& b);

}  // namespace permpoly
