#pragma once

#include <cstdint>
#include <vector>

#include "permpoly/classify.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

struct OrthoReport {
    bool is_pp = false;
    bool shifted_is_pp = false;       // f(x) - x
    bool is_orthomorphism = false;    // both of the above
    bool is_complete_mapping = false; // f(x) + x permutes
    int reduced_degree = -1;
};

// Brute-force orthomorphism and complete-mapping test.
OrthoReport orthomorphism_report(const Poly& f);

bool is_complete_mapping(const Poly& f);

// Exhaustive search over degree-n candidates with f(0) = 0 and either no
// x^(n-1) term, or a nonzero x^(n-1) term and no x^(n-2) term; the leading
// coefficient stays free because scaling does not preserve orthomorphisms.
ClassificationResult classify_orthomorphisms(FieldPtr field, std::uint32_t n,
                                             unsigned jobs = 0);

// Every degree-n orthomorphism polynomial, all lower coefficients free.
ClassificationResult classify_all_orthomorphisms(FieldPtr field, std::uint32_t n,
                                                 unsigned jobs = 0);

// Scans all q! permutation tables, keeps the orthomorphisms, interpolates
// each and checks the reduced degree stays <= q-3.  Exhaustive, so capped at
// q <= 9 (FieldTooLarge above); vacuously true for q <= 2.
bool ortho_degree_bound_audit(const FieldPtr& field);

// The three parametric families of degree-6 orthomorphisms over the field
// of nine elements, expanded over both square roots of 2.
std::vector<std::vector<Elem>> ortho_table_f9();

}  // namespace permpoly
