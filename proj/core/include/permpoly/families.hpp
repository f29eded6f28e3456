#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permpoly/poly.hpp"

namespace permpoly {

// x^n permutes iff gcd(n, q-1) = 1.
bool monomial_is_pp(std::uint64_t n, const Field& F);

// Additive polynomial over F_q: nonzero coefficients only at exponents p^i.
// Throws NotLinearized when the shape does not match.  Permutes iff 0 is
// its only root.
bool p_polynomial_is_pp(const Poly& L);
bool is_p_polynomial(const Poly& L);

// L(x) = sum a_i x^(q^i), i < m, with a_i in F_{q^m} given by their codes in
// ext; permutes F_{q^m} iff the twisted coefficient matrix A with
// A[i][j] = a_{(i-j) mod m}^(q^j) is nonsingular.
bool q_polynomial_is_pp_det(const Field& base, const Field& ext,
                            const std::vector<Elem>& coeffs_ext);

// Same family with all coefficients in the base field (given by their codes
// there); permutes iff gcd(sum a_i x^i, x^m - 1) = 1 over F_q.
bool q_polynomial_is_pp_gcd(const Field& base, std::uint32_t m,
                            const std::vector<Elem>& coeffs_base);

// Realize sum a_i x^(q^i) as a polynomial over the extension field.
Poly q_polynomial_realize(const Field& base, FieldPtr ext,
                          const std::vector<Elem>& coeffs_ext);

struct MonomialShiftForm {
    bool matches = false;  // f = a x^(p^h) + b with a != 0
    Elem a = 0, b = 0;
    std::uint32_t h = 0;
};

// Shape test for the one family permuting every finite extension.
MonomialShiftForm all_extensions_form(const Poly& f);

// Verifies a shape match by brute force over F_q, F_{q^2} and F_{q^3}.
bool all_extensions_verify(const Poly& f);

// f = x^h * g(x^s)^((q-1)/s) reduced, provided gcd(h, q-1) = 1, s | q-1 and
// g(x^s) has no nonzero root; nullopt when the root hypothesis fails.
std::optional<Poly> specific_class_build(std::uint64_t h, std::uint64_t s, const Poly& g);

// x^((q+1)/2) + a x over odd q permutes iff a^2 - 1 is a nonzero square.
bool quadratic_binomial_is_pp(Elem a, const Field& F);
Poly quadratic_binomial_poly(FieldPtr field, Elem a);

// x^((q+m-1)/m) + a x for m | q-1, m > 1: permutes iff (-a)^m != 1 and the
// ratio condition holds for all 0 <= i < j < m with the fixed primitive
// m-th root of unity g^((q-1)/m).
bool m_binomial_is_pp(std::uint32_t m, Elem a, const Field& F);
Poly m_binomial_poly(FieldPtr field, std::uint32_t m, Elem a);

// Dickson polynomial of degree k with parameter a, closed-form coefficients
// computed over the integers and reduced mod p.
Poly dickson_poly(FieldPtr field, std::uint32_t k, Elem a);
// Same polynomial from the three-term recurrence; must agree.
Poly dickson_poly_recurrence(FieldPtr field, std::uint32_t k, Elem a);
// gcd(k, q^2-1) = 1 for a != 0; falls back to the monomial rule at a = 0.
bool dickson_is_pp(std::uint32_t k, Elem a, const Field& F);

struct FamilyInstance {
    std::string family;
    Poly realized;
    bool criterion_verdict = false;
    bool brute_verdict = false;
};

}  // namespace permpoly
