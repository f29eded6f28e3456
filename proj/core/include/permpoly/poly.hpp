#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly {

// Univariate polynomial over one field: ascending coefficient codes with no
// trailing zero.  The zero polynomial has an empty list and degree -1.
class Poly {
public:
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
    static Poly constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }
    static Poly x(FieldPtr field) { return Poly(std::move(field), {0, 1}); }
    static Poly monomial(FieldPtr field, std::size_t k, Elem c = 1);

    int degree() const { return int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Elem coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<Elem>& coeffs() const { return coeffs_; }
    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }

    Elem evaluate(Elem c) const;
    std::vector<Elem> eval_table() const;

    Poly scaled(Elem c) const;
    Poly compose(const Poly& inner) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// Representative of degree < q inducing the same function, computed by
// exponent folding: x^k -> x^(k-q+1) whenever k >= q.
Poly reduce_mod_xq_minus_x(const Poly& f);

// f^e mod (x^q - x) by square-and-multiply on reduced polynomials.
Poly pow_mod_xq_minus_x(const Poly& f, std::uint64_t e);

// The q polynomials 1 - (x-c)^(q-1) for c = 0..q-1, each reduced; basis of
// the interpolation below.
std::vector<Poly> interpolation_basis(const FieldPtr& field);

// Unique polynomial of degree <= q-1 with the given value table (indexed by
// element code).  Post-verified against its own evaluation table.
Poly carlitz_interpolate(const FieldPtr& field, const std::vector<Elem>& values);

// Reduced polynomial swapping a and b and fixing everything else.
Poly transposition_poly(const FieldPtr& field, Elem a, Elem b);

// c*f(x+b) + d, exactly; throws ZeroScale when c = 0.
Poly shift_scale_compose(const Poly& f, Elem b, Elem c, Elem d);

// Bivariate polynomial with nonzero coefficients only, keyed (deg_x, deg_y).
class BiPoly {
public:
    explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    Elem get(std::uint32_t dx, std::uint32_t dy) const;
    void add_term(std::uint32_t dx, std::uint32_t dy, Elem v);
    const std::map<std::pair<std::uint32_t, std::uint32_t>, Elem>& terms() const {
        return terms_;
    }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldPtr field_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Elem> terms_;
};

// (f(x) - f(y)) / (x - y), exact via the telescoping expansion of each
// power; throws ConstantInput for deg f < 1.
BiPoly difference_quotient(const Poly& f);

// f(x) - f(y) as a BiPoly.
BiPoly bivariate_difference(const Poly& f);

// g * (x - y).
BiPoly multiply_by_x_minus_y(const BiPoly& g);

}  // namespace permpoly
