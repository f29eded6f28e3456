#include "permpoly/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace permpoly {

namespace {

void check_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) throw FieldMismatch("operands from different fields");
}

std::vector<Elem> trim(std::vector<Elem> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

}  // namespace

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(trim(std::move(coeffs))) {
    for (Elem c : coeffs_)
        if (c >= field_->q()) throw Error("coefficient code out of range");
}

Poly Poly::monomial(FieldPtr field, std::size_t k, Elem c) {
    std::vector<Elem> coeffs(k + 1, 0);
    coeffs[k] = c;
    return Poly(std::move(field), std::move(coeffs));
}

Elem Poly::evaluate(Elem c) const {
    const Field& F = *field_;
    Elem acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = F.add(F.mul(acc, c), coeffs_[i]);
    return acc;
}

std::vector<Elem> Poly::eval_table() const {
    std::vector<Elem> t(field_->q());
    for (Elem c = 0; c < field_->q(); ++c) t[c] = evaluate(c);
    return t;
}

Poly Poly::scaled(Elem c) const {
    const Field& F = *field_;
    std::vector<Elem> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = F.mul(coeffs_[i], c);
    return Poly(field_, std::move(out));
}

Poly Poly::compose(const Poly& inner) const {
    check_same_field(*this, inner);
    Poly acc = Poly::zero(field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * inner;
        acc = acc + Poly::constant(field_, coeffs_[i]);
    }
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    return *field_ == *o.field_ && coeffs_ == o.coeffs_;
}

std::string Poly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || coeffs_[i] != 1) s += std::to_string(coeffs_[i]);
        if (i >= 1) {
            if (coeffs_[i] != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& F = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(a.field_ptr(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    const Field& F = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(a.field_ptr(), std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field_ptr());
    const Field& F = a.field();
    std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Elem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return Poly(a.field_ptr(), std::move(out));
}

Poly reduce_mod_xq_minus_x(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t q = F.q();
    if (f.degree() < int(q)) return f;
    std::vector<Elem> out(q, 0);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        Elem c = f.coeffs()[k];
        if (c == 0) continue;
        std::size_t kk = k;
        if (kk >= q) kk = (kk - 1) % (q - 1) + 1;  // k >= q folds to k-q+1, repeatedly
        out[kk] = F.add(out[kk], c);
    }
    return Poly(f.field_ptr(), std::move(out));
}

Poly pow_mod_xq_minus_x(const Poly& f, std::uint64_t e) {
    Poly base = reduce_mod_xq_minus_x(f);
    Poly acc = Poly::constant(f.field_ptr(), 1);
    while (e > 0) {
        if (e & 1) acc = reduce_mod_xq_minus_x(acc * base);
        base = reduce_mod_xq_minus_x(base * base);
        e >>= 1;
    }
    return acc;
}

std::vector<Poly> interpolation_basis(const FieldPtr& field) {
    const Field& F = *field;
    const Elem one = 1;
    std::vector<Poly> basis;
    basis.reserve(F.q());
    for (Elem c = 0; c < F.q(); ++c) {
        Poly x_minus_c(field, {F.neg(c), one});
        Poly p = pow_mod_xq_minus_x(x_minus_c, F.q() - 1);
        basis.push_back(Poly::constant(field, 1) - p);
    }
    return basis;
}

Poly carlitz_interpolate(const FieldPtr& field, const std::vector<Elem>& values) {
    const Field& F = *field;
    if (values.size() != F.q()) throw WrongLength("need exactly q values");
    std::vector<Poly> basis = interpolation_basis(field);
    Poly f = Poly::zero(field);
    for (Elem c = 0; c < F.q(); ++c) {
        if (values[c] == 0) continue;
        f = f + basis[c].scaled(values[c]);
    }
    if (f.eval_table() != values)
        throw Error("interpolation failed to reproduce its value table");
    return f;
}

Poly transposition_poly(const FieldPtr& field, Elem a, Elem b) {
    if (a == b) throw EqualPoints("transposition needs distinct points");
    const Field& F = *field;
    Poly xa(field, {F.neg(a), 1});
    Poly xb(field, {F.neg(b), 1});
    Poly one = Poly::constant(field, 1);
    Poly pa = one - pow_mod_xq_minus_x(xa, F.q() - 1);
    Poly pb = one - pow_mod_xq_minus_x(xb, F.q() - 1);
    Poly f = Poly::x(field) + pa.scaled(F.sub(b, a)) + pb.scaled(F.sub(a, b));
    return reduce_mod_xq_minus_x(f);
}

Poly shift_scale_compose(const Poly& f, Elem b, Elem c, Elem d) {
    if (c == 0) throw ZeroScale("scale factor must be nonzero");
    Poly shifted = (b == 0) ? f : f.compose(Poly(f.field_ptr(), {b, 1}));
    Poly out = shifted.scaled(c);
    if (d != 0) out = out + Poly::constant(f.field_ptr(), d);
    return out;
}

Elem BiPoly::get(std::uint32_t dx, std::uint32_t dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? 0 : it->second;
}

void BiPoly::add_term(std::uint32_t dx, std::uint32_t dy, Elem v) {
    if (v == 0) return;
    auto key = std::make_pair(dx, dy);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, v);
        return;
    }
    Elem s = field_->add(it->second, v);
    if (s == 0)
        terms_.erase(it);
    else
        it->second = s;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, v] = *it;
        if (!s.empty()) s += " + ";
        bool named = false;
        if (v != 1 || (key.first == 0 && key.second == 0)) {
            s += std::to_string(v);
            named = true;
        }
        auto append_var = [&](const char* var, std::uint32_t d) {
            if (d == 0) return;
            if (named) s += "*";
            s += var;
            if (d > 1) s += "^" + std::to_string(d);
            named = true;
        };
        append_var("x", key.first);
        append_var("y", key.second);
    }
    return s;
}

BiPoly difference_quotient(const Poly& f) {
    if (f.degree() < 1) throw ConstantInput("difference quotient needs degree >= 1");
    BiPoly out(f.field_ptr());
    // x^k - y^k = (x - y) * sum_{i<k} x^i y^{k-1-i}
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
        Elem c = f.coeffs()[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i < k; ++i)
            out.add_term(std::uint32_t(i), std::uint32_t(k - 1 - i), c);
    }
    return out;
}

BiPoly bivariate_difference(const Poly& f) {
    BiPoly out(f.field_ptr());
    const Field& F = f.field();
    for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
        Elem c = f.coeffs()[k];
        if (c == 0) continue;
        out.add_term(std::uint32_t(k), 0, c);
        out.add_term(0, std::uint32_t(k), F.neg(c));
    }
    return out;
}

BiPoly multiply_by_x_minus_y(const BiPoly& g) {
    BiPoly out(g.field_ptr());
    const Field& F = g.field();
    for (const auto& [key, v] : g.terms()) {
        out.add_term(key.first + 1, key.second, v);
        out.add_term(key.first, key.second + 1, F.neg(v));
    }
    return out;
}

}  // namespace permpoly
