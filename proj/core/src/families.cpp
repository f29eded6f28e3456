#include "permpoly/families.hpp"

#include <numeric>

#include "permpoly/criteria.hpp"

namespace permpoly {

bool monomial_is_pp(std::uint64_t n, const Field& F) {
    if (n == 0) return false;
    return std::gcd(n, std::uint64_t(F.q()) - 1) == 1;
}

bool is_p_polynomial(const Poly& L) {
    const std::uint32_t p = L.field().p();
    for (std::size_t k = 0; k < L.coeffs().size(); ++k) {
        if (L.coeffs()[k] == 0) continue;
        std::size_t e = k;
        while (e > 1 && e % p == 0) e /= p;
        if (e != 1) return false;
    }
    return !L.is_zero();
}

bool p_polynomial_is_pp(const Poly& L) {
    if (!is_p_polynomial(L)) throw NotLinearized("not a p-polynomial");
    const Field& F = L.field();
    for (Elem c = 1; c < F.q(); ++c)
        if (L.evaluate(c) == 0) return false;
    return true;
}

bool q_polynomial_is_pp_det(const Field& base, const Field& ext,
                            const std::vector<Elem>& coeffs_ext) {
    const std::uint32_t q = base.q();
    if (ext.p() != base.p() || ext.r() % base.r() != 0)
        throw FieldMismatch("extension does not contain the base field");
    const std::uint32_t m = ext.r() / base.r();
    if (coeffs_ext.size() != m) throw NotLinearized("need exactly m coefficients");

    // A[i][j] = a_{(i-j) mod m}^(q^j); nonsingular iff the map permutes.
    std::vector<std::vector<Elem>> a(m, std::vector<Elem>(m));
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j) {
            Elem c = coeffs_ext[(i + m - j) % m];
            std::int64_t e = 1;
            for (std::uint32_t t = 0; t < j; ++t) e *= q;
            a[i][j] = ext.pow(c, e);
        }

    // Determinant by elimination over the extension field.
    Elem det = 1;
    for (std::uint32_t col = 0; col < m; ++col) {
        std::uint32_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) return false;
        if (pivot != col) std::swap(a[pivot], a[col]);
        det = ext.mul(det, a[col][col]);
        Elem ip = ext.inv(a[col][col]);
        for (std::uint32_t row = col + 1; row < m; ++row) {
            if (a[row][col] == 0) continue;
            Elem t = ext.mul(a[row][col], ip);
            for (std::uint32_t j = col; j < m; ++j)
                a[row][j] = ext.sub(a[row][j], ext.mul(t, a[col][j]));
        }
    }
    return det != 0;
}

namespace {

// gcd of two polynomials over a field, coefficient vectors ascending.
std::vector<Elem> poly_gcd(std::vector<Elem> a, std::vector<Elem> b, const Field& F) {
    auto trim = [](std::vector<Elem>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        Elem lead_inv = F.inv(b.back());
        while (a.size() >= b.size()) {
            Elem factor = F.mul(a.back(), lead_inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
            trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool q_polynomial_is_pp_gcd(const Field& base, std::uint32_t m,
                            const std::vector<Elem>& coeffs_base) {
    if (coeffs_base.size() != m) throw NotLinearized("need exactly m coefficients");
    std::vector<Elem> assoc(coeffs_base);       // sum a_i x^i
    std::vector<Elem> cyclo(m + 1, 0);          // x^m - 1
    cyclo[0] = base.neg(1);
    cyclo[m] = 1;
    std::vector<Elem> g = poly_gcd(assoc, cyclo, base);
    return g.size() == 1;
}

Poly q_polynomial_realize(const Field& base, FieldPtr ext,
                          const std::vector<Elem>& coeffs_ext) {
    const std::uint32_t m = std::uint32_t(coeffs_ext.size());
    std::size_t top = 1;
    for (std::uint32_t i = 0; i + 1 < m; ++i) top *= base.q();
    std::vector<Elem> coeffs(top + 1, 0);
    std::size_t e = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        coeffs[e] = ext->add(coeffs[e], coeffs_ext[i]);
        e *= base.q();
    }
    return Poly(std::move(ext), std::move(coeffs));
}

MonomialShiftForm all_extensions_form(const Poly& f) {
    MonomialShiftForm out;
    const std::uint32_t p = f.field().p();
    if (f.degree() < 1) return out;
    std::size_t top = f.coeffs().size() - 1;
    std::uint32_t h = 0;
    std::size_t e = top;
    while (e > 1 && e % p == 0) {
        e /= p;
        ++h;
    }
    if (e != 1) return out;
    for (std::size_t k = 1; k < top; ++k)
        if (f.coeffs()[k] != 0) return out;
    out.matches = true;
    out.a = f.coeffs()[top];
    out.b = f.coeff(0);
    out.h = h;
    return out;
}

bool all_extensions_verify(const Poly& f) {
    const Field& F = f.field();
    for (std::uint32_t mult = 1; mult <= 3; ++mult) {
        FieldPtr ext = make_field(F.p(), F.r() * mult);
        std::vector<Elem> emb = subfield_embedding(F, *ext);
        std::vector<Elem> coeffs(f.coeffs().size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = emb[f.coeffs()[i]];
        if (!is_pp_bruteforce(Poly(ext, std::move(coeffs))).is_pp) return false;
    }
    return true;
}

std::optional<Poly> specific_class_build(std::uint64_t h, std::uint64_t s, const Poly& g) {
    const Field& F = g.field();
    const std::uint32_t q = F.q();
    if (h == 0 || std::gcd(h, std::uint64_t(q) - 1) != 1)
        throw BadParameters("need gcd(h, q-1) = 1");
    if (s == 0 || (q - 1) % s != 0) throw BadParameters("need s | q-1");

    for (Elem c = 1; c < q; ++c)
        if (g.evaluate(F.pow(c, std::int64_t(s))) == 0) return std::nullopt;

    // x^h * g(x^s)^((q-1)/s), all mod x^q - x.
    FieldPtr field = g.field_ptr();
    std::vector<Elem> gs(std::size_t(g.degree()) * s + 1, 0);
    for (std::size_t k = 0; k < g.coeffs().size(); ++k) gs[k * s] = g.coeffs()[k];
    Poly inner = pow_mod_xq_minus_x(Poly(field, std::move(gs)), (q - 1) / s);
    Poly f = reduce_mod_xq_minus_x(Poly::monomial(field, std::size_t(h)) * inner);
    return f;
}

bool quadratic_binomial_is_pp(Elem a, const Field& F) {
    if (F.p() == 2) throw EvenCharacteristic("needs odd q");
    Elem t = F.sub(F.mul(a, a), 1);
    return t != 0 && F.is_square(t);
}

Poly quadratic_binomial_poly(FieldPtr field, Elem a) {
    if (field->p() == 2) throw EvenCharacteristic("needs odd q");
    std::vector<Elem> coeffs((field->q() + 1) / 2 + 1, 0);
    coeffs[1] = a;
    coeffs.back() = 1;
    return Poly(std::move(field), std::move(coeffs));
}

bool m_binomial_is_pp(std::uint32_t m, Elem a, const Field& F) {
    const std::uint32_t q = F.q();
    if (m <= 1 || (q - 1) % m != 0) throw BadDivisor("need m | q-1 with m > 1");
    if (F.pow(F.neg(a), m) == 1) return false;
    // With (-a)^m != 1 every a + xi^i is nonzero, so the ratios are defined.
    Elem xi = F.pow(F.primitive_element(), (q - 1) / m);
    const std::int64_t e = (q - 1) / m;
    for (std::uint32_t i = 0; i + 1 < m; ++i) {
        for (std::uint32_t j = i + 1; j < m; ++j) {
            Elem num = F.add(a, F.pow(xi, i));
            Elem den = F.add(a, F.pow(xi, j));
            Elem ratio = F.pow(F.mul(num, F.inv(den)), e);
            if (ratio == F.pow(xi, std::int64_t(j) - i)) return false;
        }
    }
    return true;
}

Poly m_binomial_poly(FieldPtr field, std::uint32_t m, Elem a) {
    const std::uint32_t q = field->q();
    if (m <= 1 || (q - 1) % m != 0) throw BadDivisor("need m | q-1 with m > 1");
    std::vector<Elem> coeffs((q + m - 1) / m + 1, 0);
    coeffs[1] = a;
    coeffs.back() = 1;
    return Poly(std::move(field), std::move(coeffs));
}

Poly dickson_poly(FieldPtr field, std::uint32_t k, Elem a) {
    const Field& F = *field;
    if (k == 0) return Poly::constant(field, F.from_int(2));
    std::vector<Elem> coeffs(k + 1, 0);
    for (std::uint32_t j = 0; j <= k / 2; ++j) {
        // k/(k-j) * C(k-j, j), an integer, exactly.
        std::uint64_t binom = 1;
        for (std::uint32_t i = 1; i <= j; ++i)
            binom = binom * (k - j - i + 1) / i;  // C(k-j, j) row by row
        std::uint64_t coef = binom * k / (k - j);
        Elem c = F.from_int(std::int64_t(coef % F.p()));
        Elem apow = F.pow(F.neg(a), j);
        coeffs[k - 2 * j] = F.mul(c, apow);
    }
    return Poly(field, std::move(coeffs));
}

Poly dickson_poly_recurrence(FieldPtr field, std::uint32_t k, Elem a) {
    const Field& F = *field;
    if (k == 0) return Poly::constant(field, F.from_int(2));
    Poly g1 = Poly::x(field);
    if (k == 1) return g1;
    Poly g2 = Poly::monomial(field, 2) - Poly::constant(field, F.mul(F.from_int(2), a));
    if (k == 2) return g2;
    Poly prev = g1, curr = g2;
    for (std::uint32_t i = 3; i <= k; ++i) {
        Poly next = Poly::x(field) * curr - prev.scaled(a);
        prev = std::move(curr);
        curr = std::move(next);
    }
    return curr;
}

bool dickson_is_pp(std::uint32_t k, Elem a, const Field& F) {
    if (k == 0) return false;
    if (a == 0) return monomial_is_pp(k, F);
    std::uint64_t q = F.q();
    return std::gcd(std::uint64_t(k), q * q - 1) == 1;
}

}  // namespace permpoly
