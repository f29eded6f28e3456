#include "permpoly/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace permpoly {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

namespace {

// Dense polynomials over the prime field F_p, ascending coefficients.
// Only used during construction: modulus search and irreducibility tests.
using PVec = std::vector<Elem>;

void ptrim(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of a by monic b over F_p.
PVec pmod(PVec a, const PVec& b, std::uint32_t p) {
    ptrim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        Elem lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t t = std::uint64_t(lead) * b[i] % p;
                Elem& c = a[shift + i];
                c = Elem((c + p - t) % p);
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.size() <= db) break;
    }
    ptrim(a);
    return a;
}

PVec decode_poly(std::uint64_t code, std::uint32_t p) {
    PVec f;
    while (code > 0) {
        f.push_back(Elem(code % p));
        code /= p;
    }
    return f;
}

// Monic irreducibility by trial division against every monic polynomial of
// degree at most deg/2.
bool is_irreducible(const PVec& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    std::uint64_t count = 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PVec div = decode_poly(code, p);
            div.resize(d + 1, 0);
            div[d] = 1;
            if (pmod(f, div, p).empty()) return false;
        }
    }
    return true;
}

PVec canonical_modulus(std::uint32_t p, std::uint32_t r) {
    if (r == 1) return {0, 1};  // the polynomial x
    std::uint64_t bound = 1;
    for (std::uint32_t i = 0; i < r; ++i) bound *= p;
    for (std::uint64_t code = 0; code < bound; ++code) {
        PVec f = decode_poly(code, p);
        f.resize(r + 1, 0);
        f[r] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw NotIrreducible("no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t r,
             std::optional<std::vector<Elem>> modulus_override,
             std::uint32_t table_cap) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (r < 1) throw DegreeMismatch("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) throw FieldTooLarge("field order exceeds 2^16");
    }
    p_ = p;
    r_ = r;
    q_ = std::uint32_t(q);

    if (modulus_override) {
        std::vector<Elem>& m = *modulus_override;
        if (m.size() != std::size_t(r) + 1 || m.back() != 1)
            throw DegreeMismatch("modulus must be monic of degree r");
        for (Elem c : m)
            if (c >= p) throw DegreeMismatch("modulus coefficient out of range");
        if (!is_irreducible(m, p)) throw NotIrreducible("modulus is reducible");
        modulus_ = std::move(m);
    } else {
        modulus_ = canonical_modulus(p, r);
    }

    if (q_ <= table_cap) build_tables();
    find_primitive();
}

std::vector<Elem> Field::to_digits(Elem a) const {
    std::vector<Elem> d(r_);
    for (std::uint32_t i = 0; i < r_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<Elem>& d) const {
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
}

Elem Field::add_raw(Elem a, Elem b) const {
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        Elem s = (a % p_ + b % p_) % p_;
        out += s * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

Elem Field::neg_raw(Elem a) const {
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < r_; ++i) {
        Elem d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

Elem Field::mul_raw(Elem a, Elem b) const {
    // Schoolbook product of digit vectors, then reduction by the modulus
    // relation t^r = -(m_0 + m_1 t + ... + m_{r-1} t^{r-1}).
    std::vector<Elem> da = to_digits(a), db = to_digits(b);
    std::vector<Elem> prod(2 * r_ - 1, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j)
            prod[i + j] = Elem((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    }
    for (std::uint32_t k = 2 * r_ - 2; k >= r_; --k) {
        Elem c = prod[k];
        if (c != 0) {
            prod[k] = 0;
            for (std::uint32_t i = 0; i < r_; ++i) {
                std::uint64_t t = std::uint64_t(c) * modulus_[i] % p_;
                Elem& dst = prod[k - r_ + i];
                dst = Elem((dst + p_ - t) % p_);
            }
        }
        if (k == r_) break;
    }
    prod.resize(r_);
    return from_digits(prod);
}

void Field::build_tables() {
    if (r_ > 1) {
        add_table_.resize(std::size_t(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b)
                add_table_[std::size_t(a) * q_ + b] = std::uint16_t(add_raw(a, b));
        neg_table_.resize(q_);
        for (Elem a = 0; a < q_; ++a) neg_table_[a] = std::uint16_t(neg_raw(a));
    }

    // exp/log relative to some generator, then the q x q product table.
    std::vector<Elem> exp_t;
    std::vector<std::uint32_t> log_t(q_, 0);
    Elem g = 0;
    for (Elem cand = 1; cand < q_; ++cand) {
        exp_t.clear();
        exp_t.push_back(1);
        Elem x = 1;
        bool full = true;
        for (std::uint32_t i = 1; i < q_ - 1; ++i) {
            x = (r_ == 1) ? Elem(std::uint64_t(x) * cand % q_) : mul_raw(x, cand);
            if (x == 1) { full = false; break; }
            exp_t.push_back(x);
        }
        if (full && q_ > 2) {
            g = cand;
            break;
        }
        if (q_ == 2) { g = 1; break; }
    }
    if (q_ == 2) exp_t = {1};
    for (std::uint32_t i = 0; i < exp_t.size(); ++i) log_t[exp_t[i]] = i;
    (void)g;

    mul_table_.resize(std::size_t(q_) * q_, 0);
    for (Elem a = 1; a < q_; ++a)
        for (Elem b = 1; b < q_; ++b)
            mul_table_[std::size_t(a) * q_ + b] =
                std::uint16_t(exp_t[(log_t[a] + log_t[b]) % (q_ - 1)]);

    inv_table_.resize(q_, 0);
    for (Elem a = 1; a < q_; ++a)
        inv_table_[a] = std::uint16_t(exp_t[(q_ - 1 - log_t[a]) % (q_ - 1)]);
}

void Field::find_primitive() {
    if (q_ == 2) {
        primitive_ = 1;
        return;
    }
    std::vector<std::uint64_t> primes;
    for (auto& [f, e] : factorize(q_ - 1)) primes.push_back(f);
    for (Elem cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (std::uint64_t f : primes) {
            if (pow(cand, std::int64_t((q_ - 1) / f)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive_ = cand;
            return;
        }
    }
    throw Error("no primitive element found");  // unreachable for a field
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, std::int64_t(q_) - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DivisionByZero("negative power of zero");
        return 0;
    }
    std::int64_t m = std::int64_t(q_) - 1;
    e %= m;
    if (e < 0) e += m;
    Elem result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elem Field::from_int(std::int64_t v) const {
    std::int64_t m = v % std::int64_t(p_);
    if (m < 0) m += p_;
    return Elem(m);
}

bool Field::is_square(Elem a) const {
    if (a == 0 || p_ == 2) return true;
    return pow(a, std::int64_t((q_ - 1) / 2)) == 1;
}

std::optional<Elem> Field::sqrt(Elem a) const {
    for (Elem c = 0; c < q_; ++c)
        if (mul(c, c) == a) return c;
    return std::nullopt;
}

namespace {
std::mutex registry_mutex;
std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, FieldPtr> registry;
}  // namespace

FieldPtr make_field(std::uint32_t p, std::uint32_t r,
                    std::optional<std::vector<Elem>> modulus_override,
                    std::uint32_t table_cap) {
    if (!modulus_override) {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto key = std::make_tuple(p, r, table_cap);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
        auto f = std::make_shared<const Field>(p, r, std::nullopt, table_cap);
        registry.emplace(key, f);
        return f;
    }
    return std::make_shared<const Field>(p, r, std::move(modulus_override), table_cap);
}

FieldPtr make_field_from_order(std::uint32_t q,
                               std::optional<std::vector<Elem>> modulus_override,
                               std::uint32_t table_cap) {
    auto factors = factorize(q);
    if (factors.size() != 1)
        throw NotPrime("q = " + std::to_string(q) + " is not a prime power");
    return make_field(std::uint32_t(factors[0].first), std::uint32_t(factors[0].second),
                      std::move(modulus_override), table_cap);
}

std::vector<Elem> subfield_embedding(const Field& sub, const Field& sup) {
    if (sub.p() != sup.p() || sup.r() % sub.r() != 0)
        throw FieldMismatch("no subfield embedding");
    if (sub == sup) {
        std::vector<Elem> id(sub.q());
        for (Elem a = 0; a < sub.q(); ++a) id[a] = a;
        return id;
    }
    // Root of the small modulus in the big field with the smallest code.
    Elem root = 0;
    bool found = false;
    for (Elem z = 0; z < sup.q() && !found; ++z) {
        Elem acc = 0;
        for (std::size_t i = sub.modulus().size(); i-- > 0;)
            acc = sup.add(sup.mul(acc, z), sub.modulus()[i]);  // prime coeffs map as codes
        if (acc == 0) {
            root = z;
            found = true;
        }
    }
    if (!found) throw FieldMismatch("modulus has no root in the extension");

    std::vector<Elem> map(sub.q());
    for (Elem a = 0; a < sub.q(); ++a) {
        Elem acc = 0, x = a;
        Elem power = 1;
        for (std::uint32_t i = 0; i < sub.r(); ++i) {
            Elem digit = x % sub.p();
            x /= sub.p();
            acc = sup.add(acc, sup.mul(digit, power));
            power = sup.mul(power, root);
        }
        map[a] = acc;
    }
    return map;
}

}  // namespace permpoly
