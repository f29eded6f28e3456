#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "permpoly/errors.hpp"

namespace permpoly {

// Element of a finite field, encoded as an integer in [0, q).  The base-p
// digits of the code are the coordinates with respect to the power basis
// {1, t, t^2, ...} of a root t of the field modulus, so code 0 is the
// additive and code 1 the multiplicative identity.
using Elem = std::uint32_t;

bool is_prime(std::uint64_t n);

// Prime factorisation (p, multiplicity), ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// The finite field F_{p^r}, immutable after construction and safe to share
// across threads.  Construction is deterministic: without an override the
// modulus is the monic irreducible of degree r whose non-leading
// coefficient encoding sum(a_i * p^i) is minimal.
class Field {
public:
    static constexpr std::uint32_t kDefaultTableCap = 4096;
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    Field(std::uint32_t p, std::uint32_t r,
          std::optional<std::vector<Elem>> modulus_override = std::nullopt,
          std::uint32_t table_cap = kDefaultTableCap);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }
    const std::vector<Elem>& modulus() const { return modulus_; }
    bool has_tables() const { return !mul_table_.empty(); }

    Elem add(Elem a, Elem b) const {
        if (r_ == 1) {
            Elem s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_raw(a, b);
    }

    Elem neg(Elem a) const {
        if (r_ == 1) return a == 0 ? 0 : q_ - a;
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_raw(a);
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (r_ == 1) return Elem((std::uint64_t(a) * b) % q_);
        if (!mul_table_.empty()) return mul_table_[a * q_ + b];
        return mul_raw(a, b);
    }

    // Multiplicative inverse; throws DivisionByZero on 0.
    Elem inv(Elem a) const;

    // a^e with the exponent of a nonzero base reduced mod q-1.  Negative
    // exponents invert; 0^0 = 1 and 0^e for e < 0 throws DivisionByZero.
    Elem pow(Elem a, std::int64_t e) const;

    // The scalar v mod p, i.e. v copies of the multiplicative identity.
    Elem from_int(std::int64_t v) const;

    // 0 is a square.  In odd characteristic a != 0 is a square iff
    // a^((q-1)/2) = 1; in characteristic 2 every element is a square.
    bool is_square(Elem a) const;

    // Square root with the smaller code, or nullopt when a is not a square.
    std::optional<Elem> sqrt(Elem a) const;

    // Generator of the multiplicative group with the smallest code.
    Elem primitive_element() const { return primitive_; }

    std::vector<Elem> to_digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& d) const;

    bool operator==(const Field& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

private:
    Elem add_raw(Elem a, Elem b) const;
    Elem neg_raw(Elem a) const;
    Elem mul_raw(Elem a, Elem b) const;
    void build_tables();
    void find_primitive();

    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    std::uint32_t q_ = 0;
    std::vector<Elem> modulus_;  // ascending, length r+1, monic
    Elem primitive_ = 0;
    std::vector<std::uint16_t> add_table_;
    std::vector<std::uint16_t> mul_table_;
    std::vector<std::uint16_t> neg_table_;
    std::vector<std::uint16_t> inv_table_;
};

// Shared, memoized construction.  Calls with identical arguments return the
// same Field instance; overrides always construct fresh.
FieldPtr make_field(std::uint32_t p, std::uint32_t r,
                    std::optional<std::vector<Elem>> modulus_override = std::nullopt,
                    std::uint32_t table_cap = Field::kDefaultTableCap);

// Factors q and delegates to make_field; throws NotPrime when q is not a
// prime power.
FieldPtr make_field_from_order(std::uint32_t q,
                               std::optional<std::vector<Elem>> modulus_override = std::nullopt,
                               std::uint32_t table_cap = Field::kDefaultTableCap);

// Code map realizing F_{sub} as a subfield of F_{sup}; requires equal
// characteristic and sub.r | sup.r.  Deterministic: the root of the small
// modulus with the smallest code in the big field is used.
std::vector<Elem> subfield_embedding(const Field& sub, const Field& sup);

}  // namespace permpoly
