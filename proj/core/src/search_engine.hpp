#pragma once

// Internal chunked exhaustive search over coefficient assignments.  Not part
// of the installed interface.

#include <cstdint>
#include <functional>
#include <vector>

#include "permpoly/field.hpp"

namespace permpoly::detail {

// One enumerated coefficient: exponent and half-open value range.  Slots are
// ordered slowest first; the last slot varies fastest, so the enumeration
// index reads the slot values as mixed-radix digits.
struct Slot {
    std::uint32_t exponent;
    Elem lo, hi;
};

enum class Predicate {
    permutation,     // value table is a bijection
    orthomorphism,   // both c -> f(c) and c -> f(c) - c are bijections
};

struct Search {
    const Field* field = nullptr;
    std::vector<Elem> fixed;   // ascending coefficients, zero at slot positions
    std::vector<Slot> slots;
    Predicate predicate = Predicate::permutation;
    unsigned jobs = 0;         // 0 = hardware concurrency
    // Optional rejection filter run on the assembled coefficient vector
    // before the table test; must only reject non-matches.
    std::function<bool(const std::vector<Elem>&)> pre_reject;

    std::uint64_t total() const;
    // Matching coefficient vectors, sorted by the classification order.
    std::vector<std::vector<Elem>> run() const;
};

}  // namespace permpoly::detail
