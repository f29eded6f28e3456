#pragma once

#include <cstdint>
#include <vector>

namespace permpoly {

// Multinomial coefficient (t; parts) mod p by the digit method: zero as soon
// as the base-p digits of the parts do not sum to the digits of t without
// carrying, otherwise the product of the per-digit coefficients mod p.
// Never forms a factorial of anything larger than p-1.
std::uint32_t multinomial_mod_p(std::uint64_t t, const std::vector<std::uint64_t>& parts,
                                std::uint32_t p);

}  // namespace permpoly
