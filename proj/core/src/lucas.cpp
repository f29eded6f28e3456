#include "permpoly/lucas.hpp"

#include <numeric>

#include "permpoly/errors.hpp"
#include "permpoly/field.hpp"

namespace permpoly {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

// (c; b_1..b_n) mod p for digits c, b_i < p, sum b_i = c.
std::uint32_t digit_multinomial(std::uint32_t c, const std::vector<std::uint32_t>& bs,
                                std::uint32_t p) {
    std::vector<std::uint64_t> fact(p, 1);
    for (std::uint32_t i = 2; i < p; ++i) fact[i] = fact[i - 1] * i % p;
    std::uint64_t num = fact[c];
    std::uint64_t den = 1;
    for (std::uint32_t b : bs) den = den * fact[b] % p;
    return std::uint32_t(num * pow_mod(den, p - 2, p) % p);
}

}  // namespace

std::uint32_t multinomial_mod_p(std::uint64_t t, const std::vector<std::uint64_t>& parts,
                                std::uint32_t p) {
    if (!is_prime(p)) throw NotPrime("modulus must be prime");
    std::uint64_t sum = 0;
    for (std::uint64_t k : parts) sum += k;
    if (sum != t) throw SumMismatch("parts must sum to t");

    std::uint64_t tt = t;
    std::vector<std::uint64_t> ks = parts;
    std::uint64_t result = 1;
    while (tt > 0 || std::accumulate(ks.begin(), ks.end(), std::uint64_t(0)) > 0) {
        std::uint32_t c = std::uint32_t(tt % p);
        tt /= p;
        std::vector<std::uint32_t> bs;
        std::uint32_t digit_sum = 0;
        for (std::uint64_t& k : ks) {
            std::uint32_t b = std::uint32_t(k % p);
            k /= p;
            bs.push_back(b);
            digit_sum += b;
        }
        if (digit_sum != c) return 0;  // a carry kills the coefficient
        result = result * digit_multinomial(c, bs, p) % p;
    }
    return std::uint32_t(result);
}

}  // namespace permpoly
