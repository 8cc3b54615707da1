#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace confexcess {

// Small-integer helpers. Trial division only; inputs stay below 2^62.

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned r = 0;
};

std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// floor(sqrt(n)), exact for the whole 64-bit range.
std::uint64_t isqrt(std::uint64_t n);

/// m with q = 4m^2 + 1, if any.
std::optional<std::uint64_t> m_from_q(std::uint64_t q);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace confexcess
