#include "confexcess/numtheory.hpp"

#include <limits>

namespace confexcess {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto divisors = prime_divisors(n);
  if (divisors.size() != 1) return std::nullopt;
  PrimePower pp{divisors.front(), 0};
  while (n > 1) {
    n /= pp.p;
    ++pp.r;
  }
  return pp;
}

std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t lo = 0;
  std::uint64_t hi = std::min<std::uint64_t>(n, 0xFFFFFFFFull) + 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (mid <= n / mid) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::optional<std::uint64_t> m_from_q(std::uint64_t q) {
  if (q < 5 || (q - 1) % 4 != 0) return std::nullopt;
  const std::uint64_t msq = (q - 1) / 4;
  const std::uint64_t m = isqrt(msq);
  if (m * m != msq) return std::nullopt;
  return m;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace confexcess
