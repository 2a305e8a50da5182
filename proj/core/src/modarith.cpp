#include "ringlab/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace ringlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(std::uint64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

unsigned max_prime_exponent(std::uint64_t n) {
  unsigned best = 0;
  for (const auto& [p, e] : factorize(n)) best = std::max(best, e);
  return best;
}

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  const auto [g, s, t] = extended_gcd(static_cast<std::int64_t>(a % m), static_cast<std::int64_t>(m));
  (void)t;
  if (g != 1) return std::nullopt;
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((s % mm) + mm) % mm);
}

}  // namespace ringlab
