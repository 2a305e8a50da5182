#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ringlab {

bool is_prime(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Largest exponent in the factorization of n (0 for n = 1).
unsigned max_prime_exponent(std::uint64_t n);

/// Inverse of a modulo m when gcd(a, m) = 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

struct Bezout {
  std::int64_t gcd;
  std::int64_t s;  // s*a + t*b = gcd
  std::int64_t t;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace ringlab
