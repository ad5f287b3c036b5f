#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace noncomm {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  a += b;
  if (a >= p) a -= p;
  return a;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e,
                            std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

/// Inverse mod a prime p.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  return powmod(a % p, p - 2, p);
}

/// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Largest prime strictly below `n`.
inline std::uint64_t prev_prime_u64(std::uint64_t n) {
  if (n <= 3) throw std::invalid_argument("prev_prime_u64: no prime below");
  std::uint64_t c = n - 1;
  if (c % 2 == 0) --c;
  while (!is_prime_u64(c)) c -= 2;
  return c;
}

/// Deterministic descending chain of primes below 2^61, used for CRT.
inline std::uint64_t crt_prime(std::size_t index) {
  static std::vector<std::uint64_t> cache;
  while (cache.size() <= index) {
    std::uint64_t below = cache.empty() ? (1ull << 61) : cache.back();
    cache.push_back(prev_prime_u64(below));
  }
  return cache[index];
}

/// Distinct uniformly chosen primes in [2^59, 2^60). The default seed keeps
/// CLI output reproducible run to run.
inline std::vector<std::uint64_t> random_primes_60bit(std::size_t count,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1ull << 59,
                                                    (1ull << 60) - 1);
  std::vector<std::uint64_t> out;
  while (out.size() < count) {
    std::uint64_t c = dist(rng) | 1;
    if (!is_prime_u64(c)) continue;
    bool dup = false;
    for (auto p : out) dup |= (p == c);
    if (!dup) out.push_back(c);
  }
  return out;
}

}  // namespace noncomm
