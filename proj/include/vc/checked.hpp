#pragma once

// Overflow-checked int64 arithmetic and small number-theory helpers.

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace vc::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

/// k(k-1)/2, exact.
inline std::int64_t choose2(std::int64_t k) {
  // One of k, k-1 is even; divide it first.
  std::int64_t a = k, b = sub(k, 1);
  if (a % 2 == 0)
    a /= 2;
  else
    b /= 2;
  return mul(a, b);
}

inline std::uint64_t add_u(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("uint64 overflow in addition");
  return r;
}

inline std::uint64_t mul_u(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("uint64 overflow in multiplication");
  return r;
}

inline std::uint64_t pow_u(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) r = mul_u(r, base);
  return r;
}

}  // namespace vc::checked

namespace vc {

/// Least nonnegative residue of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod_floor(a, m)) * mod_floor(b, m) % m);
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return m == 1 ? std::optional<std::int64_t>(0) : std::nullopt;
  return mod_floor(old_s, m);
}

/// p-adic valuation of a nonzero integer; nullopt for zero (valuation +inf).
inline std::optional<int> p_valuation(std::int64_t a, std::int64_t p) {
  if (a == 0) return std::nullopt;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// If n = p^k with k >= 1 and p prime, returns p.
inline std::optional<std::int64_t> prime_power_base(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

}  // namespace vc
