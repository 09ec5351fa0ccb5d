#pragma once

// Slow reference implementations written straight from the definitions.
// They share no code with the library: plain vectors in, counts out.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Table = std::vector<std::uint32_t>;

// Schoolbook product of two GF(2) polynomials.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 32; ++i)
    if (b >> i & 1) r ^= a << i;
  return r;
}

inline int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Remainder of long division a / m over GF(2).
inline std::uint64_t poly_rem(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

inline std::uint32_t mul(std::uint32_t x, std::uint32_t y, std::uint32_t reduction) {
  return static_cast<std::uint32_t>(poly_rem(clmul(x, y), reduction));
}

inline std::uint32_t pow(std::uint32_t x, std::uint64_t e, std::uint32_t reduction) {
  std::uint32_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x, reduction);
  return r;
}

// Irreducible iff no polynomial of degree 1..deg/2 divides it.
inline bool irreducible(std::uint32_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; degree(q) <= d / 2; ++q)
    if (poly_rem(p, q) == 0) return false;
  return true;
}

inline Table ddt(const Table& f) {
  const std::uint32_t size = static_cast<std::uint32_t>(f.size());
  Table t(static_cast<std::size_t>(size) * size, 0);
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t x = 0; x < size; ++x) ++t[a * size + (f[x] ^ f[x ^ a])];
  return t;
}

// T(a, b) = #{x : f^{-1}(f(x) + b) + f^{-1}(f(x + a) + b) = a}, a the input
// and b the output difference; f must be a permutation.
inline Table bct_by_inverse(const Table& f) {
  const std::uint32_t size = static_cast<std::uint32_t>(f.size());
  Table inv(size);
  for (std::uint32_t x = 0; x < size; ++x) inv[f[x]] = x;
  Table t(static_cast<std::size_t>(size) * size, 0);
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t b = 0; b < size; ++b)
      for (std::uint32_t x = 0; x < size; ++x)
        t[a * size + b] += (inv[f[x] ^ b] ^ inv[f[x ^ a] ^ b]) == a;
  return t;
}

// Pairs (x, y) with f(x+a) + f(y+a) = b and f(x) + f(y) = b, by brute force
// over all (a, x, y).
inline Table bct_by_pairs(const Table& f) {
  const std::uint32_t size = static_cast<std::uint32_t>(f.size());
  Table t(static_cast<std::size_t>(size) * size, 0);
  for (std::uint32_t a = 0; a < size; ++a)
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y) {
        const std::uint32_t b = f[x] ^ f[y];
        if ((f[x ^ a] ^ f[y ^ a]) == b) ++t[a * size + b];
      }
  return t;
}

// W(u, v) = sum_x (-1)^{u.x + v.f(x)} by direct summation.
inline std::int64_t walsh(const Table& f, std::uint32_t u, std::uint32_t v) {
  std::int64_t s = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x)
    s += (std::popcount(u & x) + std::popcount(v & f[x])) & 1 ? -1 : 1;
  return s;
}

inline std::uint32_t max_nonzero(const Table& t, bool skip_b0) {
  const std::size_t size = static_cast<std::size_t>(std::sqrt(static_cast<double>(t.size())));
  std::uint32_t best = 0;
  for (std::size_t a = 1; a < size; ++a)
    for (std::size_t b = skip_b0 ? 1 : 0; b < size; ++b) best = std::max(best, t[a * size + b]);
  return best;
}

inline Table random_permutation(int n, std::mt19937_64& rng) {
  Table f(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < f.size(); ++x) f[x] = x;
  std::shuffle(f.begin(), f.end(), rng);
  return f;
}

inline Table random_function(int n, std::mt19937_64& rng) {
  Table f(std::size_t{1} << n);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(f.size() - 1));
  for (auto& y : f) y = dist(rng);
  return f;
}

}  // namespace oracle
