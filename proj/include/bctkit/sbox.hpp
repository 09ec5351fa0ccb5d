#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bctkit/gf2n.hpp"

namespace bctkit {

/// A function GF(2^n) -> GF(2^n) stored as its full lookup table.
/// Permutation status is a queried property, not an invariant.
class SBox {
 public:
  /// Throws std::invalid_argument unless the table has exactly 2^n entries,
  /// all of them field elements.
  SBox(Field field, std::vector<Element> table);

  static SBox identity(const Field& field);

  const Field& field() const { return field_; }
  int n() const { return field_.n(); }
  std::uint32_t size() const { return field_.size(); }
  Element operator()(Element x) const { return table_[x]; }
  std::span<const Element> table() const { return table_; }

  friend bool operator==(const SBox&, const SBox&) = default;

 private:
  Field field_;
  std::vector<Element> table_;
};

struct Term {
  std::uint64_t exponent;
  Element coefficient;
};

/// x -> x^d (with 0^0 = 1).
SBox from_monomial(const Field& field, std::uint64_t d);

/// x -> sum of c_i * x^{e_i}.
SBox from_polynomial(const Field& field, std::span<const Term> terms);

bool is_permutation(const SBox& f);

/// Compositional inverse. Throws std::invalid_argument for non-permutations.
SBox inverse_table(const SBox& f);

/// (f o g)(x) = f(g(x)). Throws std::invalid_argument on a field mismatch.
SBox compose(const SBox& f, const SBox& g);

/// D_a f(x) = f(x + a) + f(x).
SBox derivative(const SBox& f, Element a);

/// x -> sum_i a_i x^{2^i} + c, tabulated on construction.
class AffineMap {
 public:
  AffineMap(Field field, std::vector<Element> linear, Element constant);

  const Field& field() const { return field_; }
  std::span<const Element> linear() const { return linear_; }
  Element constant() const { return constant_; }
  Element operator()(Element x) const { return table_[x]; }
  bool is_permutation() const;
  SBox as_sbox() const { return SBox(field_, table_); }

 private:
  Field field_;
  std::vector<Element> linear_;
  Element constant_;
  std::vector<Element> table_;
};

enum class Side { pre, post };

/// Side::post gives A o f, Side::pre gives f o A.
SBox affine_apply(const AffineMap& map, const SBox& f, Side side);

}  // namespace bctkit
