#pragma once

// Arithmetic in GF(2^n), 2 <= n <= 16, in a polynomial basis.
//
// Elements are little-endian coefficient bitmasks: bit i holds the
// coefficient of x^i. The integer encoding doubles as a table index, which
// is what every table builder in this library relies on.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bctkit {

using Element = std::uint32_t;

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 16;

/// Default reduction polynomial for GF(2^n): the irreducible of lowest
/// weight, ties broken by smallest integer encoding. Stable across versions.
std::uint32_t default_irreducible(int n);

/// Rabin's irreducibility test for a polynomial over GF(2) given as a bitmask.
bool is_irreducible(std::uint32_t poly);

class Field {
 public:
  /// Throws std::invalid_argument if n is out of range or `reduction` is not
  /// an irreducible polynomial of degree exactly n.
  Field(int n, std::uint32_t reduction);

  int n() const { return n_; }
  std::uint32_t reduction() const { return reduction_; }
  std::uint32_t size() const { return size_; }
  Element mask() const { return size_ - 1; }
  bool contains(Element x) const { return x < size_; }

  static Element add(Element x, Element y) { return x ^ y; }
  Element mul(Element x, Element y) const;
  Element square(Element x) const { return mul(x, x); }
  Element pow(Element x, std::uint64_t e) const;
  /// Throws std::domain_error for x = 0.
  Element inv(Element x) const;
  Element div(Element x, Element y) const { return mul(x, inv(y)); }
  /// Absolute trace to GF(2); returns 0 or 1.
  int trace(Element x) const;
  /// Multiplicative order; throws std::domain_error for x = 0.
  std::uint64_t order(Element x) const;

  /// "n:reduction-hex", e.g. "3:b" for x^3 + x + 1.
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  int n_;
  std::uint32_t reduction_;
  std::uint32_t size_;
};

/// GF(2^n) with the default irreducible. Throws std::invalid_argument when
/// n is outside [2, 16].
Field make_field(int n);

/// Parses "n:reduction-hex" (an optional 0x prefix on the hex is accepted).
Field parse_field(std::string_view text);

/// Smallest (by encoding) element of multiplicative order 3. Requires n even.
Element find_omega(const Field& field);

/// Smallest (by encoding) primitive element.
Element find_primitive(const Field& field);

/// All x with x^2 + x = c, sorted. Empty iff tr(c) = 1.
std::vector<Element> solve_artin_schreier(const Field& field, Element c);

/// All x with x^2 + a*x + b = 0, sorted.
std::vector<Element> solve_quadratic(const Field& field, Element a, Element b);

/// Distinct roots of x^3 + a2*x + a1 in the field, sorted.
std::vector<Element> cubic_roots(const Field& field, Element a2, Element a1);

/// Distinct roots of x^4 + a2*x^2 + a1*x + a0, sorted. Requires a0*a1 != 0
/// (throws std::invalid_argument otherwise).
std::vector<Element> quartic_roots(const Field& field, Element a2, Element a1,
                                   Element a0);

/// Leonard-Williams criterion: the quartic above splits into four distinct
/// roots iff the resolvent x^3 + a2*x + a1 has three roots r_i in the field
/// and tr(a0 * r_i^2 / a1^2) = 0 for each of them. Same precondition as
/// quartic_roots.
bool quartic_has_four_roots(const Field& field, Element a2, Element a1,
                            Element a0);

}  // namespace bctkit
