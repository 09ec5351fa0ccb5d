#pragma once

// Constructors for the classical low-uniformity families, each validating
// its side conditions. Every constructor takes an optional field override;
// its dimension must match the one the parameters imply.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bctkit/gf2n.hpp"
#include "bctkit/sbox.hpp"

namespace bctkit {

/// The class the parameters place the member in, when known.
enum class ExpectedClass { unspecified, apn, four_uniform };

const char* to_string(ExpectedClass c);

struct FamilyMember {
  std::string name;
  std::vector<std::pair<std::string, std::int64_t>> params;
  SBox sbox;
  std::optional<std::uint64_t> exponent;  // set for power maps
  ExpectedClass expected = ExpectedClass::unspecified;

  /// "kasami n=6 i=2"
  std::string describe() const;
};

using FieldOverride = std::optional<Field>;

std::uint64_t gold_exponent(int i);
std::uint64_t kasami_exponent(int i);

/// x^{2^i+1}, 1 <= i < n.
FamilyMember gold(int n, int i, FieldOverride field = std::nullopt);
/// x^{2^{2i}-2^i+1}, 1 <= i < n.
FamilyMember kasami(int n, int i, FieldOverride field = std::nullopt);
/// x^{2^k+3} over GF(2^{2k+1}).
FamilyMember welch(int k, FieldOverride field = std::nullopt);
/// Over GF(2^{2k+1}): x^{2^k+2^{k/2}-1} for k even, x^{2^k+2^{(3k+1)/2}-1}
/// for k odd.
FamilyMember niho(int k, FieldOverride field = std::nullopt);
/// x^{2^n-2}, so 0 -> 0.
FamilyMember inverse_fn(int n, FieldOverride field = std::nullopt);
/// x^{2^{4k}+2^{3k}+2^{2k}+2^k-1} over GF(2^{5k}).
FamilyMember dobbertin(int k, FieldOverride field = std::nullopt);
/// x^{2^{2k}+2^k+1} over GF(2^{4k}), k odd.
FamilyMember bracken_leander(int k, FieldOverride field = std::nullopt);

/// alpha x^{2^s+1} + alpha^{2^k} x^{2^{-k}+2^{k+s}} over GF(2^{3k}), with
/// 2^{-k} read as 2^{n-k}. Requires k even, 3 !| k, k/2 odd,
/// gcd(3k, s) = 2, 3 | k+s and alpha primitive; alpha defaults to the
/// smallest primitive element.
FamilyMember btt(int k, int s, std::optional<Element> alpha = std::nullopt,
                 FieldOverride field = std::nullopt);

/// 0 -> 1, 1 -> 0, x -> 1/x otherwise.
FamilyMember modified_inverse(int n, FieldOverride field = std::nullopt);

/// All gamma in GF(q^2), q = 2^m with m odd, such that gamma^{q-1} has
/// order 3, sorted by encoding. Throws std::invalid_argument for other
/// field shapes.
std::vector<Element> zieve_gamma_candidates(const Field& field);

/// x^{q+2} + gamma x over GF(q^2); gamma must be a candidate.
FamilyMember zieve_binomial(const Field& field, Element gamma);

/// x^{q^2-q-1} ((x^{q+1}+e^3)^{2t} + gamma^q (x^{q+1}+e^3)^t + e^2 + e gamma^q)
/// with e = gamma^q + gamma and t = (2q-1)/3, evaluated pointwise.
FamilyMember zieve_binomial_inverse(const Field& field, Element gamma);

/// "name key=value ...". Unknown names or keys, missing keys and invalid
/// parameters throw std::invalid_argument.
FamilyMember parse_family_spec(std::string_view text, FieldOverride field = std::nullopt);

/// Names accepted by parse_family_spec.
std::vector<std::string> family_names();

// Sparse-point analysis of the modified inverse for a not in {1, w, w^2}.
// For x in {0, 1, a, a+1} and a partner y, (x, y) and (y, x) both solve
//   f(x+a) + f(y+a) = b,  f(x) + f(y) = b
// exactly in the following cases:
//   1: x = 0,   y = 1/(b+1),          b = (1+a)/a or a^2b^2+a^2b+ab+1 = 0
//   2: x = 1,   y = 1/b,              b = 1/(1+a) or a^2b^2+ab^2+ab+1 = 0
//   3: x = a,   y = (ab+a+1)/(b+1),   a^2b^2+a^2b+ab+1 = 0
//   4: x = a+1, y = (ab+1)/b,         a^2b^2+ab^2+ab+1 = 0

struct SparseMembership {
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  bool s4 = false;
};

struct SparseSolution {
  int case_id;
  Element x;
  Element y;
};

/// Throws std::invalid_argument if a or b is zero or a is in {1, w, w^2}.
SparseMembership lemma4_membership(const Field& field, Element a, Element b);
std::vector<SparseSolution> lemma4_classify(const Field& field, Element a, Element b);

}  // namespace bctkit
