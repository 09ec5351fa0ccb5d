#pragma once

// Walsh spectra and the moment identities linking BCT entries to them.
//
// M_j = sum over a, b != 0 of T(a, b)^j can be computed two ways: directly
// from a BCT, or from the Walsh spectrum through the 4j-fold character-sum
// identity. Both routes are exact.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bctkit/sbox.hpp"
#include "bctkit/tables.hpp"

namespace bctkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Walsh spectra are tabulated up to this dimension.
inline constexpr int kMaxWalshDimension = 12;
/// Largest n for which the j = 2 Walsh moment (and the 2-uniform
/// certificate) may be requested.
inline constexpr int kMaxSecondMomentDimension = 6;

/// values(u, v) = sum_x (-1)^{u.x + v.f(x)}, with u.x the GF(2) dot product.
class WalshSpectrum {
 public:
  WalshSpectrum(Field field, std::vector<std::int32_t> by_v);

  const Field& field() const { return field_; }
  std::uint32_t size() const { return field_.size(); }
  std::int32_t at(Element u, Element v) const {
    return values_[static_cast<std::size_t>(v) * field_.size() + u];
  }
  /// All u for a fixed v.
  std::span<const std::int32_t> column(Element v) const {
    return {values_.data() + static_cast<std::size_t>(v) * field_.size(), field_.size()};
  }

 private:
  Field field_;
  std::vector<std::int32_t> values_;  // v-major
};

WalshSpectrum walsh_spectrum(const SBox& f, unsigned threads = 0);

/// M_j from a BCT (kind must be BCT). j = 0 gives (2^n - 1)^2.
BigInt bct_moment_direct(const KTable& bct, unsigned j);
/// M_j from bct_fast.
BigInt bct_moment_direct(const SBox& f, unsigned j, unsigned threads = 0);

/// M_j for j in {1, 2} from the Walsh spectrum alone. The a = 0 / b = 0
/// border of the table is evaluated from the spectrum too, so the result is
/// exact for non-permutations; for permutations the border contributes
/// 2^{nj} (2^{n+1} - 1). Throws std::invalid_argument for other j or when
/// n exceeds the cost cap for j = 2.
BigInt bct_moment_walsh(const WalshSpectrum& spectrum, unsigned j);
BigInt bct_moment_walsh(const SBox& f, unsigned j, unsigned threads = 0);

/// Sum over alpha, gamma of W(gamma, alpha)^4.
BigInt walsh_fourth_power_sum(const WalshSpectrum& spectrum);

/// The constrained eight-fold product sum
///   sum_{a1+a2+b1+b2 = 0, g1+g2+e1+e2 = 0} prod_i W(g_i,a_i) W(e_i,a_i) W(g_i,b_i) W(e_i,b_i).
BigInt walsh_second_order_sum(const WalshSpectrum& spectrum);

struct TwoUniformCertificate {
  BigInt lhs;  // eight-fold product sum
  BigInt rhs;  // 2^{4n+1} sum W^4 + 2^{9n+1} - 5*2^{8n} + 2^{7n+1}
  BigInt gap;  // lhs - rhs; zero iff f is a permutation with delta_f = 2
};

TwoUniformCertificate two_uniform_certificate(const WalshSpectrum& spectrum);
TwoUniformCertificate two_uniform_certificate(const SBox& f, unsigned threads = 0);

/// phi(x) = sum_j A_j x^j with phi = 0 on {0, 2, ..., delta} and phi > 0 on
/// the even integers in (delta, 2^n]. Both conditions are checked exactly
/// on construction (std::invalid_argument otherwise).
class CertificatePolynomial {
 public:
  CertificatePolynomial(std::vector<Rational> coefficients, unsigned delta, int n);

  /// prod_{k=0}^{delta/2} (x - 2k), expanded.
  static CertificatePolynomial vanishing_product(unsigned delta, int n);

  std::span<const Rational> coefficients() const { return coefficients_; }
  unsigned delta() const { return delta_; }
  int n() const { return n_; }
  Rational evaluate(const Rational& x) const;

 private:
  std::vector<Rational> coefficients_;
  unsigned delta_;
  int n_;
};

struct DeltaCertificate {
  unsigned delta = 0;
  Rational value;              // (2^n-1)^2 A_0 + sum_{j>=1} A_j M_j, always >= 0
  bool is_zero = false;        // iff every T(a, b) with a, b != 0 is <= delta
  bool walsh_cross_checked = false;
};

/// Evaluates the certificate with direct moments. M_1 (n <= 8) and M_2
/// (n <= 4) are additionally recomputed from the Walsh spectrum; a mismatch
/// throws std::logic_error.
DeltaCertificate delta_uniform_certificate(const SBox& f,
                                           const CertificatePolynomial& phi,
                                           unsigned threads = 0);

}  // namespace bctkit
