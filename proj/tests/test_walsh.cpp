#include <doctest.h>

#include <random>

#include "bctkit/families.hpp"
#include "bctkit/walsh.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bctkit;

namespace {

std::vector<SBox> moment_corpus(int max_n, std::mt19937_64& rng) {
  std::vector<SBox> out;
  for (const auto& m : support::family_corpus(max_n)) out.push_back(m.sbox);
  for (int n = 2; n <= max_n; ++n) {
    const Field field = make_field(n);
    out.push_back(SBox::identity(field));
    for (int k = 0; k < 3; ++k) {
      out.push_back(support::to_sbox(field, oracle::random_permutation(n, rng)));
      out.push_back(support::to_sbox(field, oracle::random_function(n, rng)));
    }
  }
  return out;
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace

TEST_CASE("Walsh spectrum against direct summation") {
  std::mt19937_64 rng(21);
  for (int n = 2; n <= 6; ++n) {
    const Field field = make_field(n);
    const auto h = oracle::random_function(n, rng);
    const WalshSpectrum w = walsh_spectrum(support::to_sbox(field, h));
    CHECK(w.at(0, 0) == static_cast<std::int32_t>(field.size()));
    for (Element u = 0; u < field.size(); ++u)
      for (Element v = 0; v < field.size(); ++v) {
        CHECK(w.at(u, v) == oracle::walsh(h, u, v));
        CHECK(w.at(u, v) % 2 == 0);
      }
  }
  const Field f5 = make_field(5);
  const WalshSpectrum id = walsh_spectrum(SBox::identity(f5));
  for (Element u = 0; u < 32; ++u)
    for (Element v = 0; v < 32; ++v) CHECK(id.at(u, v) == (u == v ? 32 : 0));
}

TEST_CASE("Parseval and permutation zero borders") {
  std::mt19937_64 rng(22);
  for (int n = 2; n <= 8; ++n) {
    const Field field = make_field(n);
    const SBox f = support::to_sbox(field, oracle::random_function(n, rng));
    const WalshSpectrum w = walsh_spectrum(f);
    for (Element v = 1; v < field.size(); ++v) {
      std::int64_t s = 0;
      for (Element u = 0; u < field.size(); ++u) s += std::int64_t{w.at(u, v)} * w.at(u, v);
      CHECK(s == std::int64_t{field.size()} * field.size());
    }
    const WalshSpectrum p = walsh_spectrum(support::to_sbox(field, oracle::random_permutation(n, rng)));
    for (Element u = 1; u < field.size(); ++u) {
      CHECK(p.at(u, 0) == 0);
      CHECK(p.at(0, u) == 0);
    }
  }
}

TEST_CASE("thread count does not change the spectrum") {
  std::mt19937_64 rng(23);
  const Field field = make_field(8);
  const SBox f = support::to_sbox(field, oracle::random_function(8, rng));
  const WalshSpectrum a = walsh_spectrum(f, 1);
  const WalshSpectrum b = walsh_spectrum(f, 5);
  for (Element u = 0; u < 256; ++u)
    for (Element v = 0; v < 256; ++v) CHECK(a.at(u, v) == b.at(u, v));
}

TEST_CASE("direct moments") {
  for (int n = 2; n <= 6; ++n) {
    const Field field = make_field(n);
    const BigInt m = field.size() - 1;
    CHECK(bct_moment_direct(SBox::identity(field), 0) == m * m);
    CHECK(bct_moment_direct(SBox::identity(field), 1) == BigInt(field.size()) * m * m);
  }
  CHECK_THROWS_AS(bct_moment_direct(ddt(SBox::identity(make_field(3))), 1), std::invalid_argument);
}

TEST_CASE("Walsh moments equal direct moments: j = 1 up to n = 6, j = 2 up to n = 4") {
  std::mt19937_64 rng(24);
  for (const SBox& f : moment_corpus(6, rng)) {
    const WalshSpectrum w = walsh_spectrum(f);
    CHECK(bct_moment_walsh(w, 1) == bct_moment_direct(f, 1));
    if (f.n() <= 4) CHECK(bct_moment_walsh(w, 2) == bct_moment_direct(f, 2));
  }
  const Field f3 = make_field(3);
  CHECK(bct_moment_walsh(from_monomial(f3, 3), 1) == bct_moment_direct(from_monomial(f3, 3), 1));
  const Field f5 = make_field(5);
  CHECK(bct_moment_walsh(SBox::identity(f5), 1) == BigInt(32) * 31 * 31);
}

TEST_CASE("j = 2 Walsh moment at the cost cap") {
  std::mt19937_64 rng(25);
  for (int n = 5; n <= kMaxSecondMomentDimension; ++n) {
    const Field field = make_field(n);
    const SBox f = support::to_sbox(field, oracle::random_permutation(n, rng));
    CHECK(bct_moment_walsh(f, 2) == bct_moment_direct(f, 2));
  }
  CHECK_THROWS_AS(bct_moment_walsh(SBox::identity(make_field(kMaxSecondMomentDimension + 1)), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(bct_moment_walsh(SBox::identity(make_field(3)), 3), std::invalid_argument);
}

TEST_CASE("permutation border correction is 2^{nj}(2^{n+1}-1)") {
  std::mt19937_64 rng(26);
  for (int n = 2; n <= 5; ++n) {
    const Field field = make_field(n);
    const SBox f = support::to_sbox(field, oracle::random_permutation(n, rng));
    const WalshSpectrum w = walsh_spectrum(f);
    const BigInt total1 = walsh_fourth_power_sum(w) >> (2 * n);
    CHECK(total1 - bct_moment_walsh(w, 1) == pow2(n) * (pow2(n + 1) - 1));
    if (n <= 4) {
      const BigInt total2 = walsh_second_order_sum(w) >> (6 * n);
      CHECK(total2 - bct_moment_walsh(w, 2) == pow2(2 * n) * (pow2(n + 1) - 1));
    }
  }
}

TEST_CASE("second-order sum against the constrained eight-fold definition") {
  std::mt19937_64 rng(27);
  for (int n = 2; n <= 3; ++n) {
    const Field field = make_field(n);
    const SBox f = support::to_sbox(field, oracle::random_function(n, rng));
    const WalshSpectrum w = walsh_spectrum(f);
    const Element size = field.size();
    BigInt s = 0;
    for (Element a1 = 0; a1 < size; ++a1)
      for (Element a2 = 0; a2 < size; ++a2)
        for (Element b1 = 0; b1 < size; ++b1) {
          const Element b2 = a1 ^ a2 ^ b1;
          for (Element g1 = 0; g1 < size; ++g1)
            for (Element g2 = 0; g2 < size; ++g2)
              for (Element e1 = 0; e1 < size; ++e1) {
                const Element e2 = g1 ^ g2 ^ e1;
                BigInt p = 1;
                for (auto [g, e, a, b] : {std::tuple{g1, e1, a1, b1}, std::tuple{g2, e2, a2, b2}})
                  p *= BigInt(w.at(g, a)) * w.at(e, a) * w.at(g, b) * w.at(e, b);
                s += p;
              }
        }
    CHECK(walsh_second_order_sum(w) == s);
  }
}

TEST_CASE("two-uniform certificate") {
  std::mt19937_64 rng(28);
  CHECK(two_uniform_certificate(from_monomial(make_field(3), 3)).gap == 0);
  CHECK(two_uniform_certificate(from_monomial(make_field(5), 3)).gap == 0);
  CHECK(two_uniform_certificate(kasami(5, 2).sbox).gap == 0);
  CHECK(two_uniform_certificate(SBox::identity(make_field(3))).gap > 0);
  // the gap vanishes exactly on permutations with boomerang uniformity 2
  for (const SBox& f : moment_corpus(5, rng)) {
    const auto cert = two_uniform_certificate(f);
    CHECK(cert.gap >= 0);
    const bool target = is_permutation(f) && boomerang_uniformity(f).boomerang_uniformity == 2;
    CHECK((cert.gap == 0) == target);
  }
  // non-permutation APN maps carry border excess
  const SBox cube16 = from_monomial(make_field(4), 3);
  CHECK(differential_uniformity(cube16) == 2);
  CHECK(two_uniform_certificate(cube16).gap > 0);
  CHECK_THROWS_AS(two_uniform_certificate(SBox::identity(make_field(kMaxSecondMomentDimension + 1))),
                  std::invalid_argument);
}

TEST_CASE("certificate polynomials") {
  const auto phi = CertificatePolynomial::vanishing_product(4, 4);
  CHECK(phi.coefficients().size() == 4);
  for (int x : {0, 2, 4}) CHECK(phi.evaluate(Rational(x)) == 0);
  for (int x = 6; x <= 16; x += 2) CHECK(phi.evaluate(Rational(x)) > 0);
  CHECK_THROWS_AS(CertificatePolynomial({Rational(1)}, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(CertificatePolynomial({Rational(0), Rational(1)}, 3, 4), std::invalid_argument);
  // phi = -x(x-2) vanishes at 0 and 2 but is negative beyond
  CHECK_THROWS_AS(CertificatePolynomial({Rational(0), Rational(2), Rational(-1)}, 2, 4),
                  std::invalid_argument);
  // a rational multiple stays valid
  std::vector<Rational> scaled(phi.coefficients().begin(), phi.coefficients().end());
  for (auto& c : scaled) c *= Rational(3, 7);
  CHECK_NOTHROW(CertificatePolynomial(scaled, 4, 4));
}

TEST_CASE("delta certificate") {
  const SBox mi4 = modified_inverse(4).sbox;
  const auto at6 = delta_uniform_certificate(mi4, CertificatePolynomial::vanishing_product(6, 4));
  CHECK(at6.is_zero);
  CHECK(at6.walsh_cross_checked);
  const auto at4 = delta_uniform_certificate(mi4, CertificatePolynomial::vanishing_product(4, 4));
  CHECK_FALSE(at4.is_zero);
  CHECK(at4.value > 0);

  std::mt19937_64 rng(29);
  for (int n = 3; n <= 5; ++n) {
    const Field field = make_field(n);
    for (int k = 0; k < 4; ++k) {
      const SBox f = support::to_sbox(field, oracle::random_function(n, rng));
      const std::uint32_t delta_f = bct_fast(f).max_nonzero();
      // pair counts of a non-permutation may exceed 2^n
      CHECK(delta_uniform_certificate(f, CertificatePolynomial::vanishing_product(delta_f, n)).is_zero);
      const auto p = support::to_sbox(field, oracle::random_permutation(n, rng));
      CHECK(delta_uniform_certificate(p, CertificatePolynomial::vanishing_product(field.size(), n))
                .is_zero);
      bool seen_zero = false;
      for (unsigned d = 2; d <= field.size(); d += 2) {
        const auto phi = CertificatePolynomial::vanishing_product(d, n);
        std::vector<Rational> scaled(phi.coefficients().begin(), phi.coefficients().end());
        for (auto& c : scaled) c *= Rational(1 + k, 3);
        const auto cert = delta_uniform_certificate(f, CertificatePolynomial(scaled, d, n));
        CHECK(cert.value >= 0);
        CHECK(cert.is_zero == (delta_f <= d));
        if (seen_zero) CHECK(cert.is_zero);
        seen_zero = seen_zero || cert.is_zero;
      }
    }
  }
  CHECK_THROWS_AS(
      delta_uniform_certificate(mi4, CertificatePolynomial::vanishing_product(6, 5)),
      std::invalid_argument);
}
