#include "bctkit/walsh.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace bctkit {
namespace {

using i128 = __int128;

BigInt to_big(i128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

BigInt pow2(unsigned e) { return BigInt(1) << e; }

// In-place Walsh-Hadamard transform: out[u] = sum_x (-1)^{u.x} in[x].
template <typename T>
void fwht(std::vector<T>& v) {
  const std::size_t size = v.size();
  for (std::size_t len = 1; len < size; len <<= 1)
    for (std::size_t i = 0; i < size; i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const T a = v[j];
        const T b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
}

i128 exact_shift(i128 value, unsigned bits, const char* what) {
  const i128 mask = (i128{1} << bits) - 1;
  if ((value & mask) != 0)
    throw std::logic_error(std::string(what) + " is not divisible by 2^" +
                           std::to_string(bits));
  return value >> bits;
}

// T(0, b) for every b and T(a, 0) for every a, from the spectrum alone.
// T(0, b) = 2^{-4n} sum_s (-1)^{s.b} sum_alpha C(alpha, alpha+s)^2 with
// C(alpha, beta) = sum_gamma W(gamma, alpha) W(gamma, beta); T(a, 0) is the
// same with the roles of input and output masks exchanged.
struct Border {
  std::vector<i128> zero_row;     // T(0, b)
  std::vector<i128> zero_column;  // T(a, 0)
};

Border border_from_spectrum(const WalshSpectrum& w) {
  const std::uint32_t size = w.size();
  const unsigned n = static_cast<unsigned>(w.field().n());

  std::vector<i128> g(size, 0);  // indexed by s = alpha + beta
  for (Element alpha = 0; alpha < size; ++alpha) {
    const auto col_a = w.column(alpha);
    for (Element beta = 0; beta < size; ++beta) {
      const auto col_b = w.column(beta);
      std::int64_t c = 0;
      for (Element gamma = 0; gamma < size; ++gamma)
        c += static_cast<std::int64_t>(col_a[gamma]) * col_b[gamma];
      g[alpha ^ beta] += static_cast<i128>(c) * c;
    }
  }

  std::vector<i128> h(size, 0);  // indexed by s = gamma + eta
  for (Element gamma = 0; gamma < size; ++gamma) {
    for (Element eta = 0; eta < size; ++eta) {
      std::int64_t d = 0;
      for (Element alpha = 0; alpha < size; ++alpha)
        d += static_cast<std::int64_t>(w.at(gamma, alpha)) * w.at(eta, alpha);
      h[gamma ^ eta] += static_cast<i128>(d) * d;
    }
  }

  fwht(g);
  fwht(h);
  Border out{std::move(g), std::move(h)};
  for (i128& t : out.zero_row) t = exact_shift(t, 4 * n, "border entry");
  for (i128& t : out.zero_column) t = exact_shift(t, 4 * n, "border entry");
  return out;
}

BigInt border_moment(const Border& border, unsigned j) {
  BigInt sum = 0;
  for (std::size_t b = 0; b < border.zero_row.size(); ++b)
    sum += boost::multiprecision::pow(to_big(border.zero_row[b]), j);
  for (std::size_t a = 1; a < border.zero_column.size(); ++a)
    sum += boost::multiprecision::pow(to_big(border.zero_column[a]), j);
  return sum;
}

i128 fourth_power_sum(const WalshSpectrum& w) {
  i128 s = 0;
  for (Element v = 0; v < w.size(); ++v)
    for (std::int32_t value : w.column(v)) {
      const std::int64_t sq = static_cast<std::int64_t>(value) * value;
      s += static_cast<i128>(sq) * sq;
    }
  return s;
}

// Eight-fold constrained sum, factored through autocorrelations:
// with R_{ab}(g) = W(g, a) W(g, b) and A_{ab}(s) = sum_g R_{ab}(g) R_{ab}(g + s),
// the sum equals sum_{a1, b1, a2} sum_s A_{a1 b1}(s) A_{a2, a1+a2+b1}(s).
i128 second_order_sum(const WalshSpectrum& w) {
  const std::uint32_t size = w.size();
  const std::size_t pairs = static_cast<std::size_t>(size) * size;
  std::vector<std::int64_t> autocorr(pairs * size, 0);
  std::vector<std::int64_t> r(size);
  for (Element a = 0; a < size; ++a) {
    const auto col_a = w.column(a);
    for (Element b = 0; b < size; ++b) {
      const auto col_b = w.column(b);
      for (Element g = 0; g < size; ++g)
        r[g] = static_cast<std::int64_t>(col_a[g]) * col_b[g];
      std::int64_t* out = autocorr.data() + (static_cast<std::size_t>(a) * size + b) * size;
      for (Element s = 0; s < size; ++s) {
        std::int64_t acc = 0;
        for (Element g = 0; g < size; ++g) acc += r[g] * r[g ^ s];
        out[s] = acc;
      }
    }
  }

  i128 total = 0;
  for (Element a1 = 0; a1 < size; ++a1)
    for (Element b1 = 0; b1 < size; ++b1) {
      const std::int64_t* left = autocorr.data() + (static_cast<std::size_t>(a1) * size + b1) * size;
      for (Element a2 = 0; a2 < size; ++a2) {
        const Element b2 = a1 ^ a2 ^ b1;
        const std::int64_t* right =
            autocorr.data() + (static_cast<std::size_t>(a2) * size + b2) * size;
        for (Element s = 0; s < size; ++s) total += static_cast<i128>(left[s]) * right[s];
      }
    }
  return total;
}

void require_second_order_cap(const WalshSpectrum& w) {
  if (w.field().n() > kMaxSecondMomentDimension)
    throw std::invalid_argument("second-order Walsh sums are limited to n <= " +
                                std::to_string(kMaxSecondMomentDimension));
}

std::map<std::uint32_t, std::uint64_t> nonzero_histogram(const KTable& bct) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (Element a = 1; a < bct.size(); ++a) {
    const auto row = bct.row(a);
    for (Element b = 1; b < bct.size(); ++b) ++hist[row[b]];
  }
  return hist;
}

BigInt moment_from_histogram(const std::map<std::uint32_t, std::uint64_t>& hist,
                             unsigned j) {
  BigInt sum = 0;
  for (const auto& [value, count] : hist)
    sum += BigInt(count) * boost::multiprecision::pow(BigInt(value), j);
  return sum;
}

}  // namespace

WalshSpectrum::WalshSpectrum(Field field, std::vector<std::int32_t> by_v)
    : field_(field), values_(std::move(by_v)) {
  if (values_.size() != static_cast<std::size_t>(field_.size()) * field_.size())
    throw std::invalid_argument("Walsh spectrum must hold 2^n x 2^n values");
}

WalshSpectrum walsh_spectrum(const SBox& f, unsigned threads) {
  if (f.n() > kMaxWalshDimension)
    throw std::length_error("Walsh spectra are limited to n <= " +
                            std::to_string(kMaxWalshDimension));
  const std::uint32_t size = f.size();
  std::vector<std::int32_t> values(static_cast<std::size_t>(size) * size);
  detail::parallel_ranges(size, detail::resolve_threads(threads),
                          [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    std::vector<std::int32_t> col(size);
    for (std::uint64_t vi = begin; vi < end; ++vi) {
      const Element v = static_cast<Element>(vi);
      for (Element x = 0; x < size; ++x) col[x] = std::popcount(v & f(x)) & 1 ? -1 : 1;
      fwht(col);
      std::copy(col.begin(), col.end(), values.begin() + vi * size);
    }
  });
  return WalshSpectrum(f.field(), std::move(values));
}

BigInt bct_moment_direct(const KTable& bct, unsigned j) {
  if (bct.kind() != TableKind::bct)
    throw std::invalid_argument("bct_moment_direct expects a BCT");
  if (j == 0) {
    const BigInt m = bct.size() - 1;
    return m * m;
  }
  return moment_from_histogram(nonzero_histogram(bct), j);
}

BigInt bct_moment_direct(const SBox& f, unsigned j, unsigned threads) {
  return bct_moment_direct(bct_fast(f, threads), j);
}

BigInt walsh_fourth_power_sum(const WalshSpectrum& spectrum) {
  return to_big(fourth_power_sum(spectrum));
}

BigInt walsh_second_order_sum(const WalshSpectrum& spectrum) {
  require_second_order_cap(spectrum);
  return to_big(second_order_sum(spectrum));
}

BigInt bct_moment_walsh(const WalshSpectrum& spectrum, unsigned j) {
  const unsigned n = static_cast<unsigned>(spectrum.field().n());
  i128 total = 0;  // sum over all (a, b) of T(a, b)^j
  if (j == 1) {
    total = exact_shift(fourth_power_sum(spectrum), 2 * n, "first moment");
  } else if (j == 2) {
    require_second_order_cap(spectrum);
    total = exact_shift(second_order_sum(spectrum), 6 * n, "second moment");
  } else {
    throw std::invalid_argument("bct_moment_walsh supports j = 1 and j = 2 only");
  }
  return to_big(total) - border_moment(border_from_spectrum(spectrum), j);
}

BigInt bct_moment_walsh(const SBox& f, unsigned j, unsigned threads) {
  return bct_moment_walsh(walsh_spectrum(f, threads), j);
}

TwoUniformCertificate two_uniform_certificate(const WalshSpectrum& spectrum) {
  require_second_order_cap(spectrum);
  const unsigned n = static_cast<unsigned>(spectrum.field().n());
  TwoUniformCertificate cert;
  cert.lhs = to_big(second_order_sum(spectrum));
  cert.rhs = pow2(4 * n + 1) * to_big(fourth_power_sum(spectrum)) + pow2(9 * n + 1) -
             5 * pow2(8 * n) + pow2(7 * n + 1);
  cert.gap = cert.lhs - cert.rhs;
  return cert;
}

TwoUniformCertificate two_uniform_certificate(const SBox& f, unsigned threads) {
  if (f.n() > kMaxSecondMomentDimension)
    throw std::invalid_argument("two_uniform_certificate is limited to n <= " +
                                std::to_string(kMaxSecondMomentDimension));
  return two_uniform_certificate(walsh_spectrum(f, threads));
}

CertificatePolynomial::CertificatePolynomial(std::vector<Rational> coefficients,
                                             unsigned delta, int n)
    : coefficients_(std::move(coefficients)), delta_(delta), n_(n) {
  if (n < kMinDimension || n > kMaxDimension)
    throw std::invalid_argument("certificate dimension out of range");
  if (delta < 2 || delta % 2 != 0)
    throw std::invalid_argument("certificate target delta must be a positive even integer");
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.empty())
    throw std::invalid_argument("certificate polynomial must be nonzero");
  for (unsigned x = 0; x <= delta; x += 2)
    if (evaluate(Rational(x)) != 0)
      throw std::invalid_argument("phi(" + std::to_string(x) + ") must vanish");
  const unsigned top = 1u << n;
  for (unsigned x = delta + 2; x <= top; x += 2)
    if (evaluate(Rational(x)) <= 0)
      throw std::invalid_argument("phi(" + std::to_string(x) + ") must be positive");
}

CertificatePolynomial CertificatePolynomial::vanishing_product(unsigned delta, int n) {
  if (delta % 2 != 0) throw std::invalid_argument("delta must be even");
  std::vector<Rational> poly{Rational(1)};
  for (unsigned root = 0; root <= delta; root += 2) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  return CertificatePolynomial(std::move(poly), delta, n);
}

Rational CertificatePolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

DeltaCertificate delta_uniform_certificate(const SBox& f,
                                           const CertificatePolynomial& phi,
                                           unsigned threads) {
  if (phi.n() != f.n())
    throw std::invalid_argument("certificate polynomial was built for a different n");
  const KTable table = bct_fast(f, threads);
  const auto hist = nonzero_histogram(table);

  DeltaCertificate cert;
  cert.delta = phi.delta();
  const auto coeffs = phi.coefficients();
  const BigInt side = f.size() - 1;
  cert.value = coeffs[0] * Rational(side * side);
  for (std::size_t j = 1; j < coeffs.size(); ++j)
    if (coeffs[j] != 0)
      cert.value += coeffs[j] * Rational(moment_from_histogram(hist, static_cast<unsigned>(j)));
  cert.is_zero = cert.value == 0;

  if (f.n() <= 8) {
    const WalshSpectrum w = walsh_spectrum(f, threads);
    if (bct_moment_walsh(w, 1) != moment_from_histogram(hist, 1))
      throw std::logic_error("first moment disagrees between Walsh and direct routes");
    if (f.n() <= 4 && bct_moment_walsh(w, 2) != moment_from_histogram(hist, 2))
      throw std::logic_error("second moment disagrees between Walsh and direct routes");
    cert.walsh_cross_checked = true;
  }
  return cert;
}

}  // namespace bctkit
