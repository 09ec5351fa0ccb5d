#include "bctkit/gf2n.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace bctkit {
namespace {

constexpr std::array<std::uint32_t, kMaxDimension + 1> kDefaultIrreducible = {
    0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

int degree(std::uint64_t p) { return p == 0 ? -1 : std::bit_width(p) - 1; }

// Product of a and b modulo p over GF(2); p need not be irreducible.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const int d = degree(p);
  const std::uint64_t top = std::uint64_t{1} << d;
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= p;
  }
  return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
  const int dp = degree(p);
  for (int da = degree(a); da >= dp; da = degree(a)) a ^= p << (da - dp);
  return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// x^(2^k) mod p by repeated squaring.
std::uint64_t frobenius_power_of_x(int k, std::uint64_t p) {
  std::uint64_t r = poly_mod(0b10, p);
  for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, p);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Solution set of the GF(2)-affine equation L(x) = rhs, where L is given by
// the images of the basis vectors e_0..e_{n-1}.
struct AffineSolution {
  bool solvable = false;
  Element particular = 0;
  std::vector<Element> kernel;  // basis of ker L

  std::vector<Element> enumerate() const {
    std::vector<Element> out;
    if (!solvable) return out;
    const std::size_t count = std::size_t{1} << kernel.size();
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      Element x = particular;
      for (std::size_t i = 0; i < kernel.size(); ++i)
        if (mask >> i & 1) x ^= kernel[i];
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

AffineSolution solve_linear(const std::vector<Element>& images, Element rhs) {
  struct Pivot {
    Element image = 0;
    Element preimage = 0;
  };
  std::array<Pivot, 32> basis{};  // indexed by leading bit of the image

  auto reduce = [&](Element& v, Element& comb) {
    for (int bit = 31; bit >= 0; --bit) {
      if ((v >> bit & 1) && basis[bit].image != 0) {
        v ^= basis[bit].image;
        comb ^= basis[bit].preimage;
      }
    }
  };

  AffineSolution sol;
  for (std::size_t i = 0; i < images.size(); ++i) {
    Element v = images[i];
    Element comb = Element{1} << i;
    reduce(v, comb);
    if (v == 0) {
      sol.kernel.push_back(comb);
    } else {
      basis[std::bit_width(v) - 1] = {v, comb};
    }
  }
  Element comb = 0;
  reduce(rhs, comb);
  sol.solvable = rhs == 0;
  sol.particular = comb;
  return sol;
}

template <typename Map>
std::vector<Element> basis_images(const Field& field, Map&& map) {
  std::vector<Element> images(field.n());
  for (int i = 0; i < field.n(); ++i) images[i] = map(Element{1} << i);
  return images;
}

// x^4 + a2*x^2 + a1*x, the linearized multiple x*(x^3 + a2*x + a1).
AffineSolution solve_quartic_linearized(const Field& field, Element a2,
                                        Element a1, Element rhs) {
  auto map = [&](Element x) {
    const Element x2 = field.square(x);
    return field.square(x2) ^ field.mul(a2, x2) ^ field.mul(a1, x);
  };
  return solve_linear(basis_images(field, map), rhs);
}

void require_element(const Field& field, Element x) {
  if (!field.contains(x))
    throw std::invalid_argument("element out of range for field " +
                                field.to_string());
}

}  // namespace

std::uint32_t default_irreducible(int n) {
  if (n < kMinDimension || n > kMaxDimension)
    throw std::invalid_argument("field dimension must be in [2, 16], got " +
                                std::to_string(n));
  return kDefaultIrreducible[n];
}

bool is_irreducible(std::uint32_t poly) {
  const int n = degree(poly);
  if (n < 1) return false;
  if (n == 1) return true;
  if (frobenius_power_of_x(n, poly) != poly_mod(0b10, poly)) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(n))) {
    const std::uint64_t h = frobenius_power_of_x(n / static_cast<int>(r), poly) ^ 0b10;
    if (degree(poly_gcd(poly, h)) != 0) return false;
  }
  return true;
}

Field::Field(int n, std::uint32_t reduction)
    : n_(n), reduction_(reduction), size_(0) {
  if (n < kMinDimension || n > kMaxDimension)
    throw std::invalid_argument("field dimension must be in [2, 16], got " +
                                std::to_string(n));
  if (degree(reduction) != n)
    throw std::invalid_argument("reduction polynomial must have degree n");
  if (!is_irreducible(reduction))
    throw std::invalid_argument("reduction polynomial is not irreducible");
  size_ = std::uint32_t{1} << n;
}

Element Field::mul(Element x, Element y) const {
  Element r = 0;
  while (y != 0) {
    if (y & 1) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x & size_) x ^= reduction_;
  }
  return r;
}

Element Field::pow(Element x, std::uint64_t e) const {
  Element r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Element Field::inv(Element x) const {
  if (x == 0) throw std::domain_error("zero has no multiplicative inverse");
  return pow(x, size_ - 2);
}

int Field::trace(Element x) const {
  Element acc = x;
  Element t = x;
  for (int i = 1; i < n_; ++i) {
    t = square(t);
    acc ^= t;
  }
  return static_cast<int>(acc & 1);
}

std::uint64_t Field::order(Element x) const {
  if (x == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t ord = size_ - 1;
  for (std::uint64_t p : prime_factors(ord)) {
    while (ord % p == 0 && pow(x, ord / p) == 1) ord /= p;
  }
  return ord;
}

std::string Field::to_string() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%d:%x", n_, reduction_);
  return buf;
}

Field make_field(int n) { return Field(n, default_irreducible(n)); }

Field parse_field(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("field must be written as n:reduction-hex");
  int n = 0;
  std::string_view ns = text.substr(0, colon);
  auto [p1, e1] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  if (e1 != std::errc{} || p1 != ns.data() + ns.size())
    throw std::invalid_argument("bad field dimension in '" + std::string(text) + "'");
  std::string_view hs = text.substr(colon + 1);
  if (hs.starts_with("0x") || hs.starts_with("0X")) hs.remove_prefix(2);
  std::uint32_t poly = 0;
  auto [p2, e2] = std::from_chars(hs.data(), hs.data() + hs.size(), poly, 16);
  if (hs.empty() || e2 != std::errc{} || p2 != hs.data() + hs.size())
    throw std::invalid_argument("bad reduction polynomial in '" + std::string(text) + "'");
  return Field(n, poly);
}

Element find_omega(const Field& field) {
  if (field.n() % 2 != 0)
    throw std::invalid_argument("GF(4) is not a subfield of GF(2^n) for odd n");
  for (Element x = 2; x < field.size(); ++x)
    if (field.order(x) == 3) return x;
  throw std::logic_error("no element of order 3 found");
}

Element find_primitive(const Field& field) {
  for (Element x = 2; x < field.size(); ++x)
    if (field.order(x) == field.size() - 1) return x;
  throw std::logic_error("no primitive element found");
}

std::vector<Element> solve_artin_schreier(const Field& field, Element c) {
  require_element(field, c);
  auto map = [&](Element x) { return field.square(x) ^ x; };
  return solve_linear(basis_images(field, map), c).enumerate();
}

std::vector<Element> solve_quadratic(const Field& field, Element a, Element b) {
  require_element(field, a);
  require_element(field, b);
  if (a == 0) return {field.pow(b, std::uint64_t{1} << (field.n() - 1))};
  // x = a*z turns x^2 + a*x + b into z^2 + z = b / a^2.
  const Element c = field.div(b, field.square(a));
  std::vector<Element> roots;
  for (Element z : solve_artin_schreier(field, c)) roots.push_back(field.mul(a, z));
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Element> cubic_roots(const Field& field, Element a2, Element a1) {
  require_element(field, a2);
  require_element(field, a1);
  if (a1 == 0) {
    // x * (x^2 + a2); the square root of a2 is unique.
    std::vector<Element> roots{0, field.pow(a2, std::uint64_t{1} << (field.n() - 1))};
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
  }
  // Nonzero elements of the kernel of x^4 + a2*x^2 + a1*x.
  std::vector<Element> roots =
      solve_quartic_linearized(field, a2, a1, 0).enumerate();
  roots.erase(std::remove(roots.begin(), roots.end(), Element{0}), roots.end());
  return roots;
}

std::vector<Element> quartic_roots(const Field& field, Element a2, Element a1,
                                   Element a0) {
  require_element(field, a2);
  require_element(field, a1);
  require_element(field, a0);
  if (field.mul(a0, a1) == 0)
    throw std::invalid_argument("quartic_roots requires a0 * a1 != 0");
  return solve_quartic_linearized(field, a2, a1, a0).enumerate();
}

bool quartic_has_four_roots(const Field& field, Element a2, Element a1,
                            Element a0) {
  require_element(field, a2);
  require_element(field, a1);
  require_element(field, a0);
  if (field.mul(a0, a1) == 0)
    throw std::invalid_argument("quartic criterion requires a0 * a1 != 0");
  const std::vector<Element> resolvent = cubic_roots(field, a2, a1);
  if (resolvent.size() != 3) return false;
  const Element scale = field.div(a0, field.square(a1));
  return std::all_of(resolvent.begin(), resolvent.end(), [&](Element r) {
    return field.trace(field.mul(scale, field.square(r))) == 0;
  });
}

}  // namespace bctkit
