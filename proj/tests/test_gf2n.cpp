#include <doctest.h>

#include <algorithm>
#include <random>

#include "bctkit/gf2n.hpp"
#include "oracles.hpp"

using namespace bctkit;

namespace {

std::vector<Element> scan_roots(const Field& f, auto&& poly) {
  std::vector<Element> out;
  for (Element x = 0; x < f.size(); ++x)
    if (poly(x) == 0) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("default irreducibles follow the lowest weight, smallest encoding convention") {
  for (int n = kMinDimension; n <= kMaxDimension; ++n) {
    const std::uint32_t p = default_irreducible(n);
    CHECK(oracle::degree(p) == n);
    CHECK(oracle::irreducible(p));
    // no irreducible of smaller weight, none of equal weight with smaller encoding
    const int w = std::popcount(p);
    for (std::uint32_t q = 1u << n; q < (2u << n); ++q) {
      if (!(q & 1) || !oracle::irreducible(q)) continue;
      const int wq = std::popcount(q);
      CHECK_FALSE(wq < w);
      if (wq == w) CHECK(q >= p);
    }
  }
  CHECK(make_field(3).reduction() == 0xb);
  CHECK(make_field(8).reduction() == 0x11b);
  CHECK(make_field(16).reduction() == 0x1002b);
}

TEST_CASE("Rabin test agrees with trial division") {
  for (std::uint32_t p = 2; p < (1u << 13); ++p) CHECK(is_irreducible(p) == oracle::irreducible(p));
}

TEST_CASE("field construction and serialization") {
  CHECK_THROWS_AS(make_field(1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(17), std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0xf), std::invalid_argument);
  CHECK_THROWS_AS(Field(4, 0xb), std::invalid_argument);
  CHECK(make_field(3).to_string() == "3:b");
  CHECK(parse_field("8:11b") == make_field(8));
  CHECK(parse_field("8:0x11d").reduction() == 0x11d);
  CHECK_THROWS_AS(parse_field("8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("8:zz"), std::invalid_argument);
}

TEST_CASE("multiplication matches long division") {
  const Field f3 = make_field(3);
  CHECK(f3.mul(0b010, 0b100) == 0b011);
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 16; ++n) {
    const Field f = make_field(n);
    std::uniform_int_distribution<Element> d(0, f.mask());
    for (int k = 0; k < 2000; ++k) {
      const Element x = d(rng), y = d(rng);
      CHECK(f.mul(x, y) == oracle::mul(x, y, f.reduction()));
    }
  }
}

TEST_CASE("field axioms hold exhaustively for small n") {
  for (int n = 2; n <= 5; ++n) {
    const Field f = make_field(n);
    for (Element x = 0; x < f.size(); ++x) {
      CHECK(f.mul(x, 1) == x);
      CHECK(f.mul(x, 0) == 0);
      if (x != 0) CHECK(f.mul(x, f.inv(x)) == 1);
      for (Element y = 0; y < f.size(); ++y) {
        CHECK(f.mul(x, y) == f.mul(y, x));
        for (Element z = 0; z < f.size(); ++z) {
          CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
          CHECK(f.mul(x, y ^ z) == (f.mul(x, y) ^ f.mul(x, z)));
        }
      }
    }
  }
  const Field f6 = make_field(6);
  for (Element x = 0; x < f6.size(); ++x)
    for (Element y = 0; y < f6.size(); ++y)
      for (Element z = 0; z < f6.size(); z += 7)
        CHECK(f6.mul(f6.mul(x, y), z) == f6.mul(x, f6.mul(y, z)));
}

TEST_CASE("inverse and powers") {
  const Field f3 = make_field(3);
  CHECK(f3.inv(1) == 1);
  CHECK(f3.inv(0b010) == 0b101);
  CHECK_THROWS_AS(f3.inv(0), std::domain_error);
  for (int n = 2; n <= 10; ++n) {
    const Field f = make_field(n);
    CHECK(f.pow(0, 0) == 1);
    for (Element x = 1; x < f.size(); ++x) {
      CHECK(f.inv(f.inv(x)) == x);
      CHECK(f.pow(x, f.size() - 1) == 1);
      CHECK(f.pow(x, 1) == x);
    }
  }
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 16; ++n) {
    const Field f = make_field(n);
    std::uniform_int_distribution<Element> d(1, f.mask());
    for (int k = 0; k < 3; ++k) {
      const Element g = d(rng);
      const std::uint64_t e = std::min<std::uint64_t>(f.size() - 1, 5000);
      CHECK(f.pow(g, e) == oracle::pow(g, e, f.reduction()));
    }
  }
}

TEST_CASE("trace is additive, onto, with balanced fibres") {
  for (int n = 2; n <= 8; ++n) {
    const Field f = make_field(n);
    CHECK(f.trace(0) == 0);
    std::uint32_t zeros = 0;
    for (Element x = 0; x < f.size(); ++x) {
      zeros += f.trace(x) == 0;
      for (Element y = 0; y < f.size(); ++y) CHECK((f.trace(x) ^ f.trace(y)) == f.trace(x ^ y));
    }
    CHECK(zeros == f.size() / 2);
  }
  for (int n = 9; n <= 16; ++n) {
    const Field f = make_field(n);
    std::uint32_t zeros = 0;
    for (Element x = 0; x < f.size(); ++x) zeros += f.trace(x) == 0;
    CHECK(zeros == f.size() / 2);
  }
}

TEST_CASE("element order, omega and primitive elements") {
  for (int n = 2; n <= 10; ++n) {
    const Field f = make_field(n);
    CHECK(f.order(1) == 1);
    CHECK_THROWS_AS(f.order(0), std::domain_error);
    for (Element x = 1; x < f.size(); ++x) {
      const std::uint64_t k = f.order(x);
      CHECK((f.size() - 1) % k == 0);
      CHECK(f.pow(x, k) == 1);
      for (std::uint64_t d = 1; d < k && d < 64; ++d) CHECK(f.pow(x, d) != 1);
    }
    const Element g = find_primitive(f);
    CHECK(f.order(g) == f.size() - 1);
    for (Element x = 2; x < g; ++x) CHECK(f.order(x) != f.size() - 1);
    if (n % 2 == 0) {
      const Element w = find_omega(f);
      CHECK((f.square(w) ^ w ^ 1) == 0);
      CHECK(f.order(w) == 3);
      for (Element x = 2; x < w; ++x) CHECK(f.order(x) != 3);
    } else {
      CHECK_THROWS_AS(find_omega(f), std::invalid_argument);
    }
  }
  CHECK(find_omega(make_field(2)) == 0b10);
}

TEST_CASE("Artin-Schreier and quadratic solvers match exhaustive scans") {
  for (int n = 2; n <= 6; ++n) {
    const Field f = make_field(n);
    for (Element c = 0; c < f.size(); ++c) {
      const auto roots = solve_artin_schreier(f, c);
      CHECK(roots == scan_roots(f, [&](Element x) { return f.square(x) ^ x ^ c; }));
      CHECK(roots.size() == (f.trace(c) == 0 ? 2u : 0u));
    }
    CHECK(solve_artin_schreier(f, 0) == std::vector<Element>{0, 1});
    for (Element a = 0; a < f.size(); ++a)
      for (Element b = 0; b < f.size(); ++b) {
        const auto roots = solve_quadratic(f, a, b);
        CHECK(roots == scan_roots(f, [&](Element x) { return f.square(x) ^ f.mul(a, x) ^ b; }));
        if (a == 0) CHECK(roots.size() == 1);
        else CHECK(roots.size() == (f.trace(f.div(b, f.square(a))) == 0 ? 2u : 0u));
      }
  }
  std::mt19937_64 rng(3);
  for (int n = 7; n <= 12; ++n) {
    const Field f = make_field(n);
    std::uniform_int_distribution<Element> d(0, f.mask());
    for (int k = 0; k < 40; ++k) {
      const Element a = d(rng), b = d(rng);
      CHECK(solve_quadratic(f, a, b) ==
            scan_roots(f, [&](Element x) { return f.square(x) ^ f.mul(a, x) ^ b; }));
    }
  }
}

TEST_CASE("cubic roots match exhaustive scans") {
  const Field f4 = make_field(4);
  CHECK(cubic_roots(f4, 0, 0) == std::vector<Element>{0});
  {
    const Element w = find_omega(f4);
    std::vector<Element> expected{1, w, f4.square(w)};
    std::sort(expected.begin(), expected.end());
    CHECK(cubic_roots(f4, 0, 1) == expected);
  }
  for (int n = 2; n <= 6; ++n) {
    const Field f = make_field(n);
    for (Element a2 = 0; a2 < f.size(); ++a2)
      for (Element a1 = 0; a1 < f.size(); ++a1) {
        auto g = [&](Element x) { return f.mul(f.square(x), x) ^ f.mul(a2, x) ^ a1; };
        CHECK(cubic_roots(f, a2, a1) == scan_roots(f, g));
      }
  }
  std::mt19937_64 rng(4);
  for (int n = 7; n <= 12; ++n) {
    const Field f = make_field(n);
    std::uniform_int_distribution<Element> d(0, f.mask());
    for (int k = 0; k < 40; ++k) {
      const Element a2 = d(rng), a1 = d(rng);
      auto g = [&](Element x) { return f.mul(f.square(x), x) ^ f.mul(a2, x) ^ a1; };
      CHECK(cubic_roots(f, a2, a1) == scan_roots(f, g));
    }
  }
}

TEST_CASE("quartic roots and the four-roots criterion match exhaustive scans") {
  const Field f4 = make_field(4);
  CHECK_THROWS_AS(quartic_roots(f4, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(quartic_roots(f4, 1, 1, 0), std::invalid_argument);
  for (int n = 2; n <= 6; ++n) {
    const Field f = make_field(n);
    for (Element a2 = 0; a2 < f.size(); ++a2)
      for (Element a1 = 1; a1 < f.size(); ++a1)
        for (Element a0 = 1; a0 < f.size(); ++a0) {
          auto q = [&](Element x) {
            const Element x2 = f.square(x);
            return f.square(x2) ^ f.mul(a2, x2) ^ f.mul(a1, x) ^ a0;
          };
          const auto expected = scan_roots(f, q);
          CHECK(quartic_roots(f, a2, a1, a0) == expected);
          CHECK(quartic_has_four_roots(f, a2, a1, a0) == (expected.size() == 4));
        }
  }
}

TEST_CASE("x^4 + x = c has four roots exactly when tr(c) = tr(wc) = tr(w^2 c) = 0") {
  for (int n : {4, 6, 10}) {
    const Field f = make_field(n);
    const Element w = find_omega(f);
    const Element w2 = f.square(w);
    int four = 0;
    for (Element c = 1; c < f.size(); ++c) {
      const bool traces = f.trace(c) == 0 && f.trace(f.mul(w, c)) == 0 && f.trace(f.mul(w2, c)) == 0;
      CHECK(quartic_has_four_roots(f, 0, 1, c) == traces);
      CHECK((quartic_roots(f, 0, 1, c).size() == 4) == traces);
      four += traces;
    }
    CHECK(four > 0);
  }
}
