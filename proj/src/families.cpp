#include "bctkit/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bctkit {
namespace {

[[noreturn]] void reject(const std::string& family, const std::string& why) {
  throw std::invalid_argument(family + ": " + why);
}

Field resolve_field(const std::string& family, int n, const FieldOverride& field) {
  if (n < kMinDimension || n > kMaxDimension)
    reject(family, "field dimension n = " + std::to_string(n) + " outside [2, 16]");
  if (!field) return make_field(n);
  if (field->n() != n)
    reject(family, "field override has n = " + std::to_string(field->n()) +
                       " but the parameters require n = " + std::to_string(n));
  return *field;
}

FamilyMember power_member(std::string name,
                          std::vector<std::pair<std::string, std::int64_t>> params,
                          const Field& field, std::uint64_t d, ExpectedClass expected) {
  return {std::move(name), std::move(params), from_monomial(field, d), d, expected};
}

ExpectedClass gold_like_class(int n, int i) {
  const int g = std::gcd(n, i);
  if (n % 2 == 1 && g == 1) return ExpectedClass::apn;
  if (n % 2 == 0 && (n / 2) % 2 == 1 && g == 2) return ExpectedClass::four_uniform;
  return ExpectedClass::unspecified;
}

void require_index(const std::string& family, int n, int i) {
  if (i < 1 || i >= n)
    reject(family, "need 1 <= i < n, got i = " + std::to_string(i));
}

// q = 2^m for GF(q^2), m odd.
int zieve_half_dimension(const Field& field) {
  if (field.n() % 2 != 0 || (field.n() / 2) % 2 == 0)
    throw std::invalid_argument("zieve: field must be GF(q^2) with q = 2^m, m odd");
  return field.n() / 2;
}

void require_zieve_gamma(const Field& field, Element gamma) {
  const std::uint64_t q = std::uint64_t{1} << zieve_half_dimension(field);
  if (gamma == 0 || !field.contains(gamma) || field.order(field.pow(gamma, q - 1)) != 3)
    throw std::invalid_argument("zieve: gamma^{q-1} must have order 3");
}

bool is_zero_or_unit_cube_root(const Field& field, Element a) {
  if (a == 0 || a == 1) return true;
  return field.n() % 2 == 0 && field.order(a) == 3;
}

}  // namespace

const char* to_string(ExpectedClass c) {
  switch (c) {
    case ExpectedClass::apn: return "apn";
    case ExpectedClass::four_uniform: return "four_uniform";
    case ExpectedClass::unspecified: break;
  }
  return "unspecified";
}

std::string FamilyMember::describe() const {
  std::ostringstream out;
  out << name;
  for (const auto& [key, value] : params) out << ' ' << key << '=' << value;
  return out.str();
}

std::uint64_t gold_exponent(int i) { return (std::uint64_t{1} << i) + 1; }

std::uint64_t kasami_exponent(int i) {
  return (std::uint64_t{1} << (2 * i)) - (std::uint64_t{1} << i) + 1;
}

FamilyMember gold(int n, int i, FieldOverride field) {
  const Field f = resolve_field("gold", n, field);
  require_index("gold", n, i);
  return power_member("gold", {{"n", n}, {"i", i}}, f, gold_exponent(i), gold_like_class(n, i));
}

FamilyMember kasami(int n, int i, FieldOverride field) {
  const Field f = resolve_field("kasami", n, field);
  require_index("kasami", n, i);
  return power_member("kasami", {{"n", n}, {"i", i}}, f, kasami_exponent(i),
                      gold_like_class(n, i));
}

FamilyMember welch(int k, FieldOverride field) {
  if (k < 1) reject("welch", "need k >= 1");
  const Field f = resolve_field("welch", 2 * k + 1, field);
  return power_member("welch", {{"k", k}}, f, (std::uint64_t{1} << k) + 3, ExpectedClass::apn);
}

FamilyMember niho(int k, FieldOverride field) {
  if (k < 1) reject("niho", "need k >= 1");
  const Field f = resolve_field("niho", 2 * k + 1, field);
  const int second = k % 2 == 0 ? k / 2 : (3 * k + 1) / 2;
  const std::uint64_t d = (std::uint64_t{1} << k) + (std::uint64_t{1} << second) - 1;
  return power_member("niho", {{"k", k}}, f, d, ExpectedClass::apn);
}

FamilyMember inverse_fn(int n, FieldOverride field) {
  const Field f = resolve_field("inverse", n, field);
  return power_member("inverse", {{"n", n}}, f, f.size() - 2,
                      n % 2 == 1 ? ExpectedClass::apn : ExpectedClass::four_uniform);
}

FamilyMember dobbertin(int k, FieldOverride field) {
  if (k < 1) reject("dobbertin", "need k >= 1");
  const Field f = resolve_field("dobbertin", 5 * k, field);
  const std::uint64_t d = (std::uint64_t{1} << (4 * k)) + (std::uint64_t{1} << (3 * k)) +
                          (std::uint64_t{1} << (2 * k)) + (std::uint64_t{1} << k) - 1;
  return power_member("dobbertin", {{"k", k}}, f, d, ExpectedClass::apn);
}

FamilyMember bracken_leander(int k, FieldOverride field) {
  if (k < 1 || k % 2 == 0) reject("bracken_leander", "need k odd and positive");
  const Field f = resolve_field("bracken_leander", 4 * k, field);
  const std::uint64_t d = (std::uint64_t{1} << (2 * k)) + (std::uint64_t{1} << k) + 1;
  return power_member("bracken_leander", {{"k", k}}, f, d, ExpectedClass::four_uniform);
}

FamilyMember btt(int k, int s, std::optional<Element> alpha, FieldOverride field) {
  if (k < 2 || k % 2 != 0 || k % 3 == 0 || (k / 2) % 2 == 0)
    reject("btt", "need k even, 3 !| k and k/2 odd, got k = " + std::to_string(k));
  const int n = 3 * k;
  if (s < 1 || std::gcd(n, s) != 2 || (k + s) % 3 != 0)
    reject("btt", "need gcd(3k, s) = 2 and 3 | k+s, got s = " + std::to_string(s));
  const Field f = resolve_field("btt", n, field);
  const Element a = alpha ? *alpha : find_primitive(f);
  if (a == 0 || !f.contains(a) || f.order(a) != f.size() - 1)
    reject("btt", "alpha must be a primitive element");

  // x^{2^n} = x, so every 2-power exponent is reduced mod n.
  auto two_pow = [n](int e) { return std::uint64_t{1} << (((e % n) + n) % n); };
  const Term terms[] = {
      {two_pow(s) + 1, a},
      {two_pow(n - k) + two_pow(k + s), f.pow(a, two_pow(k))},
  };
  std::vector<std::pair<std::string, std::int64_t>> params{{"k", k}, {"s", s}};
  if (alpha) params.emplace_back("alpha", *alpha);
  return {"btt", std::move(params), from_polynomial(f, terms), std::nullopt,
          ExpectedClass::four_uniform};
}

FamilyMember modified_inverse(int n, FieldOverride field) {
  const Field f = resolve_field("modified_inverse", n, field);
  std::vector<Element> t(f.size());
  t[0] = 1;
  t[1] = 0;
  for (Element x = 2; x < f.size(); ++x) t[x] = f.inv(x);
  return {"modified_inverse", {{"n", n}}, SBox(f, std::move(t)), std::nullopt,
          ExpectedClass::unspecified};
}

std::vector<Element> zieve_gamma_candidates(const Field& field) {
  const std::uint64_t q = std::uint64_t{1} << zieve_half_dimension(field);
  std::vector<Element> out;
  for (Element g = 1; g < field.size(); ++g)
    if (field.order(field.pow(g, q - 1)) == 3) out.push_back(g);
  return out;
}

FamilyMember zieve_binomial(const Field& field, Element gamma) {
  require_zieve_gamma(field, gamma);
  const std::uint64_t q = std::uint64_t{1} << (field.n() / 2);
  const Term terms[] = {{q + 2, 1}, {1, gamma}};
  return {"zieve_binomial",
          {{"n", field.n()}, {"gamma", gamma}},
          from_polynomial(field, terms),
          std::nullopt,
          ExpectedClass::unspecified};
}

FamilyMember zieve_binomial_inverse(const Field& field, Element gamma) {
  require_zieve_gamma(field, gamma);
  const std::uint64_t q = std::uint64_t{1} << (field.n() / 2);
  const std::uint64_t t = (2 * q - 1) / 3;
  const Element gamma_q = field.pow(gamma, q);
  const Element eps = gamma_q ^ gamma;
  const Element eps2 = field.square(eps);
  const Element eps3 = field.mul(eps2, eps);
  const Element tail = eps2 ^ field.mul(eps, gamma_q);

  std::vector<Element> table(field.size());
  for (Element x = 0; x < field.size(); ++x) {
    const Element u = field.pow(x, q + 1) ^ eps3;
    const Element ut = field.pow(u, t);
    const Element inner = field.square(ut) ^ field.mul(gamma_q, ut) ^ tail;
    table[x] = field.mul(field.pow(x, q * q - q - 1), inner);
  }
  return {"zieve_binomial_inverse",
          {{"n", field.n()}, {"gamma", gamma}},
          SBox(field, std::move(table)),
          std::nullopt,
          ExpectedClass::unspecified};
}

std::vector<std::string> family_names() {
  return {"gold",    "kasami",          "welch",      "niho",
          "inverse", "dobbertin",       "bracken_leander", "btt",
          "modified_inverse", "zieve_binomial", "zieve_binomial_inverse"};
}

FamilyMember parse_family_spec(std::string_view text, FieldOverride field) {
  std::istringstream in{std::string(text)};
  std::string name;
  if (!(in >> name)) throw std::invalid_argument("empty family spec");

  std::map<std::string, std::int64_t> kv;
  for (std::string token; in >> token;) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      throw std::invalid_argument("family parameter '" + token + "' is not key=value");
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    std::int64_t parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoll(value, &used, 0);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("family parameter '" + key + "' has non-integer value '" +
                                  value + "'");
    }
    if (!kv.emplace(key, parsed).second)
      throw std::invalid_argument("family parameter '" + key + "' given twice");
  }

  auto take = [&](const std::vector<std::string>& required,
                  const std::vector<std::string>& optional_keys) {
    for (const auto& [key, value] : kv)
      if (std::find(required.begin(), required.end(), key) == required.end() &&
          std::find(optional_keys.begin(), optional_keys.end(), key) == optional_keys.end())
        throw std::invalid_argument(name + ": unknown parameter '" + key + "'");
    for (const auto& key : required)
      if (!kv.count(key)) throw std::invalid_argument(name + ": missing parameter '" + key + "'");
  };
  auto get = [&](const std::string& key) {
    const std::int64_t v = kv.at(key);
    if (v < 0 || v > 1'000'000) throw std::invalid_argument(name + ": " + key + " out of range");
    return static_cast<int>(v);
  };

  if (name == "gold" || name == "kasami") {
    take({"n", "i"}, {});
    return name == "gold" ? gold(get("n"), get("i"), field) : kasami(get("n"), get("i"), field);
  }
  if (name == "welch") { take({"k"}, {}); return welch(get("k"), field); }
  if (name == "niho") { take({"k"}, {}); return niho(get("k"), field); }
  if (name == "inverse") { take({"n"}, {}); return inverse_fn(get("n"), field); }
  if (name == "dobbertin") { take({"k"}, {}); return dobbertin(get("k"), field); }
  if (name == "bracken_leander") { take({"k"}, {}); return bracken_leander(get("k"), field); }
  if (name == "modified_inverse") { take({"n"}, {}); return modified_inverse(get("n"), field); }
  if (name == "btt") {
    take({"k", "s"}, {"alpha"});
    std::optional<Element> alpha;
    if (kv.count("alpha")) alpha = static_cast<Element>(get("alpha"));
    return btt(get("k"), get("s"), alpha, field);
  }
  if (name == "zieve_binomial" || name == "zieve_binomial_inverse") {
    take({"n"}, {"gamma"});
    const Field f = resolve_field(name, get("n"), field);
    Element gamma;
    if (kv.count("gamma")) {
      gamma = static_cast<Element>(get("gamma"));
    } else {
      const auto candidates = zieve_gamma_candidates(f);
      if (candidates.empty()) throw std::invalid_argument(name + ": no valid gamma");
      gamma = candidates.front();
    }
    return name == "zieve_binomial" ? zieve_binomial(f, gamma) : zieve_binomial_inverse(f, gamma);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

SparseMembership lemma4_membership(const Field& field, Element a, Element b) {
  if (!field.contains(a) || !field.contains(b) || b == 0 || is_zero_or_unit_cube_root(field, a))
    throw std::invalid_argument("lemma4: need a, b != 0 and a not in {1, w, w^2}");
  const Element a2 = field.square(a);
  const Element b2 = field.square(b);
  const Element ab = field.mul(a, b);
  const Element a2b2 = field.mul(a2, b2);
  const bool e3 = (a2b2 ^ field.mul(a2, b) ^ ab ^ 1) == 0;
  const bool e4 = (a2b2 ^ field.mul(a, b2) ^ ab ^ 1) == 0;
  SparseMembership m;
  m.s3 = e3;
  m.s4 = e4;
  m.s1 = e3 || b == field.div(1 ^ a, a);
  m.s2 = e4 || b == field.inv(1 ^ a);
  return m;
}

std::vector<SparseSolution> lemma4_classify(const Field& field, Element a, Element b) {
  const SparseMembership m = lemma4_membership(field, a, b);
  std::vector<SparseSolution> out;
  // b = 1 lies in none of the sets for admissible a, so b + 1 is invertible
  // whenever a case fires.
  const Element ab = field.mul(a, b);
  if (m.s1) out.push_back({1, 0, field.inv(b ^ 1)});
  if (m.s2) out.push_back({2, 1, field.inv(b)});
  if (m.s3) out.push_back({3, a, field.div(ab ^ a ^ 1, b ^ 1)});
  if (m.s4) out.push_back({4, a ^ 1, field.div(ab ^ 1, b)});
  return out;
}

}  // namespace bctkit
