#include "bctkit/sbox.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bctkit {

SBox::SBox(Field field, std::vector<Element> table)
    : field_(field), table_(std::move(table)) {
  if (table_.size() != field_.size())
    throw std::invalid_argument("S-box table must have 2^n = " +
                                std::to_string(field_.size()) + " entries, got " +
                                std::to_string(table_.size()));
  for (Element y : table_)
    if (!field_.contains(y))
      throw std::invalid_argument("S-box entry " + std::to_string(y) +
                                  " out of range for n = " +
                                  std::to_string(field_.n()));
}

SBox SBox::identity(const Field& field) {
  std::vector<Element> t(field.size());
  for (Element x = 0; x < field.size(); ++x) t[x] = x;
  return SBox(field, std::move(t));
}

SBox from_monomial(const Field& field, std::uint64_t d) {
  std::vector<Element> t(field.size());
  for (Element x = 0; x < field.size(); ++x) t[x] = field.pow(x, d);
  return SBox(field, std::move(t));
}

SBox from_polynomial(const Field& field, std::span<const Term> terms) {
  for (const Term& term : terms)
    if (!field.contains(term.coefficient))
      throw std::invalid_argument("polynomial coefficient out of range");
  std::vector<Element> t(field.size(), 0);
  for (Element x = 0; x < field.size(); ++x) {
    Element acc = 0;
    for (const Term& term : terms)
      acc ^= field.mul(term.coefficient, field.pow(x, term.exponent));
    t[x] = acc;
  }
  return SBox(field, std::move(t));
}

bool is_permutation(const SBox& f) {
  std::vector<bool> seen(f.size(), false);
  for (Element y : f.table()) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

SBox inverse_table(const SBox& f) {
  if (!is_permutation(f))
    throw std::invalid_argument("inverse_table requires a permutation");
  std::vector<Element> g(f.size());
  for (Element x = 0; x < f.size(); ++x) g[f(x)] = x;
  return SBox(f.field(), std::move(g));
}

SBox compose(const SBox& f, const SBox& g) {
  if (f.field() != g.field())
    throw std::invalid_argument("compose: S-boxes live over different fields");
  std::vector<Element> t(f.size());
  for (Element x = 0; x < f.size(); ++x) t[x] = f(g(x));
  return SBox(f.field(), std::move(t));
}

SBox derivative(const SBox& f, Element a) {
  if (!f.field().contains(a))
    throw std::invalid_argument("derivative direction out of range");
  std::vector<Element> t(f.size());
  for (Element x = 0; x < f.size(); ++x) t[x] = f(x ^ a) ^ f(x);
  return SBox(f.field(), std::move(t));
}

AffineMap::AffineMap(Field field, std::vector<Element> linear, Element constant)
    : field_(field), linear_(std::move(linear)), constant_(constant) {
  if (linear_.size() != static_cast<std::size_t>(field_.n()))
    throw std::invalid_argument("affine map needs exactly n linear coefficients");
  if (!field_.contains(constant_))
    throw std::invalid_argument("affine constant out of range");
  for (Element a : linear_)
    if (!field_.contains(a))
      throw std::invalid_argument("affine coefficient out of range");

  // The linear part is GF(2)-linear, so tabulate images of the basis and
  // extend by XOR.
  std::vector<Element> basis(field_.n());
  for (int j = 0; j < field_.n(); ++j) {
    Element e = Element{1} << j;
    Element acc = 0;
    Element frob = e;
    for (int i = 0; i < field_.n(); ++i) {
      acc ^= field_.mul(linear_[i], frob);
      frob = field_.square(frob);
    }
    basis[j] = acc;
  }
  table_.assign(field_.size(), 0);
  for (Element x = 1; x < field_.size(); ++x) {
    const int low = std::countr_zero(x);
    table_[x] = table_[x & (x - 1)] ^ basis[low];
  }
  for (Element& y : table_) y ^= constant_;
}

bool AffineMap::is_permutation() const { return bctkit::is_permutation(as_sbox()); }

SBox affine_apply(const AffineMap& map, const SBox& f, Side side) {
  if (map.field() != f.field())
    throw std::invalid_argument("affine_apply: field mismatch");
  std::vector<Element> t(f.size());
  for (Element x = 0; x < f.size(); ++x)
    t[x] = side == Side::post ? map(f(x)) : f(map(x));
  return SBox(f.field(), std::move(t));
}

}  // namespace bctkit
