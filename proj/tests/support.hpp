#pragma once

#include <random>
#include <string>
#include <vector>

#include "bctkit/families.hpp"
#include "bctkit/sbox.hpp"
#include "bctkit/tables.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Table to_table(const bctkit::SBox& f) {
  return {f.table().begin(), f.table().end()};
}

inline oracle::Table to_table(const bctkit::KTable& t) {
  return {t.counts().begin(), t.counts().end()};
}

inline bctkit::SBox to_sbox(const bctkit::Field& field, const oracle::Table& t) {
  return bctkit::SBox(field, std::vector<bctkit::Element>(t.begin(), t.end()));
}

// Every family member with 2 <= n <= max_n that the constructors accept.
inline std::vector<bctkit::FamilyMember> family_corpus(int max_n) {
  using namespace bctkit;
  std::vector<FamilyMember> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int i = 1; i < n; ++i) {
      out.push_back(gold(n, i));
      out.push_back(kasami(n, i));
    }
    out.push_back(inverse_fn(n));
    out.push_back(modified_inverse(n));
  }
  for (int k = 1; 2 * k + 1 <= max_n; ++k) {
    out.push_back(welch(k));
    out.push_back(niho(k));
  }
  for (int k = 1; 5 * k <= max_n; ++k) out.push_back(dobbertin(k));
  for (int k = 1; 4 * k <= max_n; k += 2) out.push_back(bracken_leander(k));
  if (max_n >= 6) {
    out.push_back(btt(2, 4));
    const Field gf64 = make_field(6);
    for (Element g : zieve_gamma_candidates(gf64)) {
      out.push_back(zieve_binomial(gf64, g));
      out.push_back(zieve_binomial_inverse(gf64, g));
    }
  }
  return out;
}

}  // namespace support
