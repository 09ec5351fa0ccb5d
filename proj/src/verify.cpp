#include "bctkit/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <memory>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "bctkit/families.hpp"
#include "bctkit/tables.hpp"

namespace bctkit {
namespace {

struct Outcome {
  std::int64_t value;
  std::string detail;
};

struct Claim {
  ClaimInfo info;
  std::int64_t expected;
  std::function<Outcome()> run;
  bool beyond_desk_scale = false;
  std::string note;  // appended to the detail when the claim fails
};

std::string hex(Element x) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", x);
  return buf;
}

Outcome monomial_bu(const FamilyMember& m) {
  const Field& field = m.sbox.field();
  const UniformityReport r = monomial_boomerang_uniformity(field, *m.exponent);
  return {r.boomerang_uniformity, "x^" + std::to_string(*m.exponent) + " over " +
                                      field.to_string() + " (row a = 1)"};
}

Outcome full_bu(const FamilyMember& m) {
  const UniformityReport r = boomerang_uniformity(m.sbox);
  return {r.boomerang_uniformity, m.describe() + " over " + m.sbox.field().to_string() +
                                      ", max at (" + hex(r.bct_argmax.a) + ", " +
                                      hex(r.bct_argmax.b) + ")"};
}

Outcome full_du(const FamilyMember& m) {
  return {differential_uniformity(m.sbox),
          m.describe() + " over " + m.sbox.field().to_string()};
}

std::vector<Element> cube_roots_of_unity_excluding_one(const Field& field) {
  if (field.n() % 2 != 0) return {};
  const Element w = find_omega(field);
  return {w, field.square(w)};
}

bool admissible_a(const Field& field, Element a) {
  if (a == 0 || a == 1) return false;
  const auto w = cube_roots_of_unity_excluding_one(field);
  return std::find(w.begin(), w.end(), a) == w.end();
}

bool solves_system(const SBox& f, Element a, Element b, Element x, Element y) {
  return (f(x) ^ f(y)) == b && (f(x ^ a) ^ f(y ^ a)) == b;
}

std::int64_t appendix_case_computed(const KTable& t, int case_id) {
  const Field& field = t.field();
  const auto w = cube_roots_of_unity_excluding_one(field);
  std::uint32_t best = 0;
  for (Element a = 1; a < t.size(); ++a) {
    const bool is_one = a == 1;
    const bool is_w = std::find(w.begin(), w.end(), a) != w.end();
    const int which = is_one ? 1 : is_w ? 2 : 3;
    if (which != case_id) continue;
    const auto row = t.row(a);
    for (Element b = 1; b < t.size(); ++b) best = std::max(best, row[b]);
  }
  return best;
}

Outcome lemma5_violations(int n) {
  const Field field = make_field(n);
  std::int64_t bad = 0;
  std::int64_t roots = 0;
  for (Element a = 1; a < field.size(); ++a) {
    if (!admissible_a(field, a)) continue;
    const Element a3 = field.mul(field.square(a), a);
    const bool root = (a3 ^ a ^ 1) == 0;
    roots += root;
    const Element b_a = a;
    const Element b_s1 = field.div(1 ^ a, a);
    const Element b_s2 = field.inv(1 ^ a);
    for (Element b = 1; b < field.size(); ++b) {
      const SparseMembership m = lemma4_membership(field, a, b);
      const bool id1 = (m.s1 && m.s2) == (root && (b == b_a || b == b_s1 || b == b_s2));
      const bool id2 = (m.s1 && m.s3) == m.s3;
      const bool id3 = (m.s1 && m.s4) == (root && (b == b_a || b == b_s1));
      const bool id4 = (m.s2 && m.s3) == (root && (b == b_a || b == b_s2));
      const bool id5 = (m.s2 && m.s4) == m.s4;
      const bool id6 = (m.s3 && m.s4) == (root && b == b_a);
      const bool id7 = (m.s1 && m.s2 && m.s3 && m.s4) == (root && b == b_a);
      bad += !id1 + !id2 + !id3 + !id4 + !id5 + !id6 + !id7;
    }
  }
  return {bad, "violations of the seven intersection identities over " + field.to_string() +
                   "; roots of a^3+a+1: " + std::to_string(roots)};
}

Outcome lemma4_violations(int n) {
  const Field field = make_field(n);
  const SBox f = modified_inverse(n).sbox;
  std::int64_t bad = 0;
  std::int64_t fired = 0;
  for (Element a = 1; a < field.size(); ++a) {
    if (!admissible_a(field, a)) continue;
    for (Element b = 1; b < field.size(); ++b)
      for (const SparseSolution& s : lemma4_classify(field, a, b)) {
        ++fired;
        bad += !solves_system(f, a, b, s.x, s.y) + !solves_system(f, a, b, s.y, s.x);
      }
  }
  return {bad, std::to_string(fired) + " predicted sparse solutions checked over " +
                   field.to_string()};
}

// Remark on the sparse solutions: at least 8 solutions at a^3+a+1 = 0,
// b = a (n = 0 mod 3), at least 4 on S3 u S4 otherwise.
Outcome remark4_violations(int n) {
  const Field field = make_field(n);
  const KTable t = bct_fast(modified_inverse(n).sbox);
  std::int64_t bad = 0;
  std::int64_t witnesses = 0;
  std::uint32_t min_root_entry = 0;
  bool root_seen = false;
  for (Element a = 1; a < field.size(); ++a) {
    if (!admissible_a(field, a)) continue;
    const Element a3 = field.mul(field.square(a), a);
    if ((a3 ^ a ^ 1) == 0) {
      ++witnesses;
      const std::uint32_t v = t.at(a, a);
      min_root_entry = root_seen ? std::min(min_root_entry, v) : v;
      root_seen = true;
      bad += v < 8;
    }
    for (Element b = 1; b < field.size(); ++b) {
      const SparseMembership m = lemma4_membership(field, a, b);
      if (!(m.s3 || m.s4)) continue;
      ++witnesses;
      bad += t.at(a, b) < 4;
    }
  }
  if (witnesses == 0) ++bad;
  std::string detail = std::to_string(witnesses) + " witness pairs over " + field.to_string();
  if (root_seen) detail += "; min T(a, a) at a^3+a+1 = 0 is " + std::to_string(min_root_entry);
  return {bad, detail};
}

Outcome zieve_claim(int n, bool all_gammas, bool differential) {
  const Field field = make_field(n);
  auto gammas = zieve_gamma_candidates(field);
  if (!all_gammas) gammas.resize(1);
  std::int64_t worst = 0;
  for (Element g : gammas) {
    const SBox f = zieve_binomial(field, g).sbox;
    if (!is_permutation(f)) return {-1, "gamma = " + hex(g) + " is not a permutation"};
    const std::int64_t v = differential ? differential_uniformity(f)
                                        : boomerang_uniformity(f).boomerang_uniformity;
    worst = std::max(worst, v);
  }
  return {worst, std::to_string(gammas.size()) + " gamma over " + field.to_string() +
                     ", first gamma = " + hex(gammas.front()) + "; value is the maximum"};
}

Outcome inverse_roundtrip_violations(int n, bool all_gammas) {
  const Field field = make_field(n);
  auto gammas = zieve_gamma_candidates(field);
  if (!all_gammas) gammas.resize(1);
  std::int64_t mismatches = 0;
  for (Element g : gammas) {
    const SBox f = zieve_binomial(field, g).sbox;
    const SBox g_inv = zieve_binomial_inverse(field, g).sbox;
    const SBox id = compose(g_inv, f);
    for (Element x = 0; x < field.size(); ++x) mismatches += id(x) != x;
  }
  return {mismatches, "table entries where f^{-1}(f(x)) != x, " +
                          std::to_string(gammas.size()) + " gamma over " + field.to_string()};
}

Outcome gold_bound_sweep(int max_n) {
  std::int64_t bad = 0;
  int checked = 0;
  for (int n = 3; n <= max_n; ++n)
    for (int i = 1; i < n; ++i) {
      const FamilyMember m = gold(n, i);
      if (!is_permutation(m.sbox)) continue;
      ++checked;
      bad += !quadratic_bound_check(m.sbox);
    }
  return {bad, std::to_string(checked) + " Gold permutations with n <= " +
                   std::to_string(max_n) + " checked"};
}

Outcome btt_collapse() {
  const FamilyMember m = btt(2, 4);
  const Field& field = m.sbox.field();
  const Element alpha = find_primitive(field);
  const Element coeff = alpha ^ field.pow(alpha, 4);
  std::int64_t mismatches = 0;
  for (Element x = 0; x < field.size(); ++x)
    mismatches += m.sbox(x) != field.mul(coeff, field.pow(x, 17));
  return {mismatches, "entries differing from (alpha + alpha^4) x^17, alpha = " + hex(alpha)};
}

Tier tier_for(int n) { return n <= 10 ? Tier::fast : Tier::full; }

const std::vector<Claim>& registry() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> c;
    auto add = [&](std::string id, std::string description, Tier tier, std::int64_t expected,
                   std::function<Outcome()> run) {
      c.push_back({{std::move(id), std::move(description), tier}, expected, std::move(run), false, {}});
    };

    struct KasamiRow { int k, i; std::int64_t expected; };
    for (const KasamiRow r : {KasamiRow{3, 2, 4}, {3, 4, 4}, {5, 2, 44}, {5, 4, 44},
                              {5, 6, 44}, {7, 2, 24}, {7, 4, 16}, {7, 6, 16}}) {
      const int n = 2 * r.k;
      add("table3.k" + std::to_string(r.k) + ".i" + std::to_string(r.i),
          "Kasami x^" + std::to_string(kasami_exponent(r.i)) + " over GF(2^" +
              std::to_string(n) + "): boomerang uniformity",
          tier_for(n), r.expected, [n, i = r.i] { return monomial_bu(kasami(n, i)); });
    }
    add("table4.k1", "Bracken-Leander x^7 over GF(2^4): boomerang uniformity", Tier::fast, 4,
        [] { return monomial_bu(bracken_leander(1)); });
    c.back().note =
        "the tabulated value is inconsistent: 7 * 2 = -1 mod 15, so x^7 is x^{-1} composed "
        "with Frobenius and shares the inverse map's boomerang uniformity, 6 for n = 0 mod 4";
    add("table4.k3", "Bracken-Leander x^73 over GF(2^12): boomerang uniformity", Tier::full, 14,
        [] { return monomial_bu(bracken_leander(3)); });

    const std::int64_t example[] = {8, 6, 6, 10, 6, 6, 8};
    for (int n = 3; n <= 9; ++n)
      add("example.n" + std::to_string(n),
          "modified inverse over GF(2^" + std::to_string(n) + "): tabulated boomerang uniformity",
          Tier::fast, example[n - 3], [n] { return full_bu(modified_inverse(n)); });
    for (int n = 3; n <= 12; ++n)
      add("thm9.n" + std::to_string(n),
          "modified inverse over GF(2^" + std::to_string(n) + "): 10/8/6 formula",
          tier_for(n), modified_inverse_uniformity_formula(n),
          [n] { return full_bu(modified_inverse(n)); });
    for (int n = 3; n <= 10; ++n)
      for (int id = 1; id <= 3; ++id) {
        const auto expected = appendix_case_maximum(n, id);
        if (!expected) continue;
        add("appendix.n" + std::to_string(n) + ".case" + std::to_string(id),
            "modified inverse over GF(2^" + std::to_string(n) + "): max T(a, b) in case " +
                std::to_string(id),
            Tier::fast, *expected, [n, id] {
              const KTable t = bct_fast(modified_inverse(n).sbox);
              return Outcome{appendix_case_computed(t, id),
                             "case 1: a = 1; case 2: a in {w, w^2}; case 3: other a"};
            });
      }

    add("thm10.q8", "x^10 + gamma x over GF(64), every valid gamma: permutation, boomerang uniformity",
        Tier::fast, 4, [] { return zieve_claim(6, true, false); });
    add("thm10.q8.ddt", "x^10 + gamma x over GF(64), every valid gamma: differential uniformity",
        Tier::fast, 4, [] { return zieve_claim(6, true, true); });
    add("thm10.q32", "x^34 + gamma x over GF(1024), first valid gamma: boomerang uniformity",
        Tier::fast, 4, [] { return zieve_claim(10, false, false); });
    add("cor11.q8", "closed-form inverse round trip over GF(64), every valid gamma", Tier::fast, 0,
        [] { return inverse_roundtrip_violations(6, true); });
    add("cor11.q32", "closed-form inverse round trip over GF(1024), first valid gamma", Tier::fast,
        0, [] { return inverse_roundtrip_violations(10, false); });
    add("cor11.q8.bu", "closed-form inverse over GF(64), first valid gamma: boomerang uniformity",
        Tier::fast, 4, [] {
          const Field field = make_field(6);
          return full_bu(zieve_binomial_inverse(field, zieve_gamma_candidates(field).front()));
        });

    struct FamilyCase { std::string id; std::function<FamilyMember()> make; };
    const std::vector<FamilyCase> apn = {
        {"gold.n3.i1", [] { return gold(3, 1); }},
        {"gold.n5.i1", [] { return gold(5, 1); }},
        {"kasami.n5.i2", [] { return kasami(5, 2); }},
        {"welch.k2", [] { return welch(2); }},
        {"niho.k1", [] { return niho(1); }},
        {"niho.k2", [] { return niho(2); }},
        {"inverse.n5", [] { return inverse_fn(5); }},
        {"dobbertin.k1", [] { return dobbertin(1); }},
    };
    for (const auto& fc : apn) {
      add("table1." + fc.id + ".du", "APN permutation " + fc.id + ": differential uniformity",
          Tier::fast, 2, [make = fc.make] { return full_du(make()); });
      add("table1." + fc.id + ".bu", "APN permutation " + fc.id + ": boomerang uniformity",
          Tier::fast, 2, [make = fc.make] { return full_bu(make()); });
    }
    const std::vector<FamilyCase> four = {
        {"gold.n6.i2", [] { return gold(6, 2); }},
        {"kasami.n6.i2", [] { return kasami(6, 2); }},
        {"inverse.n6", [] { return inverse_fn(6); }},
        {"bracken_leander.k1", [] { return bracken_leander(1); }},
        {"btt.k2.s4", [] { return btt(2, 4); }},
    };
    for (const auto& fc : four)
      add("table2." + fc.id + ".du", "4-uniform DDT permutation " + fc.id, Tier::fast, 4,
          [make = fc.make] { return full_du(make()); });

    add("btt.k2", "Bracken-Tan-Tan k = 2, s = 4 over GF(2^6): boomerang uniformity", Tier::fast,
        4, [] { return full_bu(btt(2, 4)); });
    add("btt.k2.collapse", "Bracken-Tan-Tan k = 2 equals a single Gold-type monomial",
        Tier::fast, 0, btt_collapse);
    c.push_back({{"btt.k10", "Bracken-Tan-Tan k = 10 over GF(2^30)", Tier::fast}, 0, nullptr, true, {}});

    add("prop5.gold.n6.i2", "Gold x^5 over GF(2^6): 4 <= delta_f <= 12 holds", Tier::fast, 1,
        [] { return Outcome{quadratic_bound_check(gold(6, 2).sbox), "Delta = 4"}; });
    add("prop5.gold.n5.i1", "Gold x^3 over GF(2^5): delta_f = Delta = 2", Tier::fast, 2,
        [] { return full_bu(gold(5, 1)); });
    add("prop5.gold.sweep", "Delta <= delta_f <= Delta(Delta-1) for Gold permutations, n <= 10",
        Tier::fast, 0, [] { return gold_bound_sweep(10); });

    for (int n = 3; n <= 9; ++n) {
      add("lemma4.n" + std::to_string(n),
          "sparse-point solutions of the modified inverse over GF(2^" + std::to_string(n) + ")",
          Tier::fast, 0, [n] { return lemma4_violations(n); });
      add("lemma5.n" + std::to_string(n),
          "intersections of the sparse-point sets over GF(2^" + std::to_string(n) + ")",
          Tier::fast, 0, [n] { return lemma5_violations(n); });
      add("remark4.n" + std::to_string(n),
          "sparse-point lower bounds on T(a, b) over GF(2^" + std::to_string(n) + ")", Tier::fast,
          0, [n] { return remark4_violations(n); });
    }
    return c;
  }();
  return claims;
}

ClaimReport run_claim(const Claim& claim, std::chrono::milliseconds budget) {
  ClaimReport report;
  report.claim_id = claim.info.claim_id;
  report.description = claim.info.description;
  report.expected = claim.expected;
  if (claim.beyond_desk_scale) {
    report.status = ClaimStatus::skipped_cost;
    report.detail = "beyond desk scale";
    return report;
  }

  auto promise = std::make_shared<std::promise<Outcome>>();
  auto future = promise->get_future();
  const auto start = std::chrono::steady_clock::now();
  std::thread([promise, run = claim.run] {
    try {
      promise->set_value(run());
    } catch (...) {
      promise->set_exception(std::current_exception());
    }
  }).detach();

  const bool finished = future.wait_for(budget) == std::future_status::ready;
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!finished) {
    report.status = ClaimStatus::skipped_cost;
    report.detail = "exceeded budget of " + std::to_string(budget.count()) + " ms";
    return report;
  }
  try {
    Outcome out = future.get();
    report.computed = out.value;
    report.detail = std::move(out.detail);
    report.status = out.value == claim.expected ? ClaimStatus::pass : ClaimStatus::fail;
    if (report.status == ClaimStatus::fail && !claim.note.empty())
      report.detail += "; " + claim.note;
  } catch (const std::exception& e) {
    report.status = ClaimStatus::fail;
    report.detail = std::string("error: ") + e.what();
  }
  return report;
}

}  // namespace

const char* to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped_cost: return "skipped(cost)";
  }
  return "fail";
}

const char* to_string(Tier tier) { return tier == Tier::fast ? "fast" : "full"; }

Tier parse_tier(std::string_view name) {
  if (name == "fast") return Tier::fast;
  if (name == "full") return Tier::full;
  throw std::invalid_argument("unknown tier '" + std::string(name) + "' (expected fast or full)");
}

std::int64_t modified_inverse_uniformity_formula(int n) {
  if (n % 6 == 0) return 10;
  if (n % 6 == 3) return 8;
  return 6;
}

std::optional<std::int64_t> appendix_case_maximum(int n, int case_id) {
  switch (case_id) {
    case 1:
      if (n % 2 == 1) return 2;
      return n % 4 == 2 ? 4 : 6;
    case 2:
      if (n % 2 == 1) return std::nullopt;
      return n % 4 == 2 ? 4 : 6;
    case 3:
      return modified_inverse_uniformity_formula(n);
  }
  throw std::invalid_argument("appendix case must be 1, 2 or 3");
}

std::vector<ClaimInfo> claim_registry() {
  std::vector<ClaimInfo> out;
  for (const Claim& c : registry()) out.push_back(c.info);
  return out;
}

ClaimReport reproduce(std::string_view claim_id, std::chrono::milliseconds budget) {
  for (const Claim& c : registry())
    if (c.info.claim_id == claim_id) return run_claim(c, budget);
  throw std::invalid_argument("unknown claim '" + std::string(claim_id) + "'");
}

std::vector<ClaimReport> reproduce_all(Tier tier, std::chrono::milliseconds budget) {
  std::vector<ClaimReport> out;
  for (const Claim& c : registry())
    if (tier == Tier::full || c.info.tier == Tier::fast) out.push_back(run_claim(c, budget));
  return out;
}

std::vector<ClaimReport> appendix_case_audit(int n) {
  if (n < 3 || n > 10) throw std::invalid_argument("appendix_case_audit needs 3 <= n <= 10");
  std::vector<ClaimReport> out;
  for (int id = 1; id <= 3; ++id)
    if (appendix_case_maximum(n, id))
      out.push_back(reproduce("appendix.n" + std::to_string(n) + ".case" + std::to_string(id)));
  return out;
}

std::string reports_to_json(const std::vector<ClaimReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ClaimReport& r : reports) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["description"] = r.description;
    j["expected"] = r.expected;
    j["computed"] = r.computed ? nlohmann::ordered_json(*r.computed) : nlohmann::ordered_json();
    j["status"] = to_string(r.status);
    j["runtime_ms"] = r.runtime_ms;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace bctkit
