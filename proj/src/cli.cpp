#include "bctkit/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bctkit/families.hpp"
#include "bctkit/io.hpp"
#include "bctkit/tables.hpp"
#include "bctkit/verify.hpp"
#include "bctkit/walsh.hpp"

namespace bctkit {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string family;
  std::string field;
  std::string out;
  std::string algo = "fast";
  unsigned threads = 0;
  bool json = false;
  bool csv = false;
  unsigned j = 1;
  unsigned delta = 0;
  bool two_uniform = false;
  std::vector<std::string> family_words;
  std::string tier = "fast";
  std::vector<std::string> claims;
  double budget_s = 600;
  int appendix = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field(o.field);
}

SBox load_input(const Options& o) {
  if (o.file.empty() == o.family.empty())
    throw UsageError("exactly one of --file or --family is required");
  const auto field = field_override(o);
  if (!o.file.empty()) return read_sbox_file(o.file, field ? &*field : nullptr);
  return parse_family_spec(o.family, field).sbox;
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--file", o.file, "S-box file (\"n=<int>\" then 2^n values)");
  cmd->add_option("--family", o.family, "family spec, e.g. \"kasami n=6 i=2\"");
}

void add_common_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.field, "field override n:reduction-hex, e.g. 8:11b");
  cmd->add_option("--out", o.out, "write the report to this path instead of stdout");
  cmd->add_option("--threads", o.threads, "worker threads (0 = available parallelism)");
}

void add_format_options(CLI::App* cmd, Options& o) {
  auto* json = cmd->add_flag("--json", o.json, "JSON output");
  cmd->add_flag("--csv", o.csv, "CSV output")->excludes(json);
}

std::string big(const BigInt& v) { return v.str(); }

std::string run_table(const Options& o, TableKind kind) {
  const SBox f = load_input(o);
  const KTable t = kind == TableKind::ddt ? ddt(f, o.threads)
                                          : bct(f, parse_bct_algorithm(o.algo), o.threads);
  return o.json ? table_to_json(t) : table_to_csv(t);
}

std::string run_uniformity(const Options& o) {
  const SBox f = load_input(o);
  const UniformityReport r = boomerang_uniformity(f, o.threads);
  if (!o.json) {
    std::ostringstream s;
    s << "field " << f.field().to_string() << '\n'
      << "permutation " << (is_permutation(f) ? "yes" : "no") << '\n'
      << "differential_uniformity " << r.differential_uniformity << " at (" << r.ddt_argmax.a
      << ", " << r.ddt_argmax.b << ")\n"
      << "boomerang_uniformity " << r.boomerang_uniformity << " at (" << r.bct_argmax.a << ", "
      << r.bct_argmax.b << ")\n";
    return s.str();
  }
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["n"] = f.n();
  j["field"] = f.field().to_string();
  j["permutation"] = is_permutation(f);
  j["differential_uniformity"] = r.differential_uniformity;
  j["boomerang_uniformity"] = r.boomerang_uniformity;
  j["ddt_argmax"] = {r.ddt_argmax.a, r.ddt_argmax.b};
  j["bct_argmax"] = {r.bct_argmax.a, r.bct_argmax.b};
  j["algorithm"] = r.algorithm;
  return j.dump() + "\n";
}

std::string run_walsh(const Options& o) {
  const WalshSpectrum w = walsh_spectrum(load_input(o), o.threads);
  return o.json ? spectrum_to_json(w) : spectrum_to_csv(w);
}

std::string run_moment(const Options& o) {
  const SBox f = load_input(o);
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["n"] = f.n();
  j["j"] = o.j;
  const BigInt direct = bct_moment_direct(f, o.j, o.threads);
  j["direct"] = big(direct);
  const bool walsh_ok = (o.j == 1 && f.n() <= kMaxWalshDimension) ||
                        (o.j == 2 && f.n() <= kMaxSecondMomentDimension);
  if (walsh_ok) {
    const BigInt via_walsh = bct_moment_walsh(f, o.j, o.threads);
    j["walsh"] = big(via_walsh);
    j["equal"] = via_walsh == direct;
  } else {
    j["walsh"] = nullptr;
    j["equal"] = nullptr;
  }
  return j.dump() + "\n";
}

std::string run_certify(const Options& o) {
  const SBox f = load_input(o);
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["n"] = f.n();
  if (o.two_uniform) {
    const TwoUniformCertificate c = two_uniform_certificate(f, o.threads);
    j["lhs"] = big(c.lhs);
    j["rhs"] = big(c.rhs);
    j["gap"] = big(c.gap);
    j["is_zero"] = c.gap == 0;
    return j.dump() + "\n";
  }
  if (o.delta == 0) throw UsageError("certify needs --delta <even> or --two-uniform");
  const auto phi = CertificatePolynomial::vanishing_product(o.delta, f.n());
  const DeltaCertificate c = delta_uniform_certificate(f, phi, o.threads);
  j["delta"] = c.delta;
  j["value_numerator"] = big(boost::multiprecision::numerator(c.value));
  j["value_denominator"] = big(boost::multiprecision::denominator(c.value));
  j["is_zero"] = c.is_zero;
  j["walsh_cross_checked"] = c.walsh_cross_checked;
  return j.dump() + "\n";
}

std::string run_family(const Options& o) {
  if (o.family_words.empty()) throw UsageError("family needs a name, e.g. family kasami n=6 i=2");
  std::string spec;
  for (const auto& w : o.family_words) spec += (spec.empty() ? "" : " ") + w;
  const FamilyMember m = parse_family_spec(spec, field_override(o));
  if (!o.json) return format_sbox(m.sbox);
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["name"] = m.name;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  j["params"] = params;
  j["field"] = m.sbox.field().to_string();
  j["exponent"] = m.exponent ? ordered_json(*m.exponent) : ordered_json();
  j["expected_class"] = to_string(m.expected);
  j["permutation"] = is_permutation(m.sbox);
  j["table"] = std::vector<Element>(m.sbox.table().begin(), m.sbox.table().end());
  return j.dump() + "\n";
}

std::string run_reproduce(const Options& o, int& exit_code) {
  const auto budget = std::chrono::milliseconds(static_cast<std::int64_t>(o.budget_s * 1000));
  std::vector<ClaimReport> reports;
  if (o.appendix != 0) {
    reports = appendix_case_audit(o.appendix);
  } else if (!o.claims.empty()) {
    for (const auto& id : o.claims) reports.push_back(reproduce(id, budget));
  } else {
    reports = reproduce_all(parse_tier(o.tier), budget);
  }
  exit_code = kExitOk;
  for (const auto& r : reports)
    if (r.status == ClaimStatus::fail) exit_code = kExitClaimFailure;
  if (o.json) return reports_to_json(reports) + "\n";
  std::ostringstream s;
  for (const auto& r : reports) {
    s << to_string(r.status) << ' ' << r.claim_id << " expected=" << r.expected
      << " computed=" << (r.computed ? std::to_string(*r.computed) : "-") << " ("
      << static_cast<std::int64_t>(r.runtime_ms) << " ms) " << r.detail << '\n';
  }
  return s.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + o.out + "'");
  file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boomerang connectivity and difference distribution tables over GF(2^n)",
               "bctkit"};
  app.require_subcommand(1);
  Options o;

  auto* ddt_cmd = app.add_subcommand("ddt", "difference distribution table");
  auto* bct_cmd = app.add_subcommand("bct", "boomerang connectivity table");
  auto* uni_cmd = app.add_subcommand("uniformity", "differential and boomerang uniformity");
  auto* walsh_cmd = app.add_subcommand("walsh", "Walsh spectrum");
  auto* moment_cmd = app.add_subcommand("moment", "BCT moment, direct and via Walsh");
  auto* cert_cmd = app.add_subcommand("certify", "uniformity certificates");
  auto* family_cmd = app.add_subcommand("family", "emit a family member as an S-box");
  auto* repro_cmd = app.add_subcommand("reproduce", "run the claim registry");

  for (auto* cmd : {ddt_cmd, bct_cmd, uni_cmd, walsh_cmd, moment_cmd, cert_cmd}) {
    add_input_options(cmd, o);
    add_common_options(cmd, o);
  }
  add_common_options(family_cmd, o);
  add_common_options(repro_cmd, o);
  for (auto* cmd : {ddt_cmd, bct_cmd, walsh_cmd}) add_format_options(cmd, o);
  for (auto* cmd : {uni_cmd, family_cmd, repro_cmd}) cmd->add_flag("--json", o.json, "JSON output");
  bct_cmd->add_option("--algo", o.algo, "naive, system or fast")
      ->check(CLI::IsMember({"naive", "system", "fast"}));
  moment_cmd->add_option("--j", o.j, "moment order")->required();
  cert_cmd->add_option("--delta", o.delta, "target boomerang uniformity (even)");
  cert_cmd->add_flag("--two-uniform", o.two_uniform, "Walsh certificate for delta_f = 2");
  family_cmd->add_option("spec", o.family_words, "name key=value ...")->required();
  repro_cmd->add_option("--tier", o.tier, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  repro_cmd->add_option("--claim", o.claims, "claim id (repeatable)");
  repro_cmd->add_option("--budget", o.budget_s, "per-claim budget in seconds");
  repro_cmd->add_option("--appendix", o.appendix, "per-case audit for the given n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    int code = kExitOk;
    std::string text;
    if (*ddt_cmd) text = run_table(o, TableKind::ddt);
    else if (*bct_cmd) text = run_table(o, TableKind::bct);
    else if (*uni_cmd) text = run_uniformity(o);
    else if (*walsh_cmd) text = run_walsh(o);
    else if (*moment_cmd) text = run_moment(o);
    else if (*cert_cmd) text = run_certify(o);
    else if (*family_cmd) text = run_family(o);
    else if (*repro_cmd) text = run_reproduce(o, code);
    emit(o, text, out);
    return code;
  } catch (const std::logic_error& e) {
    // invalid_argument, length_error and domain_error are input problems;
    // a bare logic_error is an internal consistency failure.
    const bool input = dynamic_cast<const std::invalid_argument*>(&e) ||
                       dynamic_cast<const std::length_error*>(&e) ||
                       dynamic_cast<const std::domain_error*>(&e);
    err << "error: " << e.what() << '\n';
    return input ? kExitUsage : kExitClaimFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bctkit
