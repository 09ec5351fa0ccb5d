#include "bctkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bctkit {
namespace {

using ordered_json = nlohmann::ordered_json;

bool parse_number(std::string_view token, std::uint64_t& out) {
  int base = 10;
  if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    token.remove_prefix(2);
    base = 16;
  }
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out, base);
  return ec == std::errc() && ptr == token.data() + token.size();
}

template <typename Row>
void csv_body(std::ostringstream& out, std::uint32_t size, Row row) {
  out << "a\\b";
  for (std::uint32_t b = 0; b < size; ++b) out << ',' << b;
  out << '\n';
  for (std::uint32_t a = 0; a < size; ++a) {
    out << a;
    for (auto v : row(a)) out << ',' << v;
    out << '\n';
  }
}

}  // namespace

SBox parse_sbox(std::string_view text, const Field* field) {
  std::istringstream in{std::string(text)};
  std::string header;
  if (!(in >> header) || header.rfind("n=", 0) != 0)
    throw std::invalid_argument("S-box file must start with \"n=<int>\"");
  std::uint64_t n = 0;
  if (!parse_number(std::string_view(header).substr(2), n) || n < kMinDimension ||
      n > kMaxDimension)
    throw std::invalid_argument("S-box header '" + header + "' needs 2 <= n <= 16");
  const Field f = field ? *field : make_field(static_cast<int>(n));
  if (f.n() != static_cast<int>(n))
    throw std::invalid_argument("field override " + f.to_string() + " does not match n = " +
                                std::to_string(n));

  std::vector<Element> table;
  table.reserve(f.size());
  for (std::string token; in >> token;) {
    std::uint64_t v = 0;
    if (!parse_number(token, v))
      throw std::invalid_argument("S-box entry " + std::to_string(table.size()) + " ('" + token +
                                  "') is not a decimal or 0x-hex integer");
    if (v >= f.size())
      throw std::invalid_argument("S-box entry " + std::to_string(table.size()) + " = " + token +
                                  " is out of range for n = " + std::to_string(n));
    table.push_back(static_cast<Element>(v));
  }
  if (table.size() != f.size())
    throw std::invalid_argument("S-box file has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(f.size()));
  return SBox(f, std::move(table));
}

SBox read_sbox_file(const std::string& path, const Field* field) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open S-box file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sbox(buf.str(), field);
}

std::string format_sbox(const SBox& f) {
  std::ostringstream out;
  out << "n=" << f.n() << '\n';
  const std::uint32_t per_line = 16;
  for (Element x = 0; x < f.size(); ++x) {
    out << f(x);
    out << ((x + 1) % per_line == 0 || x + 1 == f.size() ? '\n' : ' ');
  }
  return out.str();
}

std::string table_to_csv(const KTable& t) {
  std::ostringstream out;
  csv_body(out, t.size(), [&](std::uint32_t a) { return t.row(a); });
  return out.str();
}

std::string table_to_json(const KTable& t) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["kind"] = to_string(t.kind());
  j["n"] = t.field().n();
  j["field"] = t.field().to_string();
  j["algorithm"] = t.algorithm();
  j["max_nonzero"] = t.max_nonzero();
  j["counts"] = std::vector<std::uint32_t>(t.counts().begin(), t.counts().end());
  return j.dump() + "\n";
}

std::string spectrum_to_csv(const WalshSpectrum& w) {
  // Rows are u, columns v.
  std::ostringstream out;
  out << "u\\v";
  for (std::uint32_t v = 0; v < w.size(); ++v) out << ',' << v;
  out << '\n';
  for (std::uint32_t u = 0; u < w.size(); ++u) {
    out << u;
    for (std::uint32_t v = 0; v < w.size(); ++v) out << ',' << w.at(u, v);
    out << '\n';
  }
  return out.str();
}

std::string spectrum_to_json(const WalshSpectrum& w) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["kind"] = "WALSH";
  j["n"] = w.field().n();
  j["field"] = w.field().to_string();
  std::vector<std::int32_t> values;
  values.reserve(static_cast<std::size_t>(w.size()) * w.size());
  for (std::uint32_t u = 0; u < w.size(); ++u)
    for (std::uint32_t v = 0; v < w.size(); ++v) values.push_back(w.at(u, v));
  j["values"] = std::move(values);
  return j.dump() + "\n";
}

}  // namespace bctkit
