#pragma once

// Text formats.
//
// S-box files: a first line "n=<int>", then 2^n values in input order,
// separated by any whitespace, each decimal or 0x-hex. Tables export as
// CSV (header "a\b,0,1,...") or versioned JSON.

#include <iosfwd>
#include <string>
#include <string_view>

#include "bctkit/sbox.hpp"
#include "bctkit/tables.hpp"
#include "bctkit/walsh.hpp"

namespace bctkit {

inline constexpr int kJsonSchemaVersion = 1;

/// Parses the S-box format. The field defaults to make_field(n); an
/// override must have the same n. Throws std::invalid_argument with the
/// offending position on malformed input.
SBox parse_sbox(std::string_view text, const Field* field = nullptr);
SBox read_sbox_file(const std::string& path, const Field* field = nullptr);
std::string format_sbox(const SBox& f);

std::string table_to_csv(const KTable& t);
std::string table_to_json(const KTable& t);
std::string spectrum_to_csv(const WalshSpectrum& w);
std::string spectrum_to_json(const WalshSpectrum& w);

}  // namespace bctkit
