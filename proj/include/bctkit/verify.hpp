#pragma once

// Reproduction harness: a fixed registry of numeric claims, each bound to
// the smallest computation that settles it.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bctkit {

enum class ClaimStatus { pass, fail, skipped_cost };
enum class Tier { fast, full };

const char* to_string(ClaimStatus status);
const char* to_string(Tier tier);
/// "fast" or "full"; throws std::invalid_argument otherwise.
Tier parse_tier(std::string_view name);

struct ClaimReport {
  std::string claim_id;
  std::string description;
  std::int64_t expected = 0;
  std::optional<std::int64_t> computed;
  ClaimStatus status = ClaimStatus::fail;
  double runtime_ms = 0;
  std::string detail;
};

struct ClaimInfo {
  std::string claim_id;
  std::string description;
  Tier tier;
};

inline constexpr std::chrono::milliseconds kDefaultClaimBudget{10 * 60 * 1000};

/// Registry order is report order.
std::vector<ClaimInfo> claim_registry();

/// Runs one claim. A claim that does not finish within `budget` reports
/// skipped_cost; its worker thread is abandoned and keeps running until it
/// completes. Throws std::invalid_argument for unknown ids.
ClaimReport reproduce(std::string_view claim_id,
                      std::chrono::milliseconds budget = kDefaultClaimBudget);

/// Every claim of the tier (full includes fast), in registry order.
std::vector<ClaimReport> reproduce_all(Tier tier,
                                       std::chrono::milliseconds budget = kDefaultClaimBudget);

/// Per-case maxima of T(a, b), b != 0, for the modified inverse, split by
/// a = 1 / a in {w, w^2} / any other a. Ids look like "appendix.n8.case2";
/// case 2 is absent for odd n. Requires 3 <= n <= 10.
std::vector<ClaimReport> appendix_case_audit(int n);

/// Appendix summary value for the given case, or nullopt when the case
/// does not occur (case 2, n odd).
std::optional<std::int64_t> appendix_case_maximum(int n, int case_id);

/// 10 if n = 0 mod 6, 8 if n = 3 mod 6, 6 otherwise.
std::int64_t modified_inverse_uniformity_formula(int n);

/// JSON array of reports.
std::string reports_to_json(const std::vector<ClaimReport>& reports);

}  // namespace bctkit
