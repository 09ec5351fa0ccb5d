#pragma once

// Difference distribution and boomerang connectivity tables.
//
// BCT entries follow the inverse-free formulation
//   T(a, b) = #{(x, y) : f(x + a) + f(y + a) = b  and  f(x) + f(y) = b},
// with a the input and b the output difference. On permutations this is
// the classical definition via f^{-1}; the inverse-based formula written
// with the roles of a and b exchanged gives the transpose. The system form
// stays meaningful for arbitrary functions. Uniformity statistics always
// exclude a = 0 and b = 0.
//
// Every builder accepts a thread count (0 = hardware concurrency). Results
// are bit-identical for any thread count.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bctkit/sbox.hpp"

namespace bctkit {

/// Full 2^n x 2^n tables are capped at this dimension (256 MiB of counters).
inline constexpr int kMaxTableDimension = 13;

enum class TableKind { ddt, bct };
enum class BctAlgorithm { naive, system, fast };

const char* to_string(TableKind kind);
const char* to_string(BctAlgorithm algorithm);
/// Accepts "naive", "system", "fast"; throws std::invalid_argument otherwise.
BctAlgorithm parse_bct_algorithm(std::string_view name);

class KTable {
 public:
  KTable(Field field, TableKind kind, std::string algorithm,
         std::vector<std::uint32_t> counts);

  const Field& field() const { return field_; }
  TableKind kind() const { return kind_; }
  const std::string& algorithm() const { return algorithm_; }
  std::uint32_t size() const { return field_.size(); }
  std::uint32_t at(Element a, Element b) const {
    return counts_[static_cast<std::size_t>(a) * field_.size() + b];
  }
  std::span<const std::uint32_t> row(Element a) const {
    return {counts_.data() + static_cast<std::size_t>(a) * field_.size(), field_.size()};
  }
  std::span<const std::uint32_t> counts() const { return counts_; }

  /// Differential uniformity for a DDT (max over a != 0), boomerang
  /// uniformity for a BCT (max over a, b != 0).
  std::uint32_t max_nonzero() const;

  /// Entry-wise comparison of counts; kind and algorithm tags are ignored.
  bool same_counts(const KTable& other) const {
    return field_ == other.field_ && counts_ == other.counts_;
  }

 private:
  Field field_;
  TableKind kind_;
  std::string algorithm_;
  std::vector<std::uint32_t> counts_;
};

struct Witness {
  Element a = 0;
  Element b = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct UniformityReport {
  std::uint32_t differential_uniformity = 0;
  std::uint32_t boomerang_uniformity = 0;
  Witness ddt_argmax;  // first (a, b) in row-major order attaining the max
  Witness bct_argmax;
  std::string algorithm;
};

/// counts(a, b) = #{x : f(x + a) + f(x) = b}.
KTable ddt(const SBox& f, unsigned threads = 0);

/// Row a of the DDT.
std::vector<std::uint32_t> ddt_row(const SBox& f, Element a);

/// Max DDT entry over a != 0. Throws std::invalid_argument for a BCT.
std::uint32_t differential_uniformity(const KTable& table);

/// Same statistic computed row by row without materializing the DDT.
std::uint32_t differential_uniformity(const SBox& f, unsigned threads = 0);

/// Reference oracle through the compositional inverse:
/// T(a, b) = #{x : f^{-1}(f(x) + b) + f^{-1}(f(x + a) + b) = a}.
/// Throws std::invalid_argument for non-permutations. O(2^{3n}).
KTable bct_naive(const SBox& f, unsigned threads = 0);

/// Direct count of pairs (x, y) solving the two-equation system. O(2^{3n}).
KTable bct_system(const SBox& f, unsigned threads = 0);

/// Bucketed count: for each c, group x by D_c f(x) and count ordered pairs
/// inside each bucket. Cost is sum over (c, b) of |bucket|^2.
KTable bct_fast(const SBox& f, unsigned threads = 0);

KTable bct(const SBox& f, BctAlgorithm algorithm, unsigned threads = 0);

/// Row a of the BCT in O(2^{2n}) without building the table.
std::vector<std::uint32_t> bct_row(const SBox& f, Element a);

/// All ordered pairs (x, y) solving the system for the given (a, b).
std::vector<std::pair<Element, Element>> bct_witnesses(const SBox& f, Element a,
                                                       Element b);

/// Boomerang uniformity from bct_fast together with the differential
/// uniformity and argmax witnesses.
UniformityReport boomerang_uniformity(const SBox& f, unsigned threads = 0);

/// For x^d only row a = 1 matters, since (x, y) -> (a x, a y) maps the
/// a = 1 system onto the general one. Works up to n = 16.
UniformityReport monomial_boomerang_uniformity(const Field& field, std::uint64_t d);

/// Delta <= delta_f <= Delta * (Delta - 1), the bound for quadratic
/// permutations.
bool quadratic_bound_check(const SBox& f, unsigned threads = 0);

}  // namespace bctkit
