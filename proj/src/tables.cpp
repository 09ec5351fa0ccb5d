#include "bctkit/tables.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

#include "parallel.hpp"

namespace bctkit {
namespace {

constexpr std::size_t kAccumulatorBudgetBytes = std::size_t{1} << 30;

void require_table_dimension(const SBox& f) {
  if (f.n() > kMaxTableDimension)
    throw std::length_error("full 2^n x 2^n tables are limited to n <= " +
                            std::to_string(kMaxTableDimension) + "; got n = " +
                            std::to_string(f.n()));
}

std::size_t cell_count(const SBox& f) {
  return static_cast<std::size_t>(f.size()) * f.size();
}

struct Best {
  std::uint32_t value = 0;
  Witness where;
  bool found = false;

  void offer(std::uint32_t v, Element a, Element b) {
    if (!found || v > value) {
      value = v;
      where = {a, b};
      found = true;
    }
  }
};

// Max of row entries over b >= first_b, keeping the first attaining index.
void scan_row(Best& best, std::span<const std::uint32_t> row, Element a,
              Element first_b) {
  for (Element b = first_b; b < row.size(); ++b) best.offer(row[b], a, b);
}

// Combine per-row-range winners; ranges are in increasing a, so taking
// strictly greater values keeps the row-major first witness.
Best merge(const std::vector<Best>& parts) {
  Best out;
  for (const Best& p : parts)
    if (p.found) out.offer(p.value, p.where.a, p.where.b);
  return out;
}

Best ddt_maximum(const SBox& f, unsigned threads) {
  const std::uint32_t size = f.size();
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<Best> parts(workers);
  detail::parallel_ranges(size - 1, workers,
                          [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<std::uint32_t> row(size);
    for (std::uint64_t i = begin; i < end; ++i) {
      const Element a = static_cast<Element>(i + 1);
      std::fill(row.begin(), row.end(), 0);
      for (Element x = 0; x < size; ++x) ++row[f(x) ^ f(x ^ a)];
      scan_row(parts[w], row, a, 0);
    }
  });
  return merge(parts);
}

Best bct_maximum(const KTable& t) {
  Best best;
  for (Element a = 1; a < t.size(); ++a) scan_row(best, t.row(a), a, 1);
  return best;
}

}  // namespace

const char* to_string(TableKind kind) { return kind == TableKind::ddt ? "DDT" : "BCT"; }

const char* to_string(BctAlgorithm algorithm) {
  switch (algorithm) {
    case BctAlgorithm::naive: return "naive";
    case BctAlgorithm::system: return "system";
    case BctAlgorithm::fast: return "fast";
  }
  return "unknown";
}

BctAlgorithm parse_bct_algorithm(std::string_view name) {
  if (name == "naive") return BctAlgorithm::naive;
  if (name == "system") return BctAlgorithm::system;
  if (name == "fast") return BctAlgorithm::fast;
  throw std::invalid_argument("unknown BCT algorithm '" + std::string(name) +
                              "' (expected naive, system or fast)");
}

KTable::KTable(Field field, TableKind kind, std::string algorithm,
               std::vector<std::uint32_t> counts)
    : field_(field), kind_(kind), algorithm_(std::move(algorithm)),
      counts_(std::move(counts)) {
  if (counts_.size() != static_cast<std::size_t>(field_.size()) * field_.size())
    throw std::invalid_argument("table must hold 2^n x 2^n counts");
}

std::uint32_t KTable::max_nonzero() const {
  Best best;
  const Element first_b = kind_ == TableKind::ddt ? 0 : 1;
  for (Element a = 1; a < size(); ++a) scan_row(best, row(a), a, first_b);
  return best.value;
}

KTable ddt(const SBox& f, unsigned threads) {
  require_table_dimension(f);
  const std::uint32_t size = f.size();
  std::vector<std::uint32_t> counts(cell_count(f), 0);
  detail::parallel_ranges(size, detail::resolve_threads(threads),
                          [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t a = begin; a < end; ++a) {
      std::uint32_t* row = counts.data() + a * size;
      for (Element x = 0; x < size; ++x) ++row[f(x) ^ f(x ^ static_cast<Element>(a))];
    }
  });
  return KTable(f.field(), TableKind::ddt, "direct", std::move(counts));
}

std::vector<std::uint32_t> ddt_row(const SBox& f, Element a) {
  if (!f.field().contains(a)) throw std::invalid_argument("row index out of range");
  std::vector<std::uint32_t> row(f.size(), 0);
  for (Element x = 0; x < f.size(); ++x) ++row[f(x) ^ f(x ^ a)];
  return row;
}

std::uint32_t differential_uniformity(const KTable& table) {
  if (table.kind() != TableKind::ddt)
    throw std::invalid_argument("differential_uniformity expects a DDT");
  return table.max_nonzero();
}

std::uint32_t differential_uniformity(const SBox& f, unsigned threads) {
  return ddt_maximum(f, threads).value;
}

KTable bct_naive(const SBox& f, unsigned threads) {
  require_table_dimension(f);
  const SBox inv = inverse_table(f);
  const std::uint32_t size = f.size();
  std::vector<std::uint32_t> counts(cell_count(f), 0);
  detail::parallel_ranges(size, detail::resolve_threads(threads),
                          [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t ai = begin; ai < end; ++ai) {
      const Element a = static_cast<Element>(ai);
      std::uint32_t* row = counts.data() + ai * size;
      for (Element b = 0; b < size; ++b) {
        std::uint32_t n = 0;
        // the printed inverse-based formula with its (a, b) roles swapped, so
        // that every builder shares the system orientation (a input, b output)
        for (Element x = 0; x < size; ++x)
          n += (inv(f(x) ^ b) ^ inv(f(x ^ a) ^ b)) == a;
        row[b] = n;
      }
    }
  });
  return KTable(f.field(), TableKind::bct, "naive", std::move(counts));
}

KTable bct_system(const SBox& f, unsigned threads) {
  require_table_dimension(f);
  const std::uint32_t size = f.size();
  std::vector<std::uint32_t> counts(cell_count(f), 0);
  detail::parallel_ranges(size, detail::resolve_threads(threads),
                          [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t ai = begin; ai < end; ++ai) {
      const Element a = static_cast<Element>(ai);
      std::uint32_t* row = counts.data() + ai * size;
      for (Element x = 0; x < size; ++x) {
        const Element fx = f(x);
        const Element fxa = f(x ^ a);
        for (Element y = 0; y < size; ++y) {
          const Element b = fx ^ f(y);
          if ((fxa ^ f(y ^ a)) == b) ++row[b];
        }
      }
    }
  });
  return KTable(f.field(), TableKind::bct, "system", std::move(counts));
}

KTable bct_fast(const SBox& f, unsigned threads) {
  require_table_dimension(f);
  const std::uint32_t size = f.size();
  const std::size_t cells = cell_count(f);

  // Each worker owns a private accumulator laid out b-major so a bucket
  // (fixed b) writes into one contiguous row.
  const std::size_t max_workers =
      std::max<std::size_t>(1, kAccumulatorBudgetBytes / (cells * sizeof(std::uint32_t)));
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(detail::resolve_threads(threads), max_workers));
  std::vector<std::vector<std::uint32_t>> acc(workers);

  detail::parallel_ranges(size, workers,
                          [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    std::vector<std::uint32_t>& local = acc[w];
    local.assign(cells, 0);
    std::vector<Element> diff(size);
    std::vector<std::uint32_t> start(size + 1);
    std::vector<std::uint32_t> fill(size);
    std::vector<Element> order(size);
    for (std::uint64_t ci = begin; ci < end; ++ci) {
      const Element c = static_cast<Element>(ci);
      std::fill(start.begin(), start.end(), 0);
      for (Element x = 0; x < size; ++x) {
        diff[x] = f(x) ^ f(x ^ c);
        ++start[diff[x] + 1];
      }
      for (std::uint32_t b = 0; b < size; ++b) start[b + 1] += start[b];
      std::copy(start.begin(), start.end() - 1, fill.begin());
      for (Element x = 0; x < size; ++x) order[fill[diff[x]]++] = x;

      for (Element b = 0; b < size; ++b) {
        const std::uint32_t lo = start[b];
        const std::uint32_t hi = start[b + 1];
        if (lo == hi) continue;
        std::uint32_t* row = local.data() + static_cast<std::size_t>(b) * size;
        row[0] += hi - lo;  // pairs (x, x)
        for (std::uint32_t i = lo; i < hi; ++i) {
          const Element xi = order[i];
          for (std::uint32_t j = i + 1; j < hi; ++j) row[xi ^ order[j]] += 2;
        }
      }
    }
  });

  std::vector<std::uint32_t>& sum = acc[0];
  for (unsigned w = 1; w < workers; ++w) {
    if (acc[w].empty()) continue;
    for (std::size_t i = 0; i < cells; ++i) sum[i] += acc[w][i];
    std::vector<std::uint32_t>().swap(acc[w]);
  }
  std::vector<std::uint32_t> counts(cells);
  for (Element b = 0; b < size; ++b)
    for (Element a = 0; a < size; ++a)
      counts[static_cast<std::size_t>(a) * size + b] =
          sum[static_cast<std::size_t>(b) * size + a];
  return KTable(f.field(), TableKind::bct, "fast", std::move(counts));
}

KTable bct(const SBox& f, BctAlgorithm algorithm, unsigned threads) {
  switch (algorithm) {
    case BctAlgorithm::naive: return bct_naive(f, threads);
    case BctAlgorithm::system: return bct_system(f, threads);
    case BctAlgorithm::fast: return bct_fast(f, threads);
  }
  throw std::invalid_argument("unknown BCT algorithm");
}

std::vector<std::uint32_t> bct_row(const SBox& f, Element a) {
  if (!f.field().contains(a)) throw std::invalid_argument("row index out of range");
  const std::uint32_t size = f.size();
  std::vector<std::uint32_t> row(size, 0);
  for (Element c = 0; c < size; ++c) {
    for (Element x = 0; x < size; ++x) {
      const Element d = f(x) ^ f(x ^ c);
      const Element xa = x ^ a;
      if ((f(xa) ^ f(xa ^ c)) == d) ++row[d];
    }
  }
  return row;
}

std::vector<std::pair<Element, Element>> bct_witnesses(const SBox& f, Element a,
                                                       Element b) {
  if (!f.field().contains(a) || !f.field().contains(b))
    throw std::invalid_argument("(a, b) out of range");
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < f.size(); ++x) {
    const Element y_image = f(x) ^ b;
    for (Element y = 0; y < f.size(); ++y)
      if (f(y) == y_image && (f(x ^ a) ^ f(y ^ a)) == b) out.emplace_back(x, y);
  }
  return out;
}

UniformityReport boomerang_uniformity(const SBox& f, unsigned threads) {
  const KTable t = bct_fast(f, threads);
  const Best boom = bct_maximum(t);
  const Best diff = ddt_maximum(f, threads);
  return {diff.value, boom.value, diff.where, boom.where, "fast"};
}

UniformityReport monomial_boomerang_uniformity(const Field& field, std::uint64_t d) {
  const SBox f = from_monomial(field, d);
  Best boom;
  scan_row(boom, bct_row(f, 1), 1, 1);
  Best diff;
  scan_row(diff, ddt_row(f, 1), 1, 0);
  return {diff.value, boom.value, diff.where, boom.where, "monomial-row"};
}

bool quadratic_bound_check(const SBox& f, unsigned threads) {
  const UniformityReport r = boomerang_uniformity(f, threads);
  const std::uint64_t delta = r.differential_uniformity;
  const std::uint64_t boom = r.boomerang_uniformity;
  return delta <= boom && boom <= delta * (delta - 1);
}

}  // namespace bctkit
