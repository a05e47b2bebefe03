// Serial brute-force versions of the search kernels, kept as test oracles
// and benchmark baselines.

#include <algorithm>
#include <limits>
#include <numeric>

#include "hindlab/error.hpp"
#include "hindlab/numbers.hpp"
#include "hindlab/ramsey.hpp"
#include "hindlab/search.hpp"

namespace hindlab::reference {

namespace {

// Lexicographic successor of an increasing index vector over [0, n).
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

SearchResult find_witness(const GroundStructure& s, const Coloring& coloring,
                          const PatternFamily& family, std::size_t target,
                          const SearchBudget& budget, bool require_block) {
  if (target == 0) throw InvalidElement("target size must be positive");
  auto cands = s.elements();
  if (cands.size() > budget.max_ground_elements) cands.resize(budget.max_ground_elements);
  const auto patterns =
      enumerate_family(family, static_cast<unsigned>(target), budget.max_a, budget.max_b);
  SearchResult result;
  if (target > cands.size()) return result;
  for (const auto& pattern : patterns) {
    const LengthSet lengths = expand_pattern(pattern);
    std::vector<std::size_t> idx(target);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      ++result.candidates;
      FinFamily h;
      for (auto i : idx) h.members.push_back(cands[i]);
      if (require_block && !is_unmeshed(h.members)) continue;
      const auto sums = fs_over_lengths(s, h, lengths, RangeMode::Skip);
      if (sums.omitted > 0 || sums.elements.empty()) continue;
      const unsigned c = coloring(sums.elements.front());
      if (std::all_of(sums.elements.begin(), sums.elements.end(),
                      [&](Element x) { return coloring(x) == c; })) {
        h.block = require_block;
        result.status = SearchStatus::Found;
        result.witness = Witness{h, pattern, lengths, c, require_block};
        return result;
      }
    } while (next_combination(idx, cands.size()));
  }
  return result;
}

std::optional<std::vector<std::size_t>> ramsey_homogeneous(const TupleColoring& coloring,
                                                           std::size_t target) {
  const std::size_t n = coloring.ground();
  if (target > n) return std::nullopt;
  if (target == 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> idx(target);
  std::iota(idx.begin(), idx.end(), 0);
  const unsigned k = coloring.arity();
  do {
    if (target < k) return idx;
    std::vector<std::size_t> sub(k);
    std::iota(sub.begin(), sub.end(), 0);
    std::vector<std::size_t> tuple(k);
    int color = -1;
    bool ok = true;
    do {
      for (unsigned i = 0; i < k; ++i) tuple[i] = idx[sub[i]];
      const int c = static_cast<int>(coloring.at(tuple));
      if (color < 0) color = c;
      if (c != color) {
        ok = false;
        break;
      }
    } while (next_combination(sub, target));
    if (ok) return idx;
  } while (next_combination(idx, n));
  return std::nullopt;
}

UniversalResult min_universal_n(const UniversalTarget& target, unsigned colors, unsigned cap) {
  UniversalResult out;
  for (unsigned n = 1; n <= cap; ++n) {
    std::vector<unsigned> col(n, 0);
    bool all = true;
    while (true) {
      ++out.nodes;
      if (!coloring_contains(target, col)) {
        all = false;
        break;
      }
      std::size_t i = 0;
      while (i < n && ++col[i] == colors) col[i++] = 0;
      if (i == n) break;
    }
    if (all) {
      out.n = n;
      return out;
    }
  }
  out.cap_exceeded = true;
  return out;
}

}  // namespace hindlab::reference
