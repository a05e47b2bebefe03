#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "hindlab/algebra.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/exec.hpp"
#include "hindlab/pattern.hpp"

namespace hindlab {

struct SearchBudget {
  std::uint64_t max_ground_elements = kMaxEnumerable;  // prefix of the canonical order
  unsigned max_a = 64;
  unsigned max_b = 64;
  std::uint64_t max_candidates = 200'000'000;  // extension attempts
  // Wall-clock limit. The only budget that can make results depend on timing.
  std::optional<std::chrono::milliseconds> time_limit;
};

/// A certificate that FS^lengths(family) is monochromatic of `color`.
struct Witness {
  FinFamily family;
  LengthPattern pattern;
  LengthSet lengths;
  unsigned color = 0;
  bool block = false;
};

enum class SearchStatus { Found, NotFound, BudgetExhausted };

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Witness> witness;
  std::uint64_t candidates = 0;
};

/// Lexicographically least witness of size `target` over the family: the
/// least admissible pattern first, then the least family in canonical order.
/// Out-of-range IntAdd sums reject the candidate, not the search.
SearchResult find_witness(const GroundStructure& s, const Coloring& coloring,
                          const PatternFamily& family, std::size_t target,
                          const SearchBudget& budget, bool require_block, ExecConfig exec = {});

struct VerificationReport {
  bool valid = false;
  std::string violation;  // first failed check
  std::string note;
};

VerificationReport verify_witness(const GroundStructure& s, const Coloring& coloring,
                                  const Witness& w,
                                  std::optional<std::size_t> expected_size = std::nullopt);

namespace reference {

// Brute force over every target-subset of the candidates; no pruning, no
// parallelism, ignores the candidate budget.
SearchResult find_witness(const GroundStructure& s, const Coloring& coloring,
                          const PatternFamily& family, std::size_t target,
                          const SearchBudget& budget, bool require_block);

}  // namespace reference

}  // namespace hindlab
