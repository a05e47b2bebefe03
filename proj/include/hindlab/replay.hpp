#pragma once

#include <optional>
#include <vector>

#include "hindlab/search.hpp"

namespace hindlab {

struct ReplayTrace {
  unsigned n = 0;                          // progression number used
  std::vector<Element> ground;             // X the tuples range over
  std::vector<Element> homogeneous;        // F-homogeneous subset of size m+n-1
  std::vector<unsigned> induced;           // color of length j, j = 1..n
  unsigned a = 0, b = 0, d = 0;            // monochromatic a, a+b, ..., a+d*b in [1, n]
};

struct ReplayResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Witness> witness;
  std::optional<ReplayTrace> trace;
  std::string reason;
};

/// Runs the prefix-sum/Ramsey/progression argument on a finite structure and
/// returns the resulting certificate together with every intermediate object.
ReplayResult replay_progression_proof(const GroundStructure& s, const Coloring& f, unsigned colors,
                                      unsigned d, std::size_t target, const SearchBudget& budget,
                                      ExecConfig exec = {});

// The ground X used by the replay: IntAdd prefix whose n-fold sums stay in
// range, FinUnions singletons, OpTable everything; capped by the budget.
std::vector<Element> replay_ground(const GroundStructure& s, unsigned n, const SearchBudget& budget);

}  // namespace hindlab
