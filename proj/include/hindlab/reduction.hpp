#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hindlab/algebra.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/error.hpp"
#include "hindlab/search.hpp"

namespace hindlab {

// The chosen cardinality class is too small for two blocks.
class InsufficientClass : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

/// d : [N]^2 -> {0, 1}, stored in lexicographic pair order (0,1), (0,2), ...
class PairColoring {
 public:
  PairColoring(unsigned points, std::vector<unsigned> colors);
  static PairColoring constant(unsigned points, unsigned color);
  // Color of {i<j} is seeded_color(seed, i*N + j, 2).
  static PairColoring seeded(unsigned points, std::uint64_t seed);
  // The index-th of the 2^(N choose 2) colorings, pair p taking bit p.
  static PairColoring from_bits(unsigned points, std::uint64_t bits);

  unsigned points() const { return points_; }
  const std::vector<unsigned>& colors() const { return colors_; }
  unsigned operator()(unsigned i, unsigned j) const;
  std::size_t pair_index(unsigned i, unsigned j) const;

 private:
  unsigned points_;
  std::vector<unsigned> colors_;
};

/// c(x) = 2 for odd |x|; otherwise d(max y, max z) where y holds the |x|/2
/// smallest members of x and z the rest.
class LiftedColoring {
 public:
  explicit LiftedColoring(PairColoring d) : d_(std::move(d)) {}

  unsigned operator()(Element x) const;
  const PairColoring& pairs() const { return d_; }

  // Table form over FinUnions(N) for the search kernels.
  Coloring bind() const;

 private:
  PairColoring d_;
};

LiftedColoring lift_pair_coloring(const PairColoring& d);

struct Extraction {
  std::vector<Element> cardinality_class;  // H': members of the chosen size
  std::vector<Element> blocks;             // consecutive (b/2)-fold unions
  std::vector<unsigned> points;            // X: maxima of the blocks
  unsigned color = 0;                      // common d-color of pairs of X
};

/// From an unmeshed H with FU^{b}(H) monochromatic under the lift of d,
/// extract a set of points whose pairs all share one d-color. `count` is the
/// requested |X|; 0 takes as many blocks as the cardinality class allows.
Extraction extract_pair_homogeneous(const PairColoring& d, const FinFamily& h, unsigned b,
                                    std::size_t count = 0);

unsigned corollary_even_length(unsigned a, unsigned b);

struct RoundTripReport {
  enum class Outcome { Success, NotFound, BudgetExhausted, ClassTooSmall, Counterexample };
  Outcome outcome = Outcome::NotFound;
  std::optional<Witness> witness;
  unsigned b = 0;
  std::optional<Extraction> extraction;
  std::string message;
};

std::string to_string(RoundTripReport::Outcome o);

/// Lift d, search FinUnions(N) for an unmeshed family of `family_size` with
/// FU^{b} monochromatic for the first even b in [b_min, b_max], extract X and
/// check it directly against d.
RoundTripReport round_trip_check(const PairColoring& d, unsigned b_min, unsigned b_max,
                                 std::size_t family_size, const SearchBudget& budget,
                                 ExecConfig exec = {});

}  // namespace hindlab
