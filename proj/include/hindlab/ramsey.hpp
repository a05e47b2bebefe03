#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hindlab/algebra.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/exec.hpp"

namespace hindlab {

/// A coloring of the increasing `arity`-tuples of {0..ground-1}, stored by
/// colex rank.
class TupleColoring {
 public:
  TupleColoring(std::size_t ground, unsigned arity, unsigned colors,
                std::vector<std::uint32_t> by_rank);

  static TupleColoring from_function(
      std::size_t ground, unsigned arity, unsigned colors,
      const std::function<unsigned(std::span<const std::size_t>)>& color_of);

  std::size_t ground() const { return ground_; }
  unsigned arity() const { return arity_; }
  unsigned colors() const { return colors_; }
  const std::vector<std::uint32_t>& by_rank() const { return by_rank_; }

  unsigned at(std::span<const std::size_t> tuple) const { return by_rank_[rank(tuple)]; }
  std::uint64_t rank(std::span<const std::size_t> tuple) const;

 private:
  std::size_t ground_;
  unsigned arity_;
  unsigned colors_;
  std::vector<std::uint32_t> by_rank_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// F(x_1 < ... < x_n) = <f(x_1), f(x_1+x_2), ..., f(x_1+...+x_n)>, encoded as
/// sum_j f(prefix_j) * c^(j-1). Tuples index positions of `x`.
TupleColoring induced_length_coloring(const GroundStructure& s, const Coloring& f,
                                      std::span<const Element> x, unsigned n);

std::vector<unsigned> decode_color_vector(std::uint64_t code, unsigned colors, unsigned n);

/// Lexicographically least `target`-subset whose increasing tuples all share
/// one color.
std::optional<std::vector<std::size_t>> ramsey_homogeneous(const TupleColoring& coloring,
                                                           std::size_t target,
                                                           ExecConfig exec = {});

namespace reference {

std::optional<std::vector<std::size_t>> ramsey_homogeneous(const TupleColoring& coloring,
                                                           std::size_t target);

}  // namespace reference

}  // namespace hindlab
