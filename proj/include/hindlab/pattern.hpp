#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hindlab/algebra.hpp"
#include "hindlab/ordinals.hpp"

namespace hindlab {

struct SchurLengths {
  unsigned a = 1, b = 1;  // {a, b, a+b}
};

struct ProgressionLengths {
  unsigned a = 1, b = 1, d = 1;  // {a, a+b, ..., a+d*b}
};

struct FolkmanLengths {
  std::vector<unsigned> generators;  // strictly increasing; lengths are their subset sums
};

struct ExplicitLengths {
  LengthSet lengths;
};

struct LargeLengths {
  Ordinal beta;            // B is w^beta-large
  unsigned min_length = 1;  // min(B) >= min_length
  unsigned bound = 64;      // search window for B
};

using LengthPattern =
    std::variant<SchurLengths, ProgressionLengths, FolkmanLengths, ExplicitLengths, LargeLengths>;

// Throws InvalidElement on zero parameters or non-increasing generators.
void validate_pattern(const LengthPattern& p);
LengthSet expand_pattern(const LengthPattern& p);
std::string describe(const LengthPattern& p);

/// The parameter space a witness search ranges over.
struct PatternFamily {
  enum class Kind {
    Schur,        // all (a, b)
    Progression,  // all (a, b) with d fixed
    Folkman,      // all generator tuples of a fixed size
    Fixed,        // one pattern
  };
  Kind kind = Kind::Schur;
  unsigned d = 1;  // progression d, or Folkman generator count
  LengthPattern fixed = SchurLengths{};

  static PatternFamily schur() { return {Kind::Schur, 1, SchurLengths{}}; }
  static PatternFamily progression(unsigned d) { return {Kind::Progression, d, SchurLengths{}}; }
  static PatternFamily folkman(unsigned count) { return {Kind::Folkman, count, SchurLengths{}}; }
  static PatternFamily single(LengthPattern p) { return {Kind::Fixed, 1, std::move(p)}; }

  std::string describe() const;
};

// Admissible instances in tie-break order: parameters lexicographically,
// only those whose largest length is <= max_length and whose leading
// parameters are <= max_a / max_b.
std::vector<LengthPattern> enumerate_family(const PatternFamily& family, unsigned max_length,
                                            unsigned max_a, unsigned max_b);

}  // namespace hindlab
