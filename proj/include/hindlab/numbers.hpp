#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hindlab/exec.hpp"
#include "hindlab/pattern.hpp"

namespace hindlab {

/// What every coloring of [1, N] must contain.
struct UniversalTarget {
  enum class Kind {
    Progression,  // `terms`-term arithmetic progression x, x+e, ..., e >= 1
    SumTriple,    // x, y, x+y with x = y allowed
    Family,       // a find_witness witness of size `size` over IntAdd(N)
  };
  Kind kind = Kind::Progression;
  unsigned terms = 3;
  PatternFamily family;
  std::size_t size = 2;

  static UniversalTarget progression(unsigned terms);
  static UniversalTarget sum_triple();
  static UniversalTarget of_family(PatternFamily family, std::size_t size);

  std::string describe() const;
};

// colors[x-1] is the color of x.
bool coloring_contains(const UniversalTarget& target, const std::vector<unsigned>& colors);

struct UniversalResult {
  bool cap_exceeded = false;
  unsigned n = 0;                  // least N, valid when !cap_exceeded
  std::vector<unsigned> extremal;  // lex-least avoiding coloring of [1, n-1] (or of [1, cap])
  std::uint64_t nodes = 0;
};

/// Least N such that every `colors`-coloring of [1, N] contains the target,
/// found by exhaustive backtracking over avoiding colorings (color of 1 fixed,
/// new colors introduced in order).
UniversalResult min_universal_n(const UniversalTarget& target, unsigned colors, unsigned cap,
                                ExecConfig exec = {});

// W(terms; colors) with a process-wide memo; closed forms for 1 color and 2 terms.
std::optional<unsigned> van_der_waerden(unsigned terms, unsigned colors, unsigned cap);

namespace reference {

// Enumerates all colors^N colorings for N = 1, 2, ...
UniversalResult min_universal_n(const UniversalTarget& target, unsigned colors, unsigned cap);

}  // namespace reference

}  // namespace hindlab
