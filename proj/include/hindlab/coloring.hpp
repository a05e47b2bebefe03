#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hindlab/algebra.hpp"

namespace hindlab {

enum class ColoringKind { Explicit, Constant, Parity, Mod, Seeded, Composed };

/// Description of a finite coloring, independent of any structure.
///
/// Parity and Mod(k) color by the integer value (IntAdd), the set size
/// (FinUnions) or the row index (OpTable). Explicit lists one color per
/// element in canonical element order. Seeded colors are a pure function of
/// (seed, key); see seeded_color(). Composed is the product of its parts.
struct ColoringSpec {
  ColoringKind kind = ColoringKind::Constant;
  unsigned colors = 1;
  std::vector<unsigned> table;
  unsigned modulus = 2;
  std::uint64_t seed = 0;
  std::vector<ColoringSpec> parts;

  static ColoringSpec constant(unsigned colors = 1);
  static ColoringSpec parity();
  static ColoringSpec mod(unsigned k);
  static ColoringSpec seeded(std::uint64_t seed, unsigned colors);
  static ColoringSpec explicit_table(std::vector<unsigned> table, unsigned colors);
  static ColoringSpec composed(std::vector<ColoringSpec> parts);

  std::string describe() const;
};

// SplitMix64 finaliser of seed + (key + 1) * 0x9E3779B97F4A7C15.
std::uint64_t seeded_word(std::uint64_t seed, std::uint64_t key);
inline unsigned seeded_color(std::uint64_t seed, std::uint64_t key, unsigned colors) {
  return static_cast<unsigned>(seeded_word(seed, key) % colors);
}

/// A coloring bound to one structure: a dense lookup table over element keys.
class Coloring {
 public:
  Coloring(const GroundStructure& s, const ColoringSpec& spec);

  static Coloring from_function(const GroundStructure& s, unsigned colors,
                                const std::function<unsigned(Element)>& color_of);

  unsigned operator()(Element x) const { return by_key_[x]; }
  unsigned count() const { return colors_; }
  const ColoringSpec& spec() const { return spec_; }

 private:
  Coloring() = default;

  unsigned colors_ = 1;
  std::vector<std::uint32_t> by_key_;
  ColoringSpec spec_;
};

}  // namespace hindlab
