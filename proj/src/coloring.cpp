#include "hindlab/coloring.hpp"

#include <bit>

#include "hindlab/error.hpp"

namespace hindlab {

ColoringSpec ColoringSpec::constant(unsigned colors) {
  if (colors == 0) throw InvalidElement("color count must be positive");
  ColoringSpec c;
  c.kind = ColoringKind::Constant;
  c.colors = colors;
  return c;
}

ColoringSpec ColoringSpec::parity() {
  ColoringSpec c;
  c.kind = ColoringKind::Parity;
  c.colors = 2;
  c.modulus = 2;
  return c;
}

ColoringSpec ColoringSpec::mod(unsigned k) {
  if (k == 0) throw InvalidElement("modulus must be positive");
  ColoringSpec c;
  c.kind = ColoringKind::Mod;
  c.colors = k;
  c.modulus = k;
  return c;
}

ColoringSpec ColoringSpec::seeded(std::uint64_t seed, unsigned colors) {
  if (colors == 0) throw InvalidElement("color count must be positive");
  ColoringSpec c;
  c.kind = ColoringKind::Seeded;
  c.colors = colors;
  c.seed = seed;
  return c;
}

ColoringSpec ColoringSpec::explicit_table(std::vector<unsigned> table, unsigned colors) {
  if (colors == 0) throw InvalidElement("color count must be positive");
  for (auto v : table) {
    if (v >= colors) {
      throw InvalidElement("explicit color " + std::to_string(v) + " is not below " +
                           std::to_string(colors));
    }
  }
  ColoringSpec c;
  c.kind = ColoringKind::Explicit;
  c.colors = colors;
  c.table = std::move(table);
  return c;
}

ColoringSpec ColoringSpec::composed(std::vector<ColoringSpec> parts) {
  if (parts.empty()) throw InvalidElement("composed coloring needs parts");
  ColoringSpec c;
  c.kind = ColoringKind::Composed;
  c.colors = 1;
  for (const auto& p : parts) c.colors *= p.colors;
  c.parts = std::move(parts);
  return c;
}

std::string ColoringSpec::describe() const {
  switch (kind) {
    case ColoringKind::Constant:
      return "const:" + std::to_string(colors);
    case ColoringKind::Parity:
      return "parity";
    case ColoringKind::Mod:
      return "mod:" + std::to_string(modulus);
    case ColoringKind::Seeded:
      return "seeded:" + std::to_string(seed) + ":" + std::to_string(colors);
    case ColoringKind::Explicit:
      return "explicit(" + std::to_string(table.size()) + " entries, " + std::to_string(colors) +
             " colors)";
    case ColoringKind::Composed: {
      std::string out = "composed(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i].describe();
      }
      return out + ")";
    }
  }
  return "?";
}

std::uint64_t seeded_word(std::uint64_t seed, std::uint64_t key) {
  std::uint64_t z = seed + (key + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t magnitude(const GroundStructure& s, Element x) {
  return s.kind() == StructureKind::FinUnions ? set_size(x) : x;
}

std::vector<std::uint32_t> fill_table(const GroundStructure& s, const ColoringSpec& spec) {
  const auto space = s.key_space();
  if (space > kMaxEnumerable + 1) {
    throw InvalidElement("cannot bind a coloring to " + s.describe() + ": too many elements");
  }
  std::vector<std::uint32_t> t(space, 0);
  switch (spec.kind) {
    case ColoringKind::Constant:
      break;
    case ColoringKind::Parity:
    case ColoringKind::Mod:
      for (std::uint64_t k = 0; k < space; ++k) {
        if (s.contains(k)) t[k] = static_cast<std::uint32_t>(magnitude(s, k) % spec.modulus);
      }
      break;
    case ColoringKind::Seeded:
      for (std::uint64_t k = 0; k < space; ++k) {
        if (s.contains(k)) t[k] = seeded_color(spec.seed, s.key(k), spec.colors);
      }
      break;
    case ColoringKind::Explicit: {
      const auto elems = s.elements();
      if (spec.table.size() != elems.size()) {
        throw InvalidElement("explicit coloring has " + std::to_string(spec.table.size()) +
                             " entries but " + s.describe() + " has " +
                             std::to_string(elems.size()) + " elements");
      }
      for (std::size_t i = 0; i < elems.size(); ++i) t[s.key(elems[i])] = spec.table[i];
      break;
    }
    case ColoringKind::Composed: {
      std::uint64_t scale = 1;
      for (const auto& part : spec.parts) {
        const auto sub = fill_table(s, part);
        for (std::uint64_t k = 0; k < space; ++k) {
          t[k] += static_cast<std::uint32_t>(sub[k] * scale);
        }
        scale *= part.colors;
      }
      break;
    }
  }
  return t;
}

}  // namespace

Coloring::Coloring(const GroundStructure& s, const ColoringSpec& spec)
    : colors_(spec.colors), by_key_(fill_table(s, spec)), spec_(spec) {
  if (spec.kind == ColoringKind::Mod || spec.kind == ColoringKind::Parity) {
    colors_ = spec.modulus;
  }
}

Coloring Coloring::from_function(const GroundStructure& s, unsigned colors,
                                 const std::function<unsigned(Element)>& color_of) {
  const auto space = s.key_space();
  if (space > kMaxEnumerable + 1) {
    throw InvalidElement("cannot bind a coloring to " + s.describe() + ": too many elements");
  }
  Coloring c;
  c.colors_ = colors;
  c.by_key_.assign(space, 0);
  std::vector<unsigned> table;
  const auto elems = s.elements();
  table.reserve(elems.size());
  for (auto x : elems) {
    const auto v = color_of(x);
    if (v >= colors) throw InvalidElement("color out of range in coloring function");
    c.by_key_[s.key(x)] = v;
    table.push_back(v);
  }
  c.spec_ = ColoringSpec::explicit_table(std::move(table), colors);
  return c;
}

}  // namespace hindlab
