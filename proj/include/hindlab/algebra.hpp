#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hindlab {

// Interpretation depends on the structure: the integer itself for IntAdd,
// a subset bitmask for FinUnions, a row index for OpTable.
using Element = std::uint64_t;

enum class StructureKind { IntAdd, FinUnions, OpTable };

// Largest element count we are willing to materialise (colorings, searches).
inline constexpr std::uint64_t kMaxEnumerable = std::uint64_t{1} << 22;
inline constexpr unsigned kMaxUniverse = 64;

/// A finite commutative semigroup.
///
/// IntAdd(limit): 1..limit under addition, sums above the limit are out of
/// range. FinUnions(u): nonempty subsets of {0..u-1} under union.
/// OpTable(n): explicit operation table over 0..n-1, verified commutative and
/// associative on construction.
class GroundStructure {
 public:
  static GroundStructure int_add(std::uint64_t limit);
  static GroundStructure fin_unions(unsigned universe);
  static GroundStructure op_table(std::vector<std::vector<std::uint32_t>> table);

  StructureKind kind() const { return kind_; }
  std::uint64_t limit() const { return limit_; }
  unsigned universe() const { return universe_; }
  const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

  bool contains(Element x) const;
  void check(Element x) const;

  // Semigroup operation; nullopt when the result leaves the structure.
  std::optional<Element> try_op(Element a, Element b) const;
  Element op(Element a, Element b) const;

  // Left fold over distinct valid elements.
  Element combine(std::span<const Element> elems) const;
  std::optional<Element> try_combine(std::span<const Element> elems) const;

  std::uint64_t element_count() const;
  // All elements in canonical order.
  std::vector<Element> elements() const;
  // Canonical order: numeric for IntAdd and OpTable, (min, max, lexicographic)
  // on sorted member lists for FinUnions.
  bool less(Element a, Element b) const;

  // Dense integer key used by coloring tables and the seeded generator.
  std::uint64_t key(Element x) const { return x; }
  std::uint64_t key_space() const;

  std::string format(Element x) const;
  std::string describe() const;

 private:
  GroundStructure() = default;

  StructureKind kind_ = StructureKind::IntAdd;
  std::uint64_t limit_ = 0;
  unsigned universe_ = 0;
  std::vector<std::vector<std::uint32_t>> table_;
};

/// Ordered list of distinct ground elements (H or X).
struct FinFamily {
  std::vector<Element> members;
  bool block = false;
};

// Throws InvalidElement on invalid/duplicate members or a false block flag.
void validate_family(const GroundStructure& s, const FinFamily& family);

// Sorts members into canonical order.
FinFamily canonical_family(const GroundStructure& s, std::vector<Element> members, bool block = false);

/// The length set A: positive integers, kept sorted and unique.
class LengthSet {
 public:
  LengthSet() = default;
  explicit LengthSet(std::vector<unsigned> lengths);

  const std::vector<unsigned>& values() const { return lengths_; }
  bool contains(unsigned j) const;
  bool empty() const { return lengths_.empty(); }
  unsigned max() const { return lengths_.empty() ? 0 : lengths_.back(); }

  friend bool operator==(const LengthSet&, const LengthSet&) = default;

 private:
  std::vector<unsigned> lengths_;
};

enum class RangeMode {
  Strict,  // out-of-range sums throw OutOfRange
  Skip,    // dropped and counted
};

struct SumSet {
  std::vector<Element> elements;  // canonical order, no duplicates
  std::size_t omitted = 0;        // out-of-range sums dropped in Skip mode
};

/// Every sum of j distinct members of X, for j in A.
SumSet fs_over_lengths(const GroundStructure& s, const FinFamily& x, const LengthSet& a,
                       RangeMode mode = RangeMode::Strict);

/// fs_over_lengths specialised to unions of finite sets.
std::vector<Element> fu_over_lengths(unsigned universe, const FinFamily& h, const LengthSet& a);

bool is_unmeshed(std::span<const Element> members);

// Finite-set helpers for FinUnions elements.
std::vector<unsigned> set_members(Element mask);
Element set_from(std::span<const unsigned> members);
unsigned set_min(Element mask);
unsigned set_max(Element mask);
unsigned set_size(Element mask);

}  // namespace hindlab
