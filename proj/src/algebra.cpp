#include "hindlab/algebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "hindlab/error.hpp"

namespace hindlab {

GroundStructure GroundStructure::int_add(std::uint64_t limit) {
  if (limit == 0) throw InvalidElement("int-add limit must be positive");
  GroundStructure s;
  s.kind_ = StructureKind::IntAdd;
  s.limit_ = limit;
  return s;
}

GroundStructure GroundStructure::fin_unions(unsigned universe) {
  if (universe == 0 || universe > kMaxUniverse) {
    throw InvalidElement("fin-unions universe must be in 1..64");
  }
  GroundStructure s;
  s.kind_ = StructureKind::FinUnions;
  s.universe_ = universe;
  return s;
}

GroundStructure GroundStructure::op_table(std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidElement("op-table must be nonempty");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidElement("op-table must be square");
    for (auto v : row) {
      if (v >= n) throw InvalidElement("op-table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) {
        throw InvalidElement("op-table is not commutative at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InvalidElement("op-table is not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  GroundStructure s;
  s.kind_ = StructureKind::OpTable;
  s.table_ = std::move(table);
  return s;
}

bool GroundStructure::contains(Element x) const {
  switch (kind_) {
    case StructureKind::IntAdd:
      return x >= 1 && x <= limit_;
    case StructureKind::FinUnions:
      return x != 0 && (universe_ == 64 || x < (Element{1} << universe_));
    case StructureKind::OpTable:
      return x < table_.size();
  }
  return false;
}

void GroundStructure::check(Element x) const {
  if (!contains(x)) {
    throw InvalidElement("element " + format(x) + " is not in " + describe());
  }
}

std::optional<Element> GroundStructure::try_op(Element a, Element b) const {
  switch (kind_) {
    case StructureKind::IntAdd:
      if (a > limit_ || b > limit_ - a) return std::nullopt;
      return a + b;
    case StructureKind::FinUnions:
      return a | b;
    case StructureKind::OpTable:
      return table_[a][b];
  }
  return std::nullopt;
}

Element GroundStructure::op(Element a, Element b) const {
  auto r = try_op(a, b);
  if (!r) throw OutOfRange("sum " + format(a) + "+" + format(b) + " exceeds " + describe());
  return *r;
}

namespace {

void check_distinct(const GroundStructure& s, std::span<const Element> elems) {
  if (elems.empty()) throw InvalidElement("combine needs at least one element");
  std::vector<Element> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidElement("combine needs distinct elements");
  }
  for (auto x : sorted) s.check(x);
}

}  // namespace

std::optional<Element> GroundStructure::try_combine(std::span<const Element> elems) const {
  check_distinct(*this, elems);
  Element acc = elems.front();
  for (std::size_t i = 1; i < elems.size(); ++i) {
    auto next = try_op(acc, elems[i]);
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

Element GroundStructure::combine(std::span<const Element> elems) const {
  auto r = try_combine(elems);
  if (!r) {
    std::ostringstream msg;
    msg << "sum of " << elems.size() << " elements exceeds " << describe();
    throw OutOfRange(msg.str());
  }
  return *r;
}

std::uint64_t GroundStructure::element_count() const {
  switch (kind_) {
    case StructureKind::IntAdd:
      return limit_;
    case StructureKind::FinUnions:
      return universe_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe_) - 1;
    case StructureKind::OpTable:
      return table_.size();
  }
  return 0;
}

std::uint64_t GroundStructure::key_space() const {
  switch (kind_) {
    case StructureKind::IntAdd:
      return limit_ + 1;
    case StructureKind::FinUnions:
      return universe_ >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << universe_;
    case StructureKind::OpTable:
      return table_.size();
  }
  return 0;
}

std::vector<Element> GroundStructure::elements() const {
  const auto count = element_count();
  if (count > kMaxEnumerable) {
    throw InvalidElement(describe() + " is too large to enumerate");
  }
  std::vector<Element> out;
  out.reserve(count);
  switch (kind_) {
    case StructureKind::IntAdd:
      for (Element x = 1; x <= limit_; ++x) out.push_back(x);
      break;
    case StructureKind::FinUnions:
      for (Element x = 1; x <= count; ++x) out.push_back(x);
      std::sort(out.begin(), out.end(), [this](Element a, Element b) { return less(a, b); });
      break;
    case StructureKind::OpTable:
      for (Element x = 0; x < count; ++x) out.push_back(x);
      break;
  }
  return out;
}

bool GroundStructure::less(Element a, Element b) const {
  if (kind_ != StructureKind::FinUnions) return a < b;
  if (a == b) return false;
  const auto amin = set_min(a), bmin = set_min(b);
  if (amin != bmin) return amin < bmin;
  const auto amax = set_max(a), bmax = set_max(b);
  if (amax != bmax) return amax < bmax;
  // Same endpoints: the list holding the lowest differing member is smaller.
  const Element diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

std::string GroundStructure::format(Element x) const {
  if (kind_ != StructureKind::FinUnions) return std::to_string(x);
  std::string out = "{";
  bool first = true;
  for (auto v : set_members(x)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string GroundStructure::describe() const {
  switch (kind_) {
    case StructureKind::IntAdd:
      return "int-add:" + std::to_string(limit_);
    case StructureKind::FinUnions:
      return "fin-unions:" + std::to_string(universe_);
    case StructureKind::OpTable:
      return "op-table:" + std::to_string(table_.size());
  }
  return "?";
}

void validate_family(const GroundStructure& s, const FinFamily& family) {
  for (auto x : family.members) s.check(x);
  std::vector<Element> sorted = family.members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidElement("family members are not distinct");
  }
  if (family.block) {
    if (s.kind() != StructureKind::FinUnions) {
      throw InvalidElement("block flag requires a fin-unions structure");
    }
    if (!is_unmeshed(family.members)) throw InvalidElement("family flagged block is not unmeshed");
  }
}

FinFamily canonical_family(const GroundStructure& s, std::vector<Element> members, bool block) {
  std::sort(members.begin(), members.end(), [&s](Element a, Element b) { return s.less(a, b); });
  return FinFamily{std::move(members), block};
}

LengthSet::LengthSet(std::vector<unsigned> lengths) : lengths_(std::move(lengths)) {
  std::sort(lengths_.begin(), lengths_.end());
  lengths_.erase(std::unique(lengths_.begin(), lengths_.end()), lengths_.end());
  if (!lengths_.empty() && lengths_.front() == 0) {
    throw InvalidElement("lengths must be positive");
  }
}

bool LengthSet::contains(unsigned j) const {
  return std::binary_search(lengths_.begin(), lengths_.end(), j);
}

namespace {

// Visits every j-subset of [0, n) as an increasing index vector.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t j, Visit&& visit) {
  if (j == 0 || j > n) return;
  std::vector<std::size_t> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(std::span<const std::size_t>(idx));
    std::size_t i = j;
    while (i > 0 && idx[i - 1] == n - j + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t k = i; k < j; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace

SumSet fs_over_lengths(const GroundStructure& s, const FinFamily& x, const LengthSet& a,
                       RangeMode mode) {
  validate_family(s, x);
  SumSet out;
  std::vector<Element> picked;
  for (auto j : a.values()) {
    for_each_combination(x.members.size(), j, [&](std::span<const std::size_t> idx) {
      picked.clear();
      for (auto i : idx) picked.push_back(x.members[i]);
      auto sum = s.try_combine(picked);
      if (sum) {
        out.elements.push_back(*sum);
      } else if (mode == RangeMode::Skip) {
        ++out.omitted;
      } else {
        throw OutOfRange("a " + std::to_string(j) + "-fold sum exceeds " + s.describe());
      }
    });
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [&s](Element p, Element q) { return s.less(p, q); });
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

std::vector<Element> fu_over_lengths(unsigned universe, const FinFamily& h, const LengthSet& a) {
  auto s = GroundStructure::fin_unions(universe);
  for (auto m : h.members) {
    if (m == 0) throw InvalidElement("finite-unions family has an empty member");
  }
  return fs_over_lengths(s, h, a).elements;
}

bool is_unmeshed(std::span<const Element> members) {
  for (auto m : members) {
    if (m == 0) throw InvalidElement("unmeshedness is undefined for empty sets");
  }
  std::vector<Element> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end(),
            [](Element p, Element q) { return set_min(p) < set_min(q); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (set_max(sorted[i - 1]) >= set_min(sorted[i])) return false;
  }
  return true;
}

std::vector<unsigned> set_members(Element mask) {
  std::vector<unsigned> out;
  while (mask != 0) {
    out.push_back(static_cast<unsigned>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

Element set_from(std::span<const unsigned> members) {
  Element mask = 0;
  for (auto v : members) {
    if (v >= kMaxUniverse) throw InvalidElement("set member " + std::to_string(v) + " exceeds 63");
    mask |= Element{1} << v;
  }
  return mask;
}

unsigned set_min(Element mask) { return static_cast<unsigned>(std::countr_zero(mask)); }
unsigned set_max(Element mask) { return 63u - static_cast<unsigned>(std::countl_zero(mask)); }
unsigned set_size(Element mask) { return static_cast<unsigned>(std::popcount(mask)); }

}  // namespace hindlab
