#include "hindlab/reduction.hpp"

#include <algorithm>
#include <map>

#include "hindlab/error.hpp"

namespace hindlab {

PairColoring::PairColoring(unsigned points, std::vector<unsigned> colors)
    : points_(points), colors_(std::move(colors)) {
  if (points > kMaxUniverse) throw InvalidElement("pair colorings support at most 64 points");
  const std::size_t pairs = static_cast<std::size_t>(points) * (points ? points - 1 : 0) / 2;
  if (colors_.size() != pairs) {
    throw InvalidElement("pair coloring on " + std::to_string(points) + " points needs " +
                         std::to_string(pairs) + " colors");
  }
  for (auto c : colors_) {
    if (c > 1) throw InvalidElement("pair colors must be 0 or 1");
  }
}

PairColoring PairColoring::constant(unsigned points, unsigned color) {
  const std::size_t pairs = static_cast<std::size_t>(points) * (points ? points - 1 : 0) / 2;
  return PairColoring(points, std::vector<unsigned>(pairs, color));
}

PairColoring PairColoring::seeded(unsigned points, std::uint64_t seed) {
  std::vector<unsigned> colors;
  for (unsigned i = 0; i < points; ++i) {
    for (unsigned j = i + 1; j < points; ++j) {
      colors.push_back(seeded_color(seed, std::uint64_t{i} * points + j, 2));
    }
  }
  return PairColoring(points, std::move(colors));
}

PairColoring PairColoring::from_bits(unsigned points, std::uint64_t bits) {
  const std::size_t pairs = static_cast<std::size_t>(points) * (points ? points - 1 : 0) / 2;
  std::vector<unsigned> colors(pairs);
  for (std::size_t p = 0; p < pairs; ++p) colors[p] = static_cast<unsigned>(bits >> p & 1);
  return PairColoring(points, std::move(colors));
}

std::size_t PairColoring::pair_index(unsigned i, unsigned j) const {
  if (i > j) std::swap(i, j);
  if (i == j || j >= points_) throw InvalidElement("not a pair of distinct points");
  // Pairs (i, *) start after sum_{r<i} (N-1-r) entries.
  return static_cast<std::size_t>(i) * (2 * points_ - i - 1) / 2 + (j - i - 1);
}

unsigned PairColoring::operator()(unsigned i, unsigned j) const {
  return colors_[pair_index(i, j)];
}

unsigned LiftedColoring::operator()(Element x) const {
  if (x == 0) throw InvalidElement("lifted coloring is undefined on the empty set");
  const auto members = set_members(x);
  if (members.size() % 2 == 1) return 2;
  const std::size_t half = members.size() / 2;
  return d_(members[half - 1], members.back());
}

Coloring LiftedColoring::bind() const {
  const auto s = GroundStructure::fin_unions(d_.points());
  return Coloring::from_function(s, 3, [this](Element x) { return (*this)(x); });
}

LiftedColoring lift_pair_coloring(const PairColoring& d) { return LiftedColoring(d); }

Extraction extract_pair_homogeneous(const PairColoring& d, const FinFamily& h, unsigned b,
                                    std::size_t count) {
  if (b == 0 || b % 2 == 1) throw PreconditionFailed("b must be a positive even integer");
  const unsigned n = d.points();
  if (n == 0) throw PreconditionFailed("pair coloring has no points");
  const auto s = GroundStructure::fin_unions(n);
  validate_family(s, FinFamily{h.members, false});
  if (!is_unmeshed(h.members)) throw PreconditionFailed("family is not unmeshed");

  const LiftedColoring lifted(d);
  const auto unions = fu_over_lengths(n, h, LengthSet({b}));
  if (unions.empty()) throw PreconditionFailed("family has fewer than b members");
  const unsigned color = lifted(unions.front());
  for (auto u : unions) {
    if (lifted(u) != color) throw PreconditionFailed("FU^{b} is not monochromatic");
  }

  // Most frequent member size, ties to the smaller size.
  std::map<unsigned, std::size_t> by_size;
  for (auto m : h.members) ++by_size[set_size(m)];
  unsigned size = 0;
  std::size_t best = 0;
  for (auto [sz, cnt] : by_size) {
    if (cnt > best) {
      best = cnt;
      size = sz;
    }
  }
  Extraction out;
  for (auto m : canonical_family(s, h.members).members) {
    if (set_size(m) == size) out.cardinality_class.push_back(m);
  }

  const std::size_t half = b / 2;
  const std::size_t available = out.cardinality_class.size() / half;
  if (count == 0) count = available;
  if (count < 2 || count > available) {
    throw InsufficientClass("cardinality class of " + std::to_string(out.cardinality_class.size()) +
                             " members cannot form " + std::to_string(std::max<std::size_t>(count, 2)) +
                             " blocks of " + std::to_string(half));
  }
  for (std::size_t k = 0; k < count; ++k) {
    Element block = 0;
    for (std::size_t i = 0; i < half; ++i) block |= out.cardinality_class[k * half + i];
    out.blocks.push_back(block);
    out.points.push_back(set_max(block));
  }
  // Two blocks together form a b-fold union of equal-size members, so its
  // lifted color is both `color` and d(max y, max z).
  const Element pair_union = out.blocks[0] | out.blocks[1];
  out.color = lifted(pair_union);
  if (out.color != color) throw Error("extracted color disagrees with FU^{b} color");
  return out;
}

unsigned corollary_even_length(unsigned a, unsigned b) {
  if (a == 0 || b == 0) throw InvalidElement("a and b must be positive");
  unsigned best = 0;
  for (unsigned v : {a, b, a + b}) {
    if (v % 2 == 0 && (best == 0 || v < best)) best = v;
  }
  return best;
}

std::string to_string(RoundTripReport::Outcome o) {
  switch (o) {
    case RoundTripReport::Outcome::Success:
      return "success";
    case RoundTripReport::Outcome::NotFound:
      return "not-found";
    case RoundTripReport::Outcome::BudgetExhausted:
      return "budget-exhausted";
    case RoundTripReport::Outcome::ClassTooSmall:
      return "class-too-small";
    case RoundTripReport::Outcome::Counterexample:
      return "counterexample";
  }
  return "?";
}

RoundTripReport round_trip_check(const PairColoring& d, unsigned b_min, unsigned b_max,
                                 std::size_t family_size, const SearchBudget& budget,
                                 ExecConfig exec) {
  RoundTripReport report;
  if (d.points() == 0) {
    report.message = "no points";
    return report;
  }
  const auto s = GroundStructure::fin_unions(d.points());
  const Coloring lifted = lift_pair_coloring(d).bind();
  bool exhausted = false;
  for (unsigned b = std::max(2u, b_min + (b_min % 2)); b <= b_max; b += 2) {
    const auto family = PatternFamily::single(ExplicitLengths{LengthSet({b})});
    const auto r = find_witness(s, lifted, family, family_size, budget, true, exec);
    if (r.status == SearchStatus::BudgetExhausted) {
      exhausted = true;
      break;
    }
    if (r.status != SearchStatus::Found) continue;

    report.witness = r.witness;
    report.b = b;
    Extraction x;
    try {
      x = extract_pair_homogeneous(d, r.witness->family, b);
    } catch (const InsufficientClass& e) {
      report.outcome = RoundTripReport::Outcome::ClassTooSmall;
      report.message = e.what();
      return report;
    } catch (const Error& e) {
      report.outcome = RoundTripReport::Outcome::Counterexample;
      report.message = e.what();
      return report;
    }
    for (std::size_t i = 0; i < x.points.size(); ++i) {
      for (std::size_t j = i + 1; j < x.points.size(); ++j) {
        if (d(x.points[i], x.points[j]) != x.color) {
          report.outcome = RoundTripReport::Outcome::Counterexample;
          report.message = "pair {" + std::to_string(x.points[i]) + "," +
                           std::to_string(x.points[j]) + "} breaks homogeneity";
          report.extraction = std::move(x);
          return report;
        }
      }
    }
    report.outcome = RoundTripReport::Outcome::Success;
    report.message = std::to_string(x.points.size()) + " points homogeneous in color " +
                     std::to_string(x.color);
    report.extraction = std::move(x);
    return report;
  }
  report.outcome = exhausted ? RoundTripReport::Outcome::BudgetExhausted
                             : RoundTripReport::Outcome::NotFound;
  report.message = exhausted ? "search budget exhausted" : "no unmeshed witness for any even b";
  return report;
}

}  // namespace hindlab
