#include "hindlab/replay.hpp"

#include <algorithm>

#include "hindlab/error.hpp"
#include "hindlab/numbers.hpp"
#include "hindlab/ramsey.hpp"

namespace hindlab {

std::vector<Element> replay_ground(const GroundStructure& s, unsigned n,
                                   const SearchBudget& budget) {
  std::vector<Element> x;
  switch (s.kind()) {
    case StructureKind::IntAdd: {
      // Largest K with K + (K-1) + ... + (K-n+1) <= limit.
      std::uint64_t k = 0;
      while (true) {
        const std::uint64_t next = k + 1;
        const std::uint64_t lo = next >= n ? next - n + 1 : 1;
        const std::uint64_t top_sum = (next + lo) * (next - lo + 1) / 2;
        if (top_sum > s.limit()) break;
        k = next;
        if (k >= budget.max_ground_elements) break;
      }
      for (Element v = 1; v <= k; ++v) x.push_back(v);
      break;
    }
    case StructureKind::FinUnions:
      for (unsigned v = 0; v < s.universe() && x.size() < budget.max_ground_elements; ++v) {
        x.push_back(Element{1} << v);
      }
      break;
    case StructureKind::OpTable:
      for (Element v = 0; v < s.table().size() && x.size() < budget.max_ground_elements; ++v) {
        x.push_back(v);
      }
      break;
  }
  return x;
}

ReplayResult replay_progression_proof(const GroundStructure& s, const Coloring& f, unsigned colors,
                                      unsigned d, std::size_t target, const SearchBudget& budget,
                                      ExecConfig exec) {
  if (colors == 0 || d == 0 || target == 0) {
    throw InvalidElement("colors, d and target size must be positive");
  }
  if (f.count() > colors) {
    throw PreconditionFailed("coloring uses " + std::to_string(f.count()) +
                             " colors, more than the declared " + std::to_string(colors));
  }
  ReplayResult out;
  const auto n = van_der_waerden(d + 1, colors, 64);
  if (!n) {
    out.status = SearchStatus::BudgetExhausted;
    out.reason = "progression number W(" + std::to_string(d + 1) + ";" + std::to_string(colors) +
                 ") exceeds the cap";
    return out;
  }

  ReplayTrace trace;
  trace.n = *n;
  trace.d = d;
  trace.ground = replay_ground(s, trace.n, budget);
  const std::size_t need = target + trace.n - 1;
  if (trace.ground.size() < need) {
    out.status = SearchStatus::NotFound;
    out.reason = "ground has " + std::to_string(trace.ground.size()) + " usable elements, need " +
                 std::to_string(need);
    out.trace = std::move(trace);
    return out;
  }

  // Colors of the induced tuple coloring are vectors over f's own palette.
  const TupleColoring tuples = induced_length_coloring(s, f, trace.ground, trace.n);
  const auto homogeneous = ramsey_homogeneous(tuples, need, exec);
  if (!homogeneous) {
    out.status = SearchStatus::NotFound;
    out.reason = "no homogeneous set of size " + std::to_string(need);
    out.trace = std::move(trace);
    return out;
  }
  for (auto i : *homogeneous) trace.homogeneous.push_back(trace.ground[i]);

  std::vector<std::size_t> head(homogeneous->begin(), homogeneous->begin() + trace.n);
  trace.induced = decode_color_vector(tuples.at(head), f.count(), trace.n);

  bool found = false;
  for (unsigned a = 1; a <= trace.n && !found; ++a) {
    for (unsigned b = 1; a + d * b <= trace.n && !found; ++b) {
      bool mono = true;
      for (unsigned i = 1; i <= d && mono; ++i) {
        mono = trace.induced[a + i * b - 1] == trace.induced[a - 1];
      }
      if (mono) {
        trace.a = a;
        trace.b = b;
        found = true;
      }
    }
  }
  if (!found) {
    // Impossible when n is a true progression number.
    throw Error("induced coloring of [1," + std::to_string(trace.n) +
                "] has no monochromatic progression");
  }

  Witness w;
  w.family.members.assign(trace.homogeneous.begin(), trace.homogeneous.begin() + target);
  w.family.block = s.kind() == StructureKind::FinUnions;
  w.block = w.family.block;
  w.pattern = ProgressionLengths{trace.a, trace.b, d};
  w.lengths = expand_pattern(w.pattern);
  w.color = trace.induced[trace.a - 1];
  out.status = SearchStatus::Found;
  out.witness = std::move(w);
  out.trace = std::move(trace);
  return out;
}

}  // namespace hindlab
