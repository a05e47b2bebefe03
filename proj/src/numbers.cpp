#include "hindlab/numbers.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <mutex>

#include "hindlab/coloring.hpp"
#include "hindlab/error.hpp"
#include "hindlab/search.hpp"

namespace hindlab {

UniversalTarget UniversalTarget::progression(unsigned terms) {
  if (terms == 0) throw InvalidElement("progression needs at least one term");
  UniversalTarget t;
  t.kind = Kind::Progression;
  t.terms = terms;
  return t;
}

UniversalTarget UniversalTarget::sum_triple() {
  UniversalTarget t;
  t.kind = Kind::SumTriple;
  return t;
}

UniversalTarget UniversalTarget::of_family(PatternFamily family, std::size_t size) {
  if (size == 0) throw InvalidElement("target size must be positive");
  UniversalTarget t;
  t.kind = Kind::Family;
  t.family = std::move(family);
  t.size = size;
  return t;
}

std::string UniversalTarget::describe() const {
  switch (kind) {
    case Kind::Progression:
      return "ap:" + std::to_string(terms);
    case Kind::SumTriple:
      return "sum-triple";
    case Kind::Family:
      return family.describe() + " size " + std::to_string(size);
  }
  return "?";
}

namespace {

// Does the coloring of [1, k] (colors[0..k)) contain the target using k?
bool contains_ending_at(const UniversalTarget& t, const std::vector<unsigned>& col, unsigned k) {
  const unsigned c = col[k - 1];
  switch (t.kind) {
    case UniversalTarget::Kind::Progression: {
      if (t.terms <= 1) return true;
      for (unsigned e = 1; (t.terms - 1) * e < k; ++e) {
        bool mono = true;
        for (unsigned i = 1; i < t.terms && mono; ++i) mono = col[k - i * e - 1] == c;
        if (mono) return true;
      }
      return false;
    }
    case UniversalTarget::Kind::SumTriple:
      for (unsigned x = 1; 2 * x <= k; ++x) {
        if (col[x - 1] == c && col[k - x - 1] == c) return true;
      }
      return false;
    case UniversalTarget::Kind::Family: {
      const auto s = GroundStructure::int_add(k);
      const unsigned colors = *std::max_element(col.begin(), col.begin() + k) + 1;
      const Coloring f = Coloring::from_function(s, colors, [&](Element x) { return col[x - 1]; });
      SearchBudget budget;
      budget.max_candidates = ~std::uint64_t{0};
      const auto r = find_witness(s, f, t.family, t.size, budget, false, ExecConfig{1});
      return r.status == SearchStatus::Found;
    }
  }
  return false;
}

struct Best {
  unsigned length = 0;
  std::vector<unsigned> coloring;
  std::uint64_t nodes = 0;

  void offer(const std::vector<unsigned>& col, unsigned len) {
    if (len > length) {
      length = len;
      coloring.assign(col.begin(), col.begin() + len);
    }
  }
};

// Extends an avoiding coloring of [1, len) position by position, in
// lexicographic order, recording the longest avoiding coloring seen.
void extend(const UniversalTarget& t, unsigned colors, unsigned cap, std::vector<unsigned>& col,
            unsigned len, unsigned used, Best& best) {
  best.offer(col, len);
  if (len == cap) return;
  const unsigned limit = std::min(colors, used + 1);
  for (unsigned c = 0; c < limit; ++c) {
    ++best.nodes;
    col[len] = c;
    if (contains_ending_at(t, col, len + 1)) continue;
    extend(t, colors, cap, col, len + 1, std::max(used, c + 1), best);
  }
}

// Splits the tree at `depth`: avoiding prefixes of exactly that length, and
// the best dead end shorter than it.
void collect_prefixes(const UniversalTarget& t, unsigned colors, unsigned depth,
                      std::vector<unsigned>& col, unsigned len, unsigned used,
                      std::vector<std::pair<std::vector<unsigned>, unsigned>>& out, Best& best) {
  best.offer(col, len);
  if (len == depth) {
    out.emplace_back(std::vector<unsigned>(col.begin(), col.begin() + len), used);
    return;
  }
  const unsigned limit = std::min(colors, used + 1);
  for (unsigned c = 0; c < limit; ++c) {
    ++best.nodes;
    col[len] = c;
    if (contains_ending_at(t, col, len + 1)) continue;
    collect_prefixes(t, colors, depth, col, len + 1, std::max(used, c + 1), out, best);
  }
}

bool better(const Best& a, const Best& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.coloring < b.coloring;
}

}  // namespace

bool coloring_contains(const UniversalTarget& target, const std::vector<unsigned>& colors) {
  for (unsigned k = 1; k <= colors.size(); ++k) {
    if (contains_ending_at(target, colors, k)) return true;
  }
  return false;
}

UniversalResult min_universal_n(const UniversalTarget& target, unsigned colors, unsigned cap,
                                ExecConfig exec) {
  if (colors == 0) throw InvalidElement("color count must be positive");
  if (cap == 0) throw InvalidElement("cap must be positive");
  const int threads = resolve_threads(exec);
  std::vector<unsigned> col(cap, 0);
  Best best;

  if (threads <= 1) {
    extend(target, colors, cap, col, 0, 0, best);
  } else {
    const unsigned depth = std::min(cap, 10u);
    std::vector<std::pair<std::vector<unsigned>, unsigned>> prefixes;
    collect_prefixes(target, colors, depth, col, 0, 0, prefixes, best);
    std::vector<Best> partial(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(prefixes.size()); ++i) {
      const auto& [prefix, used] = prefixes[static_cast<std::size_t>(i)];
      std::vector<unsigned> local(cap, 0);
      std::copy(prefix.begin(), prefix.end(), local.begin());
      extend(target, colors, cap, local, static_cast<unsigned>(prefix.size()), used,
             partial[static_cast<std::size_t>(i)]);
    }
    for (const auto& p : partial) {
      best.nodes += p.nodes;
      if (better(p, best)) {
        best.length = p.length;
        best.coloring = p.coloring;
      }
    }
  }

  UniversalResult out;
  out.nodes = best.nodes;
  out.extremal = best.coloring;
  if (best.length >= cap) {
    out.cap_exceeded = true;
  } else {
    out.n = best.length + 1;
  }
  return out;
}

std::optional<unsigned> van_der_waerden(unsigned terms, unsigned colors, unsigned cap) {
  if (terms == 0 || colors == 0) throw InvalidElement("terms and colors must be positive");
  if (colors == 1 || terms == 1) return terms;
  if (terms == 2) return colors + 1;
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, unsigned> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({terms, colors}); it != memo.end()) {
      if (it->second <= cap) return it->second;
      return std::nullopt;
    }
  }
  const auto r = min_universal_n(UniversalTarget::progression(terms), colors, cap);
  if (r.cap_exceeded) return std::nullopt;
  std::lock_guard lock(mu);
  memo[{terms, colors}] = r.n;
  return r.n;
}

}  // namespace hindlab
