#include "hindlab/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include "hindlab/error.hpp"

namespace hindlab {

int resolve_threads(const ExecConfig& exec) {
  if (exec.threads > 0) return exec.threads;
  if (const char* env = std::getenv("HINDLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1, omp_get_max_threads());
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "witness";
    case SearchStatus::NotFound:
      return "not-found";
    case SearchStatus::BudgetExhausted:
      return "budget-exhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;
  std::atomic<bool> hit{false};

  bool expired() {
    if (hit.load(std::memory_order_relaxed)) return true;
    if (at && Clock::now() >= *at) hit.store(true);
    return hit.load(std::memory_order_relaxed);
  }
};

struct BranchOutcome {
  bool found = false;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> chosen;
  unsigned color = 0;
};

// Depth-first search for a family of `target` candidates, in candidate order,
// whose sums of every length in `lengths` share one color.
class FamilySearch {
 public:
  FamilySearch(const GroundStructure& s, const Coloring& coloring, std::span<const Element> cands,
               const LengthSet& lengths, std::size_t target, bool block, Deadline& deadline)
      : s_(s),
        coloring_(coloring),
        cands_(cands),
        target_(target),
        block_(block),
        max_len_(lengths.max()),
        deadline_(deadline) {
    is_len_.assign(max_len_ + 1, false);
    for (auto j : lengths.values()) is_len_[j] = true;
    if (block_) {
      // Canonical order groups FinUnions elements by minimum.
      first_with_min_.assign(kMaxUniverse + 2, cands_.size());
      for (std::size_t i = cands_.size(); i-- > 0;) {
        const auto m = set_min(cands_[i]);
        for (unsigned v = 0; v <= m; ++v) first_with_min_[v] = std::min(first_with_min_[v], i);
      }
    }
  }

  BranchOutcome branch(std::size_t first, std::uint64_t cap) const {
    State st;
    st.cap = cap;
    st.levels.assign(target_ + 1, {});
    st.levels[0].push_back(Partial{0, 0});
    st.chosen.reserve(target_);
    BranchOutcome out;
    if (try_extend(st, 0, first, -1) == Extend::Ok) {
      out.found = dfs(st, 1);
    }
    out.exhausted = st.exhausted;
    out.nodes = st.nodes;
    if (out.found) {
      out.chosen = st.chosen;
      out.color = static_cast<unsigned>(st.result_color);
    }
    return out;
  }

  std::size_t size() const { return cands_.size(); }

 private:
  struct Partial {
    Element sum;
    unsigned count;
  };

  struct State {
    std::vector<std::vector<Partial>> levels;  // subsets of chosen[0..t) with count < max_len
    std::vector<int> colors;                   // fixed color after each depth
    std::vector<std::size_t> chosen;
    std::uint64_t nodes = 0;
    std::uint64_t cap = 0;
    bool exhausted = false;
    int result_color = -1;
  };

  enum class Extend { Ok, Reject, RejectRange };

  Extend check(State& st, std::size_t depth, Element x, int fixed, int& out_color) const {
    auto& next = st.levels[depth + 1];
    next.clear();
    int color = fixed;
    for (const auto& p : st.levels[depth]) {
      const unsigned j = p.count + 1;
      Element sum = x;
      if (p.count > 0) {
        auto r = s_.try_op(p.sum, x);
        if (!r) return Extend::RejectRange;
        sum = *r;
      }
      if (is_len_[j]) {
        const int c = static_cast<int>(coloring_(sum));
        if (color < 0) {
          color = c;
        } else if (c != color) {
          return Extend::Reject;
        }
      }
      if (j < max_len_) next.push_back(Partial{sum, j});
    }
    // Subsets that skip x carry over unchanged.
    next.insert(next.end(), st.levels[depth].begin(), st.levels[depth].end());
    out_color = color;
    return Extend::Ok;
  }

  // Counts one node and, on success, records cands[idx] at `depth`.
  Extend try_extend(State& st, std::size_t depth, std::size_t idx, int fixed) const {
    if (++st.nodes > st.cap || ((st.nodes & 0xFFF) == 0 && deadline_.expired())) {
      st.exhausted = true;
      return Extend::Reject;
    }
    int color = -1;
    const auto r = check(st, depth, cands_[idx], fixed, color);
    if (r != Extend::Ok) return r;
    st.chosen.resize(depth);
    st.chosen.push_back(idx);
    st.colors.resize(depth);
    st.colors.push_back(color);
    return Extend::Ok;
  }

  bool dfs(State& st, std::size_t depth) const {
    if (depth == target_) {
      st.result_color = st.colors[depth - 1];
      return true;
    }
    const std::size_t last = st.chosen[depth - 1];
    std::size_t start = last + 1;
    if (block_) {
      const unsigned above = set_max(cands_[last]) + 1;
      start = std::max(start, above <= kMaxUniverse ? first_with_min_[above] : cands_.size());
    }
    const std::size_t remaining = target_ - depth;
    for (std::size_t i = start; i + remaining <= cands_.size(); ++i) {
      const auto r = try_extend(st, depth, i, st.colors[depth - 1]);
      if (r == Extend::Ok) {
        if (dfs(st, depth + 1)) return true;
        if (st.exhausted) return false;
      } else if (st.exhausted) {
        return false;
      } else if (r == Extend::RejectRange && s_.kind() == StructureKind::IntAdd) {
        // Larger integers overflow too.
        break;
      }
    }
    return false;
  }

  const GroundStructure& s_;
  const Coloring& coloring_;
  std::span<const Element> cands_;
  std::size_t target_;
  bool block_;
  unsigned max_len_;
  std::vector<bool> is_len_;
  std::vector<std::size_t> first_with_min_;
  Deadline& deadline_;
};

std::vector<Element> candidates(const GroundStructure& s, const SearchBudget& budget) {
  auto all = s.elements();
  if (all.size() > budget.max_ground_elements) all.resize(budget.max_ground_elements);
  return all;
}

void check_inputs(const GroundStructure& s, std::size_t target, bool require_block) {
  if (target == 0) throw InvalidElement("target size must be positive");
  if (require_block && s.kind() != StructureKind::FinUnions) {
    throw PreconditionFailed("block witnesses need a fin-unions structure");
  }
}

}  // namespace

SearchResult find_witness(const GroundStructure& s, const Coloring& coloring,
                          const PatternFamily& family, std::size_t target,
                          const SearchBudget& budget, bool require_block, ExecConfig exec) {
  check_inputs(s, target, require_block);
  const auto cands = candidates(s, budget);
  const auto patterns = enumerate_family(family, static_cast<unsigned>(std::min<std::size_t>(
                                                     target, std::numeric_limits<unsigned>::max())),
                                         budget.max_a, budget.max_b);
  const int threads = resolve_threads(exec);
  Deadline deadline;
  if (budget.time_limit) deadline.at = Clock::now() + *budget.time_limit;

  SearchResult result;
  std::uint64_t used = 0;
  for (const auto& pattern : patterns) {
    const LengthSet lengths = expand_pattern(pattern);
    FamilySearch search(s, coloring, cands, lengths, target, require_block, deadline);
    const std::size_t n = search.size();
    std::vector<BranchOutcome> outcomes(n);
    std::vector<char> done(n, 0);
    const std::uint64_t cap = budget.max_candidates - std::min(used, budget.max_candidates);

    if (threads <= 1) {
      std::uint64_t spent = 0;
      for (std::size_t i = 0; i < n; ++i) {
        outcomes[i] = search.branch(i, cap - std::min(spent, cap));
        done[i] = 1;
        spent += outcomes[i].nodes;
        if (outcomes[i].found || outcomes[i].exhausted) break;
      }
    } else {
      std::atomic<std::size_t> first_hit{n};
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (ui > first_hit.load(std::memory_order_relaxed)) continue;
        outcomes[ui] = search.branch(ui, cap);
        done[ui] = 1;
        if (outcomes[ui].found || outcomes[ui].exhausted) {
          std::size_t cur = first_hit.load();
          while (ui < cur && !first_hit.compare_exchange_weak(cur, ui)) {
          }
        }
      }
    }

    // Replay the serial node accounting so the verdict is independent of
    // how many branches ran concurrently.
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i]) break;
      const auto& o = outcomes[i];
      if (used + o.nodes > budget.max_candidates || o.exhausted) {
        result.status = SearchStatus::BudgetExhausted;
        result.candidates = budget.max_candidates;
        return result;
      }
      used += o.nodes;
      if (o.found) {
        Witness w;
        for (auto idx : o.chosen) w.family.members.push_back(cands[idx]);
        w.family.block = require_block;
        w.pattern = pattern;
        w.lengths = lengths;
        w.color = o.color;
        w.block = require_block;
        result.status = SearchStatus::Found;
        result.witness = std::move(w);
        result.candidates = used;
        return result;
      }
    }
    if (deadline.hit.load()) {
      result.status = SearchStatus::BudgetExhausted;
      result.candidates = used;
      return result;
    }
  }
  result.status = SearchStatus::NotFound;
  result.candidates = used;
  return result;
}

VerificationReport verify_witness(const GroundStructure& s, const Coloring& coloring,
                                  const Witness& w, std::optional<std::size_t> expected_size) {
  VerificationReport r;
  auto fail = [&r](std::string what) {
    r.valid = false;
    r.violation = std::move(what);
    return r;
  };
  for (auto x : w.family.members) {
    if (!s.contains(x)) return fail("invalid element " + s.format(x));
  }
  {
    auto sorted = w.family.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail("family members not distinct");
    }
  }
  if (w.family.members.empty()) return fail("empty family");
  if (expected_size && w.family.members.size() != *expected_size) {
    return fail("size mismatch: family has " + std::to_string(w.family.members.size()) +
                " members, instance asks for " + std::to_string(*expected_size));
  }
  LengthSet expected_lengths;
  try {
    expected_lengths = expand_pattern(w.pattern);
  } catch (const Error& e) {
    return fail(std::string("bad pattern: ") + e.what());
  }
  if (!(expected_lengths == w.lengths)) return fail("length set does not match pattern");
  if (w.block || w.family.block) {
    if (s.kind() != StructureKind::FinUnions || !is_unmeshed(w.family.members)) {
      return fail("family not unmeshed");
    }
  }
  if (w.color >= coloring.count()) return fail("color mismatch: color out of range");
  SumSet sums;
  try {
    FinFamily plain{w.family.members, false};
    sums = fs_over_lengths(s, plain, w.lengths, RangeMode::Strict);
  } catch (const OutOfRange& e) {
    return fail(std::string("sum out of range: ") + e.what());
  }
  if (sums.elements.empty()) {
    r.valid = true;
    r.violation.clear();
    r.note = "vacuous: every length exceeds the family size";
    return r;
  }
  for (auto x : sums.elements) {
    const unsigned c = coloring(x);
    if (c != w.color) {
      return fail("color mismatch: sum " + s.format(x) + " has color " + std::to_string(c) +
                  ", certificate says " + std::to_string(w.color));
    }
  }
  r.valid = true;
  r.note = std::to_string(sums.elements.size()) + " sums checked";
  return r;
}

}  // namespace hindlab
