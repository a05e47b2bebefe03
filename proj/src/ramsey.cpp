#include "hindlab/ramsey.hpp"

#include <omp.h>

#include <atomic>
#include <numeric>

#include "hindlab/error.hpp"

namespace hindlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TupleColoring::TupleColoring(std::size_t ground, unsigned arity, unsigned colors,
                             std::vector<std::uint32_t> by_rank)
    : ground_(ground), arity_(arity), colors_(colors), by_rank_(std::move(by_rank)) {
  if (arity_ == 0) throw InvalidElement("tuple arity must be positive");
  if (by_rank_.size() != binomial(ground_, arity_)) {
    throw InvalidElement("tuple coloring must list one color per " + std::to_string(arity_) +
                         "-subset");
  }
  for (auto c : by_rank_) {
    if (c >= colors_) throw InvalidElement("tuple color out of range");
  }
  binom_.assign(ground_ + 1, std::vector<std::uint64_t>(arity_ + 1, 0));
  for (std::size_t n = 0; n <= ground_; ++n) {
    for (unsigned k = 0; k <= arity_; ++k) binom_[n][k] = binomial(n, k);
  }
}

std::uint64_t TupleColoring::rank(std::span<const std::size_t> tuple) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) r += binom_[tuple[i]][i + 1];
  return r;
}

TupleColoring TupleColoring::from_function(
    std::size_t ground, unsigned arity, unsigned colors,
    const std::function<unsigned(std::span<const std::size_t>)>& color_of) {
  if (arity == 0) throw InvalidElement("tuple arity must be positive");
  const auto count = binomial(ground, arity);
  if (count > kMaxEnumerable) throw InvalidElement("too many tuples to tabulate");
  std::vector<std::uint32_t> by_rank(count, 0);
  TupleColoring out(ground, arity, colors, std::move(by_rank));
  if (arity > ground) return out;
  std::vector<std::size_t> idx(arity);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    const unsigned c = color_of(idx);
    if (c >= colors) throw InvalidElement("tuple color out of range");
    out.by_rank_[out.rank(idx)] = c;
    std::size_t i = arity;
    while (i > 0 && idx[i - 1] == ground - arity + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < arity; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

TupleColoring induced_length_coloring(const GroundStructure& s, const Coloring& f,
                                      std::span<const Element> x, unsigned n) {
  if (n == 0) throw InvalidElement("tuple length must be positive");
  if (x.size() < n) throw PreconditionFailed("ground family is shorter than the tuple length");
  std::uint64_t vectors = 1;
  for (unsigned j = 0; j < n; ++j) {
    vectors *= f.count();
    if (vectors > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidElement("color vectors do not fit in 32 bits");
    }
  }
  return TupleColoring::from_function(
      x.size(), n, static_cast<unsigned>(vectors), [&](std::span<const std::size_t> t) {
        std::uint64_t code = 0, scale = 1;
        Element prefix = 0;
        for (unsigned j = 0; j < n; ++j) {
          prefix = j == 0 ? x[t[0]] : s.op(prefix, x[t[j]]);
          code += f(prefix) * scale;
          scale *= f.count();
        }
        return static_cast<unsigned>(code);
      });
}

std::vector<unsigned> decode_color_vector(std::uint64_t code, unsigned colors, unsigned n) {
  std::vector<unsigned> out(n);
  for (unsigned j = 0; j < n; ++j) {
    out[j] = static_cast<unsigned>(code % colors);
    code /= colors;
  }
  return out;
}

namespace {

class HomogeneousSearch {
 public:
  HomogeneousSearch(const TupleColoring& c, std::size_t target) : c_(c), target_(target) {}

  std::optional<std::vector<std::size_t>> branch(std::size_t first) const {
    std::vector<std::size_t> chosen;
    std::vector<std::size_t> scratch;
    int color = -1;
    if (!fits(chosen, first, color, scratch)) return std::nullopt;
    chosen.push_back(first);
    if (dfs(chosen, color, scratch)) return chosen;
    return std::nullopt;
  }

 private:
  // Checks every tuple that ends at v against `color`; fixes it if unset.
  bool fits(const std::vector<std::size_t>& chosen, std::size_t v, int& color,
            std::vector<std::size_t>& tuple) const {
    const unsigned k = c_.arity();
    if (chosen.size() + 1 < k) return true;
    std::vector<std::size_t> sub(k - 1);
    std::iota(sub.begin(), sub.end(), 0);
    tuple.resize(k);
    const std::size_t m = chosen.size();
    while (true) {
      for (unsigned i = 0; i + 1 < k; ++i) tuple[i] = chosen[sub[i]];
      tuple[k - 1] = v;
      const int col = static_cast<int>(c_.at(tuple));
      if (color < 0) {
        color = col;
      } else if (col != color) {
        return false;
      }
      std::size_t i = k - 1;
      while (i > 0 && sub[i - 1] == m - (k - 1) + (i - 1)) --i;
      if (i == 0) return true;
      ++sub[i - 1];
      for (std::size_t j = i; j + 1 < k; ++j) sub[j] = sub[j - 1] + 1;
    }
  }

  bool dfs(std::vector<std::size_t>& chosen, int color, std::vector<std::size_t>& tuple) const {
    if (chosen.size() == target_) return true;
    const std::size_t need = target_ - chosen.size();
    for (std::size_t v = chosen.back() + 1; v + need <= c_.ground(); ++v) {
      int next = color;
      if (!fits(chosen, v, next, tuple)) continue;
      chosen.push_back(v);
      if (dfs(chosen, next, tuple)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const TupleColoring& c_;
  std::size_t target_;
};

}  // namespace

std::optional<std::vector<std::size_t>> ramsey_homogeneous(const TupleColoring& coloring,
                                                           std::size_t target, ExecConfig exec) {
  const std::size_t n = coloring.ground();
  if (target > n) return std::nullopt;
  std::vector<std::size_t> prefix(target);
  std::iota(prefix.begin(), prefix.end(), 0);
  if (target < coloring.arity()) return prefix;

  HomogeneousSearch search(coloring, target);
  const std::size_t branches = n - target + 1;
  std::vector<std::optional<std::vector<std::size_t>>> found(branches);
  const int threads = resolve_threads(exec);
  if (threads <= 1) {
    for (std::size_t i = 0; i < branches; ++i) {
      if ((found[i] = search.branch(i))) return found[i];
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> first_hit{branches};
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(branches); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (ui > first_hit.load(std::memory_order_relaxed)) continue;
    found[ui] = search.branch(ui);
    if (found[ui]) {
      std::size_t cur = first_hit.load();
      while (ui < cur && !first_hit.compare_exchange_weak(cur, ui)) {
      }
    }
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace hindlab
