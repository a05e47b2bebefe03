// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hindlab/algebra.hpp"
#include "hindlab/cardinal.hpp"
#include "hindlab/cli.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/ordinals.hpp"
#include "hindlab/ramsey.hpp"
#include "hindlab/reduction.hpp"
#include "hindlab/replay.hpp"
#include "hindlab/search.hpp"
#include "oracles.hpp"
#include "replay_check.hpp"

using namespace hindlab;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  char time[32];
  std::snprintf(time, sizeof time, "%.2fs", secs);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " " << title << " ("
            << o.detail << "; " << time << ")" << std::endl;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

std::vector<std::uint64_t> members_of(unsigned mask) {
  std::vector<std::uint64_t> out;
  for (unsigned v = 1; v <= 8; ++v) {
    if (mask >> (v - 1) & 1) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 1. Finite sums and unions against subset enumeration.

Outcome operator_equivalence() {
  std::size_t checked = 0, mismatches = 0;
  std::string first;
  const auto wide = GroundStructure::int_add(64);
  const auto narrow = GroundStructure::int_add(9);
  const auto sets = GroundStructure::fin_unions(4);
  for (unsigned xmask = 0; xmask < 256; ++xmask) {
    if (__builtin_popcount(xmask) > 4) continue;
    const auto xs = members_of(xmask);
    const FinFamily fam{std::vector<Element>(xs.begin(), xs.end()), false};
    for (unsigned amask = 0; amask < 16; ++amask) {
      std::vector<unsigned> lengths;
      for (unsigned j = 1; j <= 4; ++j) {
        if (amask >> (j - 1) & 1) lengths.push_back(j);
      }
      const LengthSet a(lengths);
      auto note = [&](const char* what) {
        ++mismatches;
        if (first.empty()) first = std::string(what) + " X=" + std::to_string(xmask) + " A=" + std::to_string(amask);
      };

      const auto want = oracle::int_sums(xs, lengths, 64);
      const auto got = fs_over_lengths(wide, fam, a);
      if (std::vector<Element>(want.begin(), want.end()) != got.elements) note("fs");

      std::size_t dropped = 0;
      const auto want_narrow = oracle::int_sums(xs, lengths, 9, &dropped);
      const auto got_narrow = fs_over_lengths(narrow, fam, a, RangeMode::Skip);
      if (std::vector<Element>(want_narrow.begin(), want_narrow.end()) != got_narrow.elements) note("fs-skip");
      if (dropped != got_narrow.omitted) note("fs-omitted");

      // The same integers read as subsets of {0,1,2,3} (bit v-1 of v).
      const auto want_u = oracle::union_sums(xs, lengths);
      auto got_u = fu_over_lengths(4, fam, a);
      std::sort(got_u.begin(), got_u.end());
      if (std::vector<Element>(want_u.begin(), want_u.end()) != got_u) note("fu");
      auto got_fs_u = fs_over_lengths(sets, fam, a).elements;
      std::sort(got_fs_u.begin(), got_fs_u.end());
      if (got_fs_u != got_u) note("fs-on-unions");
      checked += 5;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " comparisons, " + std::to_string(mismatches) +
                               " mismatches" + (first.empty() ? "" : ", first " + first)};
}

// ---------------------------------------------------------------------------
// 2. Small exact values through the command line.

Outcome exact_numbers() {
  std::vector<std::string> problems;
  auto value = [&](const std::vector<std::string>& args) -> json {
    const auto r = cli_run(args);
    if (r.code != cli::kOk) {
      problems.push_back("exit " + std::to_string(r.code));
      return json::object();
    }
    return json::parse(r.out);
  };
  const auto ap3 = value({"numbers", "--pattern", "ap:3", "--colors", "2", "--format", "json"});
  const auto weak = value({"numbers", "--pattern", "schur", "--size", "2", "--colors", "2", "--confirm",
                           "--format", "json"});
  const auto ap2 = value({"numbers", "--pattern", "ap:2", "--colors", "2", "--format", "json"});

  const auto oracle_weak = oracle::least_forcing(
      2, 12, [](const std::vector<unsigned>& c) { return oracle::has_mono_sum_triple(c, true); });
  if (ap3.value("value", 0) != 9) problems.push_back("3-AP value " + ap3.value("value", json()).dump());
  if (!oracle_weak || weak.value("value", 0u) != *oracle_weak) problems.push_back("weak Schur disagrees with oracle");
  if (weak.value("value", 0) != 9) problems.push_back("weak Schur value " + weak.value("value", json()).dump());
  if (!weak.value("confirmed", false)) problems.push_back("exhaustive confirmation missing");
  if (ap2.value("value", 0) != 3) problems.push_back("2-AP value " + ap2.value("value", json()).dump());

  std::string detail = "3-AP " + ap3.value("value", json()).dump() + ", weak Schur " +
                       weak.value("value", json()).dump() + " (confirmed " +
                       weak.value("confirmed", json()).dump() + "), 2-AP " + ap2.value("value", json()).dump();
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

// ---------------------------------------------------------------------------
// 3. Homogeneous triples in every 2-coloring of the pairs of 6 points.

unsigned pair_bit(unsigned n, unsigned i, unsigned j) {
  unsigned idx = 0;
  for (unsigned a = 0; a < i; ++a) idx += n - 1 - a;
  return idx + (j - i - 1);
}

TupleColoring pairs_from_bits(unsigned n, std::uint32_t bits) {
  return TupleColoring::from_function(n, 2, 2, [&](std::span<const std::size_t> t) {
    return static_cast<unsigned>(bits >> pair_bit(n, static_cast<unsigned>(t[0]), static_cast<unsigned>(t[1])) & 1);
  });
}

Outcome ramsey_sanity() {
  std::size_t bad = 0;
  for (std::uint32_t bits = 0; bits < (1u << 15); ++bits) {
    const auto c = pairs_from_bits(6, bits);
    const auto h = ramsey_homogeneous(c, 3);
    if (!h || h->size() != 3) {
      ++bad;
      continue;
    }
    const auto& v = *h;
    const auto col = bits >> pair_bit(6, static_cast<unsigned>(v[0]), static_cast<unsigned>(v[1])) & 1;
    if ((bits >> pair_bit(6, static_cast<unsigned>(v[0]), static_cast<unsigned>(v[2])) & 1) != col ||
        (bits >> pair_bit(6, static_cast<unsigned>(v[1]), static_cast<unsigned>(v[2])) & 1) != col) {
      ++bad;
    }
  }
  // Pentagon edges {i, i+1 mod 5} in color 0, pentagram in color 1.
  std::uint32_t pentagon = 0;
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = i + 1; j < 5; ++j) {
      const bool edge = j - i == 1 || j - i == 4;
      if (!edge) pentagon |= 1u << pair_bit(5, i, j);
    }
  }
  const bool pentagon_none = !ramsey_homogeneous(pairs_from_bits(5, pentagon), 3).has_value();
  return {bad == 0 && pentagon_none, "32768 six-point colorings, " + std::to_string(bad) +
                                         " without a verified triple; pentagon " +
                                         (pentagon_none ? "NotFound" : "found a triple")};
}

// ---------------------------------------------------------------------------
// 4. Replay coherence on seeded colorings of IntAdd(60).

Outcome replay_coherence() {
  const auto s = GroundStructure::int_add(60);
  constexpr unsigned kSeeds = 100;
  constexpr std::size_t kSize = 2;
  unsigned successes = 0, violations = 0, rejected = 0;
  std::string first;
  for (unsigned seed = 0; seed < kSeeds; ++seed) {
    const Coloring f(s, ColoringSpec::seeded(seed, 2));
    const auto r = replay_progression_proof(s, f, 2, 1, kSize, SearchBudget{});
    if (r.status != SearchStatus::Found) continue;
    ++successes;
    const auto problem = replay_check::violation(s, f, *r.trace, *r.witness);
    if (!problem.empty()) {
      ++violations;
      if (first.empty()) first = "seed " + std::to_string(seed) + ": " + problem;
    }
    const auto v = verify_witness(s, f, *r.witness, kSize);
    if (!v.valid) {
      ++rejected;
      if (first.empty()) first = "seed " + std::to_string(seed) + ": " + v.violation;
    }
  }
  std::string detail = std::to_string(kSeeds) + " seeds, " + std::to_string(successes) + " successful replays, " +
                       std::to_string(violations) + " invariant violations, " + std::to_string(rejected) +
                       " rejected witnesses";
  if (!first.empty()) detail += ", first " + first;
  return {successes > 0 && violations == 0 && rejected == 0, detail};
}

// ---------------------------------------------------------------------------
// 5. Pair-coloring round trip and the parity invariant of the lift.

Outcome reduction_round_trip() {
  std::size_t runs = 0, counterexamples = 0, successes = 0;
  std::string first;
  auto check = [&](const PairColoring& d, const std::string& label) {
    const auto r = round_trip_check(d, 2, 8, 4, SearchBudget{});
    ++runs;
    if (r.outcome == RoundTripReport::Outcome::Success) ++successes;
    if (r.outcome == RoundTripReport::Outcome::Counterexample) {
      ++counterexamples;
      if (first.empty()) first = label + ": " + r.message;
    }
  };
  for (std::uint64_t seed = 0; seed < 200; ++seed) check(PairColoring::seeded(16, seed), "seed " + std::to_string(seed));
  for (unsigned n = 1; n <= 5; ++n) {
    const unsigned pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      check(PairColoring::from_bits(n, bits), std::to_string(n) + " points, bits " + std::to_string(bits));
    }
  }

  // Every unmeshed family of equal-size members in a universe of at most 8
  // points, every even b: no b-fold union is lifted to color 2.
  std::size_t unions = 0, parity_bad = 0;
  for (unsigned u = 1; u <= 8; ++u) {
    const std::array<PairColoring, 3> colorings{PairColoring::constant(u, 0), PairColoring::constant(u, 1),
                                                PairColoring::seeded(u, u)};
    std::vector<Element> family;
    std::function<void(unsigned)> grow = [&](unsigned from) {
      if (family.size() >= 2) {
        for (unsigned b = 2; b <= family.size(); b += 2) {
          for (auto x : fu_over_lengths(u, FinFamily{family, true}, LengthSet({b}))) {
            for (const auto& d : colorings) {
              ++unions;
              if (LiftedColoring(d)(x) == 2) ++parity_bad;
            }
          }
        }
      }
      // Next block: any nonempty subset of [from, u) whose minimum is `from`
      // or later, of the same size as the first block.
      for (unsigned lo = from; lo < u; ++lo) {
        for (Element rest = 0; rest < (Element{1} << (u - lo - 1)); ++rest) {
          const Element block = (Element{1} << lo) | (rest << (lo + 1));
          if (!family.empty() && set_size(block) != set_size(family.front())) continue;
          family.push_back(block);
          grow(set_max(block) + 1);
          family.pop_back();
        }
      }
    };
    grow(0);
  }
  std::string detail = std::to_string(runs) + " round trips, " + std::to_string(successes) + " successes, " +
                       std::to_string(counterexamples) + " counterexamples; " + std::to_string(unions) +
                       " even unions, " + std::to_string(parity_bad) + " lifted to color 2";
  if (!first.empty()) detail += ", first " + first;
  return {counterexamples == 0 && parity_bad == 0, detail};
}

// ---------------------------------------------------------------------------
// Independent model of ordinals below w^3 as (w^2 coefficient, w coefficient,
// finite part), with the fundamental sequences and largeness recursion spelled
// out directly.

struct Small {
  std::uint64_t a = 0, b = 0, c = 0;
};

Ordinal to_ordinal(const Small& o) {
  std::vector<Ordinal::Term> terms;
  if (o.a) terms.push_back({Ordinal::nat(2), o.a});
  if (o.b) terms.push_back({Ordinal::nat(1), o.b});
  if (o.c) terms.push_back({Ordinal::nat(0), o.c});
  return Ordinal::from_terms(std::move(terms));
}

bool small_large(const std::vector<unsigned>& set, std::size_t pos, Small o) {
  while (true) {
    if (o.a == 0 && o.b == 0 && o.c == 0) return true;
    if (pos == set.size()) return false;
    const unsigned m = set[pos];
    if (o.c > 0) {
      --o.c;
      ++pos;
    } else if (o.b > 0) {
      --o.b;
      o.c = m;
    } else {
      --o.a;
      o.b = m;
    }
  }
}

std::vector<unsigned> subset_of(std::uint32_t mask, unsigned top) {
  std::vector<unsigned> out;
  for (unsigned v = 1; v <= top; ++v) {
    if (mask >> (v - 1) & 1) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 6. Every 2-partition of an w*3-large subset of [1,14] has an w-large piece.

Outcome partition_desk_check() {
  const Ordinal beta = Ordinal::nat(1);
  std::size_t large_sets = 0, partitions = 0, counterexamples = 0, model_mismatch = 0;
  std::string first;
  for (std::uint32_t mask = 1; mask < (1u << 14); ++mask) {
    const auto set = subset_of(mask, 14);
    const bool large = is_alpha_large(set, mul_nat(Ordinal::omega(), 3));
    if (large != small_large(set, 0, Small{0, 3, 0})) ++model_mismatch;
    if (!large) continue;
    ++large_sets;
    const unsigned n = static_cast<unsigned>(set.size());
    for (std::uint32_t split = 0; split < (1u << n); ++split) {
      std::vector<IntSet> pieces(2);
      for (unsigned i = 0; i < n; ++i) pieces[split >> i & 1].push_back(set[i]);
      ++partitions;
      const auto r = partition_large_piece(set, pieces, beta);
      if (!r.index) {
        ++counterexamples;
        if (first.empty()) first = r.counterexample;
      }
    }
  }
  std::string detail = std::to_string(large_sets) + " w*3-large sets, " + std::to_string(partitions) +
                       " partitions, " + std::to_string(counterexamples) + " counterexamples, " +
                       std::to_string(model_mismatch) + " largeness disagreements with the triple model";
  if (!first.empty()) detail += ", first " + first;
  return {large_sets > 0 && counterexamples == 0 && model_mismatch == 0, detail};
}

// ---------------------------------------------------------------------------
// 7. Antitonicity of largeness in alpha, fundamental sequences on the grid.

Outcome ordinal_engine() {
  std::vector<Small> grid;
  for (std::uint64_t a = 0; a <= 2; ++a) {
    for (std::uint64_t b = 0; b <= 4; ++b) {
      for (std::uint64_t c = 0; c <= 4; ++c) grid.push_back({a, b, c});
    }
  }
  std::vector<Ordinal> ords;
  for (const auto& g : grid) ords.push_back(to_ordinal(g));

  std::size_t pairs = 0, violations = 0, model_mismatch = 0;
  std::string first;
  std::vector<char> large(ords.size());
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    const auto set = subset_of(mask, 12);
    for (std::size_t i = 0; i < ords.size(); ++i) {
      large[i] = is_alpha_large(set, ords[i]);
      if (static_cast<bool>(large[i]) != small_large(set, 0, grid[i])) ++model_mismatch;
    }
    for (std::size_t lo = 0; lo < ords.size(); ++lo) {
      for (std::size_t hi = 0; hi < ords.size(); ++hi) {
        if (ords[hi] < ords[lo]) continue;
        ++pairs;
        if (large[hi] && !large[lo]) {
          ++violations;
          if (first.empty()) {
            std::string s = "{";
            for (std::size_t k = 0; k < set.size(); ++k) s += (k ? "," : "") + std::to_string(set[k]);
            first = s + "} is " + to_string(ords[hi]) + "-large but not " + to_string(ords[lo]) + "-large";
          }
        }
      }
    }
  }

  std::size_t seq_checks = 0, seq_bad = 0;
  for (const auto& l : ords) {
    if (!l.is_limit()) continue;
    for (std::uint64_t n = 0; n <= 12; ++n) {
      const auto x = fundamental_sequence(l, n), y = fundamental_sequence(l, n + 1);
      ++seq_checks;
      if (!(x < l) || !(x < y) || !x.well_formed()) ++seq_bad;
    }
  }
  std::string detail = std::to_string(pairs) + " (set, alpha <= alpha') checks, " + std::to_string(violations) +
                       " antitonicity violations, " + std::to_string(model_mismatch) +
                       " disagreements with the triple model; " + std::to_string(seq_checks) +
                       " fundamental-sequence checks, " + std::to_string(seq_bad) + " bad";
  if (!first.empty()) detail += "; first: " + first;
  return {violations == 0 && model_mismatch == 0 && seq_bad == 0, detail};
}

// ---------------------------------------------------------------------------
// 8. Composed bounds, the 2^lambda consistency check, normalization.

CardExpr random_expr(std::mt19937_64& rng, int depth) {
  const auto pick = depth <= 1 ? rng() % 2 : rng() % 4;
  switch (pick) {
    case 0:
      return CardExpr::aleph(static_cast<unsigned>(rng() % 4));
    case 1:
      return CardExpr::var(rng() % 2 ? "lam" : "mu");
    case 2:
      return CardExpr::succ(random_expr(rng, depth - 1));
    default:
      return CardExpr::beth(static_cast<unsigned>(rng() % 4), random_expr(rng, depth - 1));
  }
}

Outcome symbolic_bounds() {
  const auto lam = CardExpr::var("lam");
  const auto oracle = default_finite_oracle(32);
  std::vector<std::string> problems;

  const auto vdw = theorem_bound({BoundTheorem::Kind::VanDerWaerden, 2, 1}, lam, oracle);
  if (vdw.n != std::optional<unsigned>(3) || !vdw.bound ||
      !(*vdw.bound == CardExpr::succ(CardExpr::beth(2, lam)))) {
    problems.push_back("vdw(2,1) gave " + vdw.text);
  }

  // Every numeric theorem_bound output the test suites produce.
  const std::vector<BoundTheorem> produced{
      {BoundTheorem::Kind::VanDerWaerden, 2, 1}, {BoundTheorem::Kind::VanDerWaerden, 1, 1},
      {BoundTheorem::Kind::VanDerWaerden, 1, 2}, {BoundTheorem::Kind::VanDerWaerden, 1, 3},
      {BoundTheorem::Kind::VanDerWaerden, 1, 4}, {BoundTheorem::Kind::VanDerWaerden, 2, 2},
      {BoundTheorem::Kind::VanDerWaerden, 3, 1}, {BoundTheorem::Kind::Schur, 1, 1},
      {BoundTheorem::Kind::Schur, 2, 1},         {BoundTheorem::Kind::Folkman, 2, 1},
      {BoundTheorem::Kind::Folkman, 2, 2},       {BoundTheorem::Kind::Folkman, 1, 3},
  };
  std::size_t gt = 0;
  for (const auto& t : produced) {
    const auto r = theorem_bound(t, lam, oracle);
    if (!r.bound) {
      problems.push_back(t.describe() + " stayed symbolic: " + r.text);
      continue;
    }
    const auto c = lower_bound_consistency(lam, *r.bound);
    if (c.verdict == Verdict::GT) {
      ++gt;
    } else {
      problems.push_back(t.describe() + " bound " + r.text + " is " + to_string(c.verdict) + " 2^lam");
    }
  }

  std::mt19937_64 rng(20240601);
  std::size_t not_idempotent = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto e = random_expr(rng, 1 + static_cast<int>(rng() % 5));
    const auto n = normalize(e);
    if (!(normalize(n) == n)) ++not_idempotent;
  }
  if (not_idempotent) problems.push_back(std::to_string(not_idempotent) + " non-idempotent normalizations");

  std::string detail = "vdw(2,1) n=" + (vdw.n ? std::to_string(*vdw.n) : std::string("?")) + " bound " + vdw.text +
                       "; " + std::to_string(gt) + "/" + std::to_string(produced.size()) +
                       " bounds GT 2^lam; 10000 normalizations, " + std::to_string(not_idempotent) +
                       " not idempotent";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

// ---------------------------------------------------------------------------
// 9. Certificates do not depend on the worker count.

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"search", "--structure", "int-add:60", "--coloring", "seeded:5:2", "--pattern", "schur", "--size", "3"},
      {"search", "--structure", "int-add:120", "--coloring", "seeded:9:3", "--pattern", "ap:3", "--size", "3"},
      {"search", "--structure", "fin-unions:7", "--coloring", "seeded:2:2", "--pattern", "folkman:2", "--size", "3",
       "--block"},
      {"search", "--structure", "int-add:40", "--coloring", "mod:3", "--pattern", "schur", "--size", "4"},
      {"search", "--structure", "int-add:30", "--coloring", "seeded:4:2", "--pattern", "schur", "--size", "3",
       "--max-candidates", "40"},
      {"replay", "--structure", "int-add:60", "--coloring", "seeded:1:2", "--d", "1", "--size", "2"},
      {"replay", "--structure", "int-add:60", "--coloring", "seeded:3:2", "--d", "1", "--size", "2"},
      {"replay", "--structure", "fin-unions:8", "--coloring", "seeded:6:2", "--d", "1", "--size", "2"},
  };
  std::size_t runs = 0, differing = 0;
  std::string first;
  for (auto cmd : commands) {
    cmd.insert(cmd.end(), {"--format", "json"});
    std::string reference;
    for (const char* threads : {"1", "2", "3", "4", "8", "1"}) {
      auto args = cmd;
      args.insert(args.end(), {"--threads", threads});
      const auto r = cli_run(args);
      ++runs;
      if (reference.empty()) {
        reference = r.out;
      } else if (r.out != reference) {
        ++differing;
        if (first.empty()) first = cmd[0] + " " + cmd[2] + " with " + threads + " threads";
      }
    }
  }
  std::string detail = std::to_string(runs) + " runs of " + std::to_string(commands.size()) + " commands, " +
                       std::to_string(differing) + " differing certificates";
  if (!first.empty()) detail += ", first " + first;
  return {differing == 0, detail};
}

}  // namespace

int main() {
  report(1, "fs/fu agree with subset enumeration", operator_equivalence);
  report(2, "exact small numbers via `numbers`", exact_numbers);
  report(3, "finite Ramsey sanity", ramsey_sanity);
  report(4, "progression replay coherence", replay_coherence);
  report(5, "pair-coloring round trip and lift parity", reduction_round_trip);
  report(6, "w*3-large partitions have an w-large piece", partition_desk_check);
  report(7, "largeness antitone in alpha, fundamental sequences", ordinal_engine);
  report(8, "symbolic bounds", symbolic_bounds);
  report(9, "certificates independent of worker count", determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
