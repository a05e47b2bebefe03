#include "hindlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hindlab/cardinal.hpp"
#include "hindlab/error.hpp"
#include "hindlab/io.hpp"
#include "hindlab/numbers.hpp"
#include "hindlab/ordinals.hpp"
#include "hindlab/reduction.hpp"
#include "hindlab/replay.hpp"
#include "hindlab/search.hpp"

namespace hindlab::cli {

namespace {

using io::json;

struct Common {
  std::string format = "text";
  int threads = 0;
};

struct BudgetFlags {
  std::optional<std::uint64_t> max_candidates;
  std::optional<std::uint64_t> max_ground;
  std::optional<unsigned> max_a, max_b;
  std::optional<std::int64_t> time_limit_ms;

  SearchBudget apply(SearchBudget b) const {
    if (max_candidates) b.max_candidates = *max_candidates;
    if (max_ground) b.max_ground_elements = *max_ground;
    if (max_a) b.max_a = *max_a;
    if (max_b) b.max_b = *max_b;
    if (time_limit_ms) b.time_limit = std::chrono::milliseconds(*time_limit_ms);
    return b;
  }
};

void add_common(CLI::App* sub, Common& c, bool threads) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  if (threads) sub->add_option("--threads", c.threads, "Worker threads (0: environment default)");
}

void add_budget(CLI::App* sub, BudgetFlags& b) {
  sub->add_option("--max-candidates", b.max_candidates, "Extension attempts before giving up");
  sub->add_option("--max-ground", b.max_ground, "Ground elements considered");
  sub->add_option("--max-a", b.max_a, "Largest leading pattern parameter");
  sub->add_option("--max-b", b.max_b, "Largest second pattern parameter");
  sub->add_option("--time-limit-ms", b.time_limit_ms, "Wall-clock limit (makes results timing dependent)");
}

std::string join(const std::vector<unsigned>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_elements(const GroundStructure& s, std::span<const Element> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += " ";
    out += s.format(xs[i]);
  }
  return out;
}

void emit(std::ostream& out, const Common& c, const json& doc, const std::string& text) {
  if (c.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << doc.dump(2) << "\n";
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return kOk;
    case SearchStatus::NotFound:
      return kNegative;
    case SearchStatus::BudgetExhausted:
      return kBudget;
  }
  return kNegative;
}

bool pattern_in_family(const PatternFamily& f, const LengthPattern& p) {
  switch (f.kind) {
    case PatternFamily::Kind::Schur: {
      const auto* s = std::get_if<SchurLengths>(&p);
      return s && s->a <= s->b;
    }
    case PatternFamily::Kind::Progression: {
      const auto* s = std::get_if<ProgressionLengths>(&p);
      return s && s->d == f.d;
    }
    case PatternFamily::Kind::Folkman: {
      const auto* s = std::get_if<FolkmanLengths>(&p);
      return s && s->generators.size() == f.d;
    }
    case PatternFamily::Kind::Fixed:
      return describe(p) == describe(f.fixed);
  }
  return false;
}

std::string witness_text(const GroundStructure& s, const Witness& w) {
  std::ostringstream t;
  t << "pattern: " << describe(w.pattern) << "\n"
    << "lengths: " << join(w.lengths.values()) << "\n"
    << "color: " << w.color << "\n"
    << "family: " << format_elements(s, w.family.members) << "\n";
  if (w.block) t << "block: yes\n";
  return t.str();
}

// ---- fs ------------------------------------------------------------------

struct FsArgs {
  Common common;
  std::string structure, set, lengths;
  bool skip = false;
};

std::vector<Element> parse_elements(const GroundStructure& s, const std::string& text) {
  std::vector<Element> out;
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("bad element list: ") + e.what(), e.byte);
    }
    for (const auto& e : j) out.push_back(io::element_from_json(s, e));
  } else {
    if (s.kind() == StructureKind::FinUnions) throw ParseError("sets need JSON syntax: [[0,1],[4]]", 0);
    for (unsigned v : io::parse_uint_list(text)) {
      s.check(v);
      out.push_back(v);
    }
  }
  return out;
}

int run_fs(const FsArgs& a, std::ostream& out) {
  const auto s = io::parse_structure(a.structure);
  FinFamily x{parse_elements(s, a.set), false};
  const LengthSet lengths(io::parse_uint_list(a.lengths));
  const auto sums = fs_over_lengths(s, x, lengths, a.skip ? RangeMode::Skip : RangeMode::Strict);
  json elements = json::array();
  for (Element e : sums.elements) elements.push_back(io::element_to_json(s, e));
  json doc = {{"structure", io::structure_to_json(s)},
              {"lengths", lengths.values()},
              {"sums", elements},
              {"omitted", sums.omitted}};
  std::ostringstream t;
  t << "sums (" << sums.elements.size() << "): " << format_elements(s, sums.elements) << "\n";
  if (a.skip) t << "omitted out-of-range: " << sums.omitted << "\n";
  if (s.kind() == StructureKind::FinUnions) {
    std::vector<Element> sorted = x.members;
    const bool unmeshed = is_unmeshed(sorted);
    doc["unmeshed"] = unmeshed;
    t << "unmeshed: " << (unmeshed ? "yes" : "no") << "\n";
  }
  emit(out, a.common, doc, t.str());
  return kOk;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  Common common;
  BudgetFlags budget;
  std::string instance, structure, coloring, pattern, out;
  std::size_t size = 0;
  bool block = false;
};

io::Instance search_instance(const SearchArgs& a) {
  if (!a.instance.empty()) {
    auto inst = io::instance_from_json(io::read_json_file(a.instance));
    if (!inst.family) throw Error("instance has no pattern");
    inst.budget = a.budget.apply(inst.budget);
    return inst;
  }
  if (a.structure.empty() || a.coloring.empty() || a.pattern.empty() || a.size == 0) {
    throw CLI::ValidationError("search needs --instance or --structure, --coloring, --pattern and --size");
  }
  io::Instance inst;
  inst.structure = io::parse_structure(a.structure);
  inst.coloring = io::parse_coloring(a.coloring);
  inst.family = io::parse_pattern_family(a.pattern);
  inst.size = a.size;
  inst.block = a.block;
  inst.budget = a.budget.apply(SearchBudget{});
  return inst;
}

int run_search(const SearchArgs& a, std::ostream& out) {
  const auto inst = search_instance(a);
  if (inst.block && inst.structure.kind() != StructureKind::FinUnions) {
    throw Error("--block needs a fin-unions structure");
  }
  const Coloring f(inst.structure, inst.coloring);
  const auto r = find_witness(inst.structure, f, *inst.family, inst.size, inst.budget, inst.block,
                              ExecConfig{a.common.threads});
  const json instance = io::instance_to_json(inst);
  json cert = io::make_certificate("search", instance, to_string(r.status));
  if (r.witness) cert["witness"] = io::witness_to_json(inst.structure, *r.witness);
  cert["candidates"] = r.candidates;
  if (!a.out.empty()) write_file(a.out, cert);

  std::ostringstream t;
  t << "outcome: " << to_string(r.status) << "\n";
  if (r.witness) t << witness_text(inst.structure, *r.witness);
  t << "candidates: " << r.candidates << "\n";
  emit(out, a.common, cert, t.str());
  return status_code(r.status);
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string certificate, instance;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const json cert = io::read_json_file(a.certificate);
  json doc = {{"certificate", a.certificate}};
  auto finish = [&](bool valid, const std::string& violation, const std::string& note) {
    doc["valid"] = valid;
    doc["violation"] = violation;
    doc["note"] = note;
    std::ostringstream t;
    t << (valid ? "valid" : "invalid");
    if (!violation.empty()) t << ": " << violation;
    t << "\n";
    if (!note.empty()) t << "note: " << note << "\n";
    emit(out, a.common, doc, t.str());
    return valid ? kOk : kNegative;
  };

  const json embedded = cert.at("instance");
  if (io::digest(embedded) != cert.value("instanceDigest", "")) {
    return finish(false, "instance digest mismatch", "");
  }
  json instance_doc = embedded;
  if (!a.instance.empty()) {
    // A search instance as written by hand may omit defaults; compare canonical forms.
    instance_doc = io::instance_to_json(io::instance_from_json(io::read_json_file(a.instance)));
    if (io::digest(instance_doc) != io::digest(io::instance_to_json(io::instance_from_json(embedded)))) {
      return finish(false, "certificate was issued for a different instance", "");
    }
  }
  const auto inst = io::instance_from_json(instance_doc);
  const auto outcome = cert.value("outcome", "");
  if (outcome != "witness" || !cert.contains("witness") || cert.at("witness").is_null()) {
    return finish(false, "no witness to verify (outcome " + outcome + ")", "");
  }
  Witness w;
  try {
    w = io::witness_from_json(inst.structure, cert.at("witness"));
  } catch (const Error& e) {
    return finish(false, e.what(), "");
  }
  if (inst.family && !pattern_in_family(*inst.family, w.pattern)) {
    return finish(false, "pattern " + describe(w.pattern) + " is not in family " + inst.family->describe(),
                  "");
  }
  if (inst.d) {
    const auto* p = std::get_if<ProgressionLengths>(&w.pattern);
    if (!p || p->d != *inst.d) return finish(false, "pattern is not a progression with the instance's d", "");
  }
  if (inst.block && !w.block) return finish(false, "instance requires a block family", "");
  const Coloring f(inst.structure, inst.coloring);
  const auto report = verify_witness(inst.structure, f, w, inst.size);
  return finish(report.valid, report.violation, report.note);
}

// ---- replay ----------------------------------------------------------------

struct ReplayArgs {
  Common common;
  BudgetFlags budget;
  std::string instance, structure, coloring, out;
  unsigned d = 0;
  std::size_t size = 0;
};

int run_replay(const ReplayArgs& a, std::ostream& out) {
  io::Instance inst;
  if (!a.instance.empty()) {
    inst = io::instance_from_json(io::read_json_file(a.instance));
    if (!inst.d) throw Error("instance has no d");
    inst.budget = a.budget.apply(inst.budget);
  } else {
    if (a.structure.empty() || a.coloring.empty() || a.d == 0 || a.size == 0) {
      throw CLI::ValidationError("replay needs --instance or --structure, --coloring, --d and --size");
    }
    inst.structure = io::parse_structure(a.structure);
    inst.coloring = io::parse_coloring(a.coloring);
    inst.d = a.d;
    inst.size = a.size;
    inst.budget = a.budget.apply(SearchBudget{});
  }
  const Coloring f(inst.structure, inst.coloring);
  const auto r = replay_progression_proof(inst.structure, f, f.count(), *inst.d, inst.size,
                                          inst.budget, ExecConfig{a.common.threads});
  json cert = io::make_certificate("replay", io::instance_to_json(inst), to_string(r.status));
  if (r.witness) cert["witness"] = io::witness_to_json(inst.structure, *r.witness);
  if (r.trace) cert["trace"] = io::trace_to_json(inst.structure, *r.trace);
  cert["reason"] = r.reason;
  if (!a.out.empty()) write_file(a.out, cert);

  std::ostringstream t;
  t << "outcome: " << to_string(r.status) << "\n";
  if (!r.reason.empty()) t << "reason: " << r.reason << "\n";
  if (r.trace) {
    t << "n: " << r.trace->n << "\n" << "ground: " << r.trace->ground.size() << " elements\n";
  }
  if (r.trace && !r.trace->homogeneous.empty()) {
    t << "homogeneous: " << format_elements(inst.structure, r.trace->homogeneous) << "\n"
      << "induced colors: " << join(r.trace->induced, " ") << "\n"
      << "progression: a=" << r.trace->a << " b=" << r.trace->b << " d=" << r.trace->d << "\n";
  }
  if (r.witness) t << witness_text(inst.structure, *r.witness);
  emit(out, a.common, cert, t.str());
  return status_code(r.status);
}

// ---- reduce ----------------------------------------------------------------

struct ReduceArgs {
  Common common;
  BudgetFlags budget;
  unsigned points = 6;
  std::optional<std::uint64_t> seed;
  std::string bits;
  std::optional<unsigned> constant;
  unsigned b_min = 2, b_max = 8;
  std::size_t family_size = 4;
};

int run_reduce(const ReduceArgs& a, std::ostream& out) {
  const int sources = (a.seed ? 1 : 0) + (a.bits.empty() ? 0 : 1) + (a.constant ? 1 : 0);
  if (sources != 1) throw CLI::ValidationError("give exactly one of --seed, --pairs, --constant");
  std::optional<PairColoring> d;
  if (a.seed) d = PairColoring::seeded(a.points, *a.seed);
  if (a.constant) d = PairColoring::constant(a.points, *a.constant);
  if (!a.bits.empty()) {
    std::vector<unsigned> colors;
    for (char ch : a.bits) {
      if (ch != '0' && ch != '1') throw ParseError("--pairs takes a string of 0 and 1", colors.size());
      colors.push_back(static_cast<unsigned>(ch - '0'));
    }
    d = PairColoring(a.points, std::move(colors));
  }
  const auto report = round_trip_check(*d, a.b_min, a.b_max, a.family_size, a.budget.apply(SearchBudget{}),
                                       ExecConfig{a.common.threads});
  const auto s = GroundStructure::fin_unions(a.points);
  json doc = {{"points", a.points},
              {"pairColors", d->colors()},
              {"outcome", to_string(report.outcome)},
              {"b", report.b},
              {"message", report.message},
              {"witness", nullptr},
              {"extraction", nullptr}};
  std::ostringstream t;
  t << "outcome: " << to_string(report.outcome) << "\n" << "message: " << report.message << "\n";
  if (report.witness) {
    doc["witness"] = io::witness_to_json(s, *report.witness);
    t << "b: " << report.b << "\n" << witness_text(s, *report.witness);
  }
  if (report.extraction) {
    json blocks = json::array();
    for (Element x : report.extraction->blocks) blocks.push_back(io::element_to_json(s, x));
    doc["extraction"] = {{"blocks", blocks},
                         {"points", report.extraction->points},
                         {"color", report.extraction->color}};
    t << "blocks: " << format_elements(s, report.extraction->blocks) << "\n"
      << "points: " << join(report.extraction->points, " ") << "\n"
      << "pair color: " << report.extraction->color << "\n";
  }
  emit(out, a.common, doc, t.str());
  switch (report.outcome) {
    case RoundTripReport::Outcome::Success:
      return kOk;
    case RoundTripReport::Outcome::BudgetExhausted:
      return kBudget;
    default:
      return kNegative;
  }
}

// ---- large -----------------------------------------------------------------

struct LargeArgs {
  Common common;
  std::string set, alpha, beta, pieces;
  unsigned min = 1, bound = 64;
};

int run_large_check(const LargeArgs& a, std::ostream& out) {
  const IntSet set = io::parse_uint_list(a.set);
  validate_int_set(set);
  const Ordinal alpha = parse_ordinal(a.alpha);
  const bool large = is_alpha_large(set, alpha);
  json doc = {{"set", set}, {"alpha", to_string(alpha)}, {"large", large}};
  emit(out, a.common, doc,
       "{" + join(set) + "} is " + (large ? "" : "not ") + to_string(alpha) + "-large\n");
  return large ? kOk : kNegative;
}

int run_large_find(const LargeArgs& a, std::ostream& out) {
  const Ordinal beta = parse_ordinal(a.beta);
  const auto set = large_length_set(beta, a.min, a.bound);
  json doc = {{"beta", to_string(beta)}, {"min", a.min}, {"bound", a.bound}, {"set", nullptr}};
  if (set) doc["set"] = *set;
  emit(out, a.common, doc,
       set ? "{" + join(*set) + "}\n"
           : "no w^" + to_string(beta) + "-large set within [" + std::to_string(a.min) + ", " +
                 std::to_string(a.bound) + "]\n");
  return set ? kOk : kNegative;
}

int run_large_partition(const LargeArgs& a, std::ostream& out) {
  const IntSet set = io::parse_uint_list(a.set);
  std::vector<IntSet> pieces;
  std::string_view rest = a.pieces;
  while (true) {
    const auto at = rest.find(';');
    pieces.push_back(io::parse_uint_list(rest.substr(0, at)));
    if (at == std::string_view::npos) break;
    rest = rest.substr(at + 1);
  }
  const Ordinal beta = parse_ordinal(a.beta);
  const auto r = partition_large_piece(set, pieces, beta);
  json doc = {{"set", set}, {"beta", to_string(beta)}, {"piece", nullptr}, {"counterexample", nullptr}};
  std::string text;
  if (r.index) {
    doc["piece"] = *r.index;
    text = "piece " + std::to_string(*r.index) + " {" + join(pieces[*r.index]) + "} is w^" +
           to_string(beta) + "-large\n";
  } else {
    doc["counterexample"] = r.counterexample;
    text = "counterexample: " + r.counterexample + "\n";
  }
  emit(out, a.common, doc, text);
  return r.index ? kOk : kNegative;
}

// ---- numbers ---------------------------------------------------------------

struct NumbersArgs {
  Common common;
  std::string pattern;
  unsigned colors = 2, cap = 32;
  std::size_t size = 0;
  bool confirm = false;
};

int run_numbers(const NumbersArgs& a, std::ostream& out) {
  UniversalTarget target;
  if (a.pattern == "sum-triple") {
    target = UniversalTarget::sum_triple();
  } else if (a.pattern.rfind("ap:", 0) == 0 && a.size == 0) {
    const auto terms = io::parse_uint_list(a.pattern.substr(3));
    if (terms.size() != 1 || terms[0] == 0) throw ParseError("ap:k needs k >= 1", 3);
    target = UniversalTarget::progression(terms[0]);
  } else {
    if (a.size == 0) throw CLI::ValidationError("pattern families need --size");
    target = UniversalTarget::of_family(io::parse_pattern_family(a.pattern), a.size);
  }
  const auto r = min_universal_n(target, a.colors, a.cap, ExecConfig{a.common.threads});
  json doc = {{"target", target.describe()},
              {"colors", a.colors},
              {"cap", a.cap},
              {"capExceeded", r.cap_exceeded},
              {"value", nullptr},
              {"extremal", r.extremal}};
  std::ostringstream t;
  t << "target: " << target.describe() << ", " << a.colors << " colors\n";
  if (r.cap_exceeded) {
    t << "value: exceeds cap " << a.cap << "\n";
  } else {
    doc["value"] = r.n;
    t << "value: " << r.n << "\n";
    if (r.n > 1) t << "extremal coloring of [1," << r.n - 1 << "]: " << join(r.extremal, "") << "\n";
  }
  int code = r.cap_exceeded ? kBudget : kOk;
  if (a.confirm) {
    const auto check = reference::min_universal_n(target, a.colors, a.cap);
    const bool agree = check.cap_exceeded == r.cap_exceeded && (r.cap_exceeded || check.n == r.n);
    doc["confirmed"] = agree;
    t << "exhaustive confirmation: " << (agree ? "agrees" : "DISAGREES") << "\n";
    if (!agree) code = kNegative;
  }
  emit(out, a.common, doc, t.str());
  return code;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsArgs {
  Common common;
  std::string theorem = "vdw", lambda = "lam";
  unsigned colors = 2, d = 1, cap = 32;
  std::string lhs, rhs, expr, kappa;
  unsigned n = 1;
};

json chain_json(const std::vector<std::string>& chain) { return chain; }

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  BoundTheorem th;
  if (a.theorem == "vdw") {
    th.kind = BoundTheorem::Kind::VanDerWaerden;
  } else if (a.theorem == "folkman") {
    th.kind = BoundTheorem::Kind::Folkman;
  } else {
    th.kind = BoundTheorem::Kind::Schur;
  }
  th.colors = a.colors;
  th.d = a.d;
  const CardExpr lambda = normalize(parse_card_expr(a.lambda));
  const auto tb = theorem_bound(th, lambda, default_finite_oracle(a.cap));
  json doc = {{"theorem", th.describe()},
              {"lambda", to_string(lambda)},
              {"n", nullptr},
              {"bound", tb.text},
              {"consistency", nullptr}};
  std::ostringstream t;
  t << "theorem: " << th.describe() << "\n";
  if (!tb.n) {
    t << "n: " << th.finite_symbol() << " (exceeds cap " << a.cap << ")\n"
      << "bound: " << tb.text << "\n";
    emit(out, a.common, doc, t.str());
    return kBudget;
  }
  doc["n"] = *tb.n;
  const auto rep = lower_bound_consistency(lambda, *tb.bound);
  doc["consistency"] = {{"status", to_string(rep.status)},
                        {"verdict", to_string(rep.verdict)},
                        {"chain", chain_json(rep.chain)}};
  t << "n: " << *tb.n << "\n"
    << "bound: " << tb.text << "\n"
    << "versus 2^" << to_string(lambda) << ": " << to_string(rep.verdict) << " ("
    << to_string(rep.status) << ")\n";
  for (const auto& step : rep.chain) t << "  " << step << "\n";
  emit(out, a.common, doc, t.str());
  return rep.status == ConsistencyReport::Status::Consistent ? kOk : kNegative;
}

int run_cmp(const BoundsArgs& a, std::ostream& out) {
  const CardExpr x = normalize(parse_card_expr(a.lhs));
  const CardExpr y = normalize(parse_card_expr(a.rhs));
  std::vector<std::string> chain;
  const Verdict v = cmp_provable(x, y, &chain);
  json doc = {{"lhs", to_string(x)}, {"rhs", to_string(y)}, {"verdict", to_string(v)}, {"chain", chain}};
  std::string text = to_string(x) + " vs " + to_string(y) + ": " + to_string(v) + "\n";
  for (const auto& step : chain) text += "  " + step + "\n";
  emit(out, a.common, doc, text);
  return kOk;
}

int run_erdos_rado(const BoundsArgs& a, std::ostream& out) {
  const auto stmt = erdos_rado_instance(parse_card_expr(a.kappa), a.n);
  json doc = {{"source", to_string(stmt.source)},
              {"target", to_string(stmt.target)},
              {"exponent", stmt.exponent},
              {"colors", stmt.colors}};
  emit(out, a.common, doc, to_string(stmt) + "\n");
  return kOk;
}

int run_normalize(const BoundsArgs& a, std::ostream& out) {
  const CardExpr e = normalize(parse_card_expr(a.expr));
  emit(out, a.common, json{{"normal", to_string(e)}}, to_string(e) + "\n");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite partition-theorem laboratory", "hindlab"};
  app.require_subcommand(1);
#ifdef HINDLAB_VERSION
  app.set_version_flag("--version", std::string(HINDLAB_VERSION));
#endif

  FsArgs fs;
  auto* fs_cmd = app.add_subcommand("fs", "Sums of j distinct elements for j in a length set");
  add_common(fs_cmd, fs.common, false);
  fs_cmd->add_option("--structure", fs.structure, "int-add:N or fin-unions:U")->required();
  fs_cmd->add_option("--set", fs.set, "Elements: 1,2,4 or JSON such as [[0,1],[4]]")->required();
  fs_cmd->add_option("--lengths", fs.lengths, "Length set, e.g. 1,2")->required();
  fs_cmd->add_flag("--skip-out-of-range", fs.skip, "Drop sums beyond an int-add limit");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Find the least monochromatic witness");
  add_common(search_cmd, search.common, true);
  add_budget(search_cmd, search.budget);
  search_cmd->add_option("--instance", search.instance, "Instance JSON file");
  search_cmd->add_option("--structure", search.structure, "int-add:N or fin-unions:U");
  search_cmd->add_option("--coloring", search.coloring, "const:c, parity, mod:k, seeded:seed:c, explicit:...");
  search_cmd->add_option("--pattern", search.pattern, "schur, ap:k, folkman:d, or a fixed pattern");
  search_cmd->add_option("--size", search.size, "Family size m");
  search_cmd->add_flag("--block", search.block, "Require an unmeshed family");
  search_cmd->add_option("--out", search.out, "Also write the certificate here");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check a witness certificate");
  add_common(verify_cmd, verify.common, false);
  verify_cmd->add_option("--certificate", verify.certificate, "Certificate JSON file")->required();
  verify_cmd->add_option("--instance", verify.instance, "Instance the certificate must match");

  ReplayArgs replay;
  auto* replay_cmd = app.add_subcommand("replay", "Build a progression witness via Ramsey and van der Waerden");
  add_common(replay_cmd, replay.common, true);
  add_budget(replay_cmd, replay.budget);
  replay_cmd->add_option("--instance", replay.instance, "Instance JSON file");
  replay_cmd->add_option("--structure", replay.structure, "int-add:N or fin-unions:U");
  replay_cmd->add_option("--coloring", replay.coloring, "Coloring");
  replay_cmd->add_option("--d", replay.d, "Progression a, a+b, ..., a+d*b");
  replay_cmd->add_option("--size", replay.size, "Family size m");
  replay_cmd->add_option("--out", replay.out, "Also write the certificate here");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Lift a pair coloring to finite sets and back");
  add_common(reduce_cmd, reduce.common, true);
  add_budget(reduce_cmd, reduce.budget);
  reduce_cmd->add_option("--points", reduce.points, "Number of points N")->capture_default_str();
  reduce_cmd->add_option("--seed", reduce.seed, "Seeded pair coloring");
  reduce_cmd->add_option("--pairs", reduce.bits, "Pair colors as 0/1 in lexicographic pair order");
  reduce_cmd->add_option("--constant", reduce.constant, "Constant pair color");
  reduce_cmd->add_option("--b-min", reduce.b_min, "Smallest union length")->capture_default_str();
  reduce_cmd->add_option("--b-max", reduce.b_max, "Largest union length")->capture_default_str();
  reduce_cmd->add_option("--family-size", reduce.family_size, "Witness family size")->capture_default_str();

  LargeArgs large;
  auto* large_cmd = app.add_subcommand("large", "Largeness of finite sets");
  large_cmd->require_subcommand(1);
  auto* large_check = large_cmd->add_subcommand("check", "Is the set alpha-large?");
  add_common(large_check, large.common, false);
  large_check->add_option("--set", large.set, "e.g. 2,5,9")->required();
  large_check->add_option("--alpha", large.alpha, "Ordinal, e.g. w^2*3+w+5")->required();
  auto* large_find = large_cmd->add_subcommand("find", "Least w^beta-large set above a minimum");
  add_common(large_find, large.common, false);
  large_find->add_option("--beta", large.beta, "Exponent beta")->required();
  large_find->add_option("--min", large.min, "Least allowed element")->capture_default_str();
  large_find->add_option("--bound", large.bound, "Largest allowed element")->capture_default_str();
  auto* large_part = large_cmd->add_subcommand("partition", "Find a w^beta-large piece");
  add_common(large_part, large.common, false);
  large_part->add_option("--set", large.set, "The partitioned set")->required();
  large_part->add_option("--pieces", large.pieces, "Pieces separated by ';', e.g. 1,3;2,4")->required();
  large_part->add_option("--beta", large.beta, "Exponent beta")->required();

  NumbersArgs numbers;
  auto* numbers_cmd = app.add_subcommand("numbers", "Least N forcing a monochromatic pattern");
  add_common(numbers_cmd, numbers.common, true);
  numbers_cmd->add_option("--pattern", numbers.pattern, "ap:k, sum-triple, or a pattern family with --size")
      ->required();
  numbers_cmd->add_option("--colors", numbers.colors, "Number of colors")->capture_default_str();
  numbers_cmd->add_option("--cap", numbers.cap, "Largest N tried")->capture_default_str();
  numbers_cmd->add_option("--size", numbers.size, "Witness size for pattern families");
  numbers_cmd->add_flag("--confirm", numbers.confirm, "Re-derive by enumerating every coloring");

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Cardinal upper bounds and comparisons");
  bounds_cmd->require_subcommand(0, 1);
  add_common(bounds_cmd, bounds.common, false);
  bounds_cmd->add_option("--theorem", bounds.theorem, "vdw, folkman or schur")
      ->check(CLI::IsMember({"vdw", "folkman", "schur"}))
      ->capture_default_str();
  bounds_cmd->add_option("--colors", bounds.colors, "Number of colors")->capture_default_str();
  bounds_cmd->add_option("--d", bounds.d, "Progression d or Folkman generator count")->capture_default_str();
  bounds_cmd->add_option("--lambda", bounds.lambda, "Target cardinal")->capture_default_str();
  bounds_cmd->add_option("--cap", bounds.cap, "Cap for the finite search")->capture_default_str();
  auto* cmp_cmd = bounds_cmd->add_subcommand("cmp", "Provable comparison of two expressions");
  add_common(cmp_cmd, bounds.common, false);
  cmp_cmd->add_option("lhs", bounds.lhs)->required();
  cmp_cmd->add_option("rhs", bounds.rhs)->required();
  auto* er_cmd = bounds_cmd->add_subcommand("erdos-rado", "beth_n(k)^+ -> (k^+)^{n+1}_k");
  add_common(er_cmd, bounds.common, false);
  er_cmd->add_option("--kappa", bounds.kappa, "Cardinal kappa")->required();
  er_cmd->add_option("--n", bounds.n, "Tower height n")->capture_default_str();
  auto* norm_cmd = bounds_cmd->add_subcommand("normalize", "Normal form of an expression");
  add_common(norm_cmd, bounds.common, false);
  norm_cmd->add_option("expr", bounds.expr)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*fs_cmd) return run_fs(fs, out);
    if (*search_cmd) return run_search(search, out);
    if (*verify_cmd) return run_verify(verify, out);
    if (*replay_cmd) return run_replay(replay, out);
    if (*reduce_cmd) return run_reduce(reduce, out);
    if (*large_check) return run_large_check(large, out);
    if (*large_find) return run_large_find(large, out);
    if (*large_part) return run_large_partition(large, out);
    if (*numbers_cmd) return run_numbers(numbers, out);
    if (*cmp_cmd) return run_cmp(bounds, out);
    if (*er_cmd) return run_erdos_rado(bounds, out);
    if (*norm_cmd) return run_normalize(bounds, out);
    if (*bounds_cmd) return run_bounds(bounds, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hindlab::cli
