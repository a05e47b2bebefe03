#include "hindlab/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hindlab/error.hpp"

#ifndef HINDLAB_VERSION
#define HINDLAB_VERSION "0.0.0"
#endif

namespace hindlab::io {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("expected a natural number for " + std::string(what) + ", got '" +
                         std::string(text) + "'",
                     static_cast<std::size_t>(ptr - text.data()));
  }
  return v;
}

unsigned parse_uint(std::string_view text, std::string_view what) {
  const auto v = parse_u64(text, what);
  if (v > 0xFFFFFFFFull) throw ParseError(std::string(what) + " is too large", 0);
  return static_cast<unsigned>(v);
}

std::pair<std::string_view, std::string_view> split_once(std::string_view text, char sep) {
  const auto at = text.find(sep);
  if (at == std::string_view::npos) return {text, {}};
  return {text.substr(0, at), text.substr(at + 1)};
}

}  // namespace

std::vector<unsigned> parse_uint_list(std::string_view text) {
  std::vector<unsigned> out;
  if (text.empty()) return out;
  while (true) {
    const auto [head, rest] = split_once(text, ',');
    out.push_back(parse_uint(head, "list entry"));
    if (head.size() == text.size()) break;
    text = rest;
  }
  return out;
}

GroundStructure parse_structure(std::string_view text) {
  const auto [kind, arg] = split_once(text, ':');
  if (kind == "int-add") return GroundStructure::int_add(parse_u64(arg, "int-add limit"));
  if (kind == "fin-unions") return GroundStructure::fin_unions(parse_uint(arg, "fin-unions universe"));
  throw ParseError("unknown structure '" + std::string(kind) + "'", 0);
}

ColoringSpec parse_coloring(std::string_view text) {
  const auto [kind, arg] = split_once(text, ':');
  if (kind == "const") return ColoringSpec::constant(arg.empty() ? 1 : parse_uint(arg, "color count"));
  if (kind == "parity") return ColoringSpec::parity();
  if (kind == "mod") return ColoringSpec::mod(parse_uint(arg, "modulus"));
  if (kind == "seeded") {
    const auto [seed, colors] = split_once(arg, ':');
    return ColoringSpec::seeded(parse_u64(seed, "seed"), parse_uint(colors, "color count"));
  }
  if (kind == "explicit") {
    auto table = parse_uint_list(arg);
    unsigned colors = 1;
    for (unsigned c : table) colors = std::max(colors, c + 1);
    return ColoringSpec::explicit_table(std::move(table), colors);
  }
  throw ParseError("unknown coloring '" + std::string(kind) + "'", 0);
}

LengthPattern parse_fixed_pattern(std::string_view text) {
  const auto [kind, arg] = split_once(text, '=');
  LengthPattern p;
  if (kind == "schur") {
    const auto v = parse_uint_list(arg);
    if (v.size() != 2) throw ParseError("schur=a,b takes two values", kind.size() + 1);
    p = SchurLengths{v[0], v[1]};
  } else if (kind == "ap") {
    const auto v = parse_uint_list(arg);
    if (v.size() != 3) throw ParseError("ap=a,b,d takes three values", kind.size() + 1);
    p = ProgressionLengths{v[0], v[1], v[2]};
  } else if (kind == "folkman") {
    p = FolkmanLengths{parse_uint_list(arg)};
  } else if (kind == "explicit") {
    p = ExplicitLengths{LengthSet(parse_uint_list(arg))};
  } else if (kind == "large") {
    const auto [beta, rest] = split_once(arg, '@');
    const auto [min, bound] = split_once(rest, '@');
    LargeLengths l{parse_ordinal(beta), parse_uint(min, "minimum length"), 64};
    if (!bound.empty()) l.bound = parse_uint(bound, "bound");
    p = l;
  } else {
    throw ParseError("unknown pattern '" + std::string(kind) + "'", 0);
  }
  validate_pattern(p);
  return p;
}

PatternFamily parse_pattern_family(std::string_view text) {
  if (text.find('=') != std::string_view::npos) return PatternFamily::single(parse_fixed_pattern(text));
  const auto [kind, arg] = split_once(text, ':');
  if (kind == "schur" && arg.empty()) return PatternFamily::schur();
  if (kind == "ap") {
    const unsigned terms = parse_uint(arg, "progression terms");
    if (terms < 2) throw ParseError("ap:k needs k >= 2", 3);
    return PatternFamily::progression(terms - 1);
  }
  if (kind == "folkman") {
    const unsigned count = parse_uint(arg, "generator count");
    if (count == 0) throw ParseError("folkman:d needs d >= 1", 8);
    return PatternFamily::folkman(count);
  }
  throw ParseError("unknown pattern family '" + std::string(text) + "'", 0);
}

json structure_to_json(const GroundStructure& s) {
  switch (s.kind()) {
    case StructureKind::IntAdd:
      return {{"kind", "int-add"}, {"limit", s.limit()}};
    case StructureKind::FinUnions:
      return {{"kind", "fin-unions"}, {"universe", s.universe()}};
    case StructureKind::OpTable:
      return {{"kind", "op-table"}, {"table", s.table()}};
  }
  return {};
}

GroundStructure structure_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "int-add") return GroundStructure::int_add(j.at("limit").get<std::uint64_t>());
  if (kind == "fin-unions") return GroundStructure::fin_unions(j.at("universe").get<unsigned>());
  if (kind == "op-table") {
    return GroundStructure::op_table(j.at("table").get<std::vector<std::vector<std::uint32_t>>>());
  }
  throw ParseError("unknown structure kind '" + kind + "'", 0);
}

json coloring_to_json(const ColoringSpec& c) {
  switch (c.kind) {
    case ColoringKind::Constant:
      return {{"kind", "constant"}, {"colors", c.colors}};
    case ColoringKind::Parity:
      return {{"kind", "parity"}};
    case ColoringKind::Mod:
      return {{"kind", "mod"}, {"modulus", c.modulus}};
    case ColoringKind::Seeded:
      return {{"kind", "seeded"}, {"seed", c.seed}, {"colors", c.colors}};
    case ColoringKind::Explicit:
      return {{"kind", "explicit"}, {"colors", c.table}, {"count", c.colors}};
    case ColoringKind::Composed: {
      json parts = json::array();
      for (const auto& p : c.parts) parts.push_back(coloring_to_json(p));
      return {{"kind", "composed"}, {"parts", parts}};
    }
  }
  return {};
}

ColoringSpec coloring_from_json(const json& j) {
  if (j.is_array()) {
    auto table = j.get<std::vector<unsigned>>();
    unsigned colors = 1;
    for (unsigned c : table) colors = std::max(colors, c + 1);
    return ColoringSpec::explicit_table(std::move(table), colors);
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ColoringSpec::constant(j.value("colors", 1u));
  if (kind == "parity") return ColoringSpec::parity();
  if (kind == "mod") return ColoringSpec::mod(j.at("modulus").get<unsigned>());
  if (kind == "seeded") {
    return ColoringSpec::seeded(j.at("seed").get<std::uint64_t>(), j.at("colors").get<unsigned>());
  }
  if (kind == "explicit") {
    auto table = j.at("colors").get<std::vector<unsigned>>();
    unsigned colors = 1;
    for (unsigned c : table) colors = std::max(colors, c + 1);
    return ColoringSpec::explicit_table(std::move(table), j.value("count", colors));
  }
  if (kind == "composed") {
    std::vector<ColoringSpec> parts;
    for (const auto& p : j.at("parts")) parts.push_back(coloring_from_json(p));
    return ColoringSpec::composed(std::move(parts));
  }
  throw ParseError("unknown coloring kind '" + kind + "'", 0);
}

json pattern_to_json(const LengthPattern& p) {
  if (const auto* s = std::get_if<SchurLengths>(&p)) return {{"kind", "schur"}, {"a", s->a}, {"b", s->b}};
  if (const auto* s = std::get_if<ProgressionLengths>(&p)) {
    return {{"kind", "ap"}, {"a", s->a}, {"b", s->b}, {"d", s->d}};
  }
  if (const auto* f = std::get_if<FolkmanLengths>(&p)) {
    return {{"kind", "folkman"}, {"generators", f->generators}};
  }
  if (const auto* e = std::get_if<ExplicitLengths>(&p)) {
    return {{"kind", "explicit"}, {"lengths", e->lengths.values()}};
  }
  const auto& l = std::get<LargeLengths>(p);
  return {{"kind", "large"}, {"beta", to_string(l.beta)}, {"min", l.min_length}, {"bound", l.bound}};
}

LengthPattern pattern_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  LengthPattern p;
  if (kind == "schur") {
    p = SchurLengths{j.at("a").get<unsigned>(), j.at("b").get<unsigned>()};
  } else if (kind == "ap") {
    p = ProgressionLengths{j.at("a").get<unsigned>(), j.at("b").get<unsigned>(),
                           j.at("d").get<unsigned>()};
  } else if (kind == "folkman") {
    p = FolkmanLengths{j.at("generators").get<std::vector<unsigned>>()};
  } else if (kind == "explicit") {
    p = ExplicitLengths{LengthSet(j.at("lengths").get<std::vector<unsigned>>())};
  } else if (kind == "large") {
    p = LargeLengths{parse_ordinal(j.at("beta").get<std::string>()), j.at("min").get<unsigned>(),
                     j.value("bound", 64u)};
  } else {
    throw ParseError("unknown pattern kind '" + kind + "'", 0);
  }
  validate_pattern(p);
  return p;
}

json family_to_json(const PatternFamily& f) {
  switch (f.kind) {
    case PatternFamily::Kind::Schur:
      return {{"family", "schur"}};
    case PatternFamily::Kind::Progression:
      return {{"family", "ap"}, {"d", f.d}};
    case PatternFamily::Kind::Folkman:
      return {{"family", "folkman"}, {"count", f.d}};
    case PatternFamily::Kind::Fixed:
      return {{"family", "fixed"}, {"pattern", pattern_to_json(f.fixed)}};
  }
  return {};
}

PatternFamily family_from_json(const json& j) {
  const auto kind = j.at("family").get<std::string>();
  if (kind == "schur") return PatternFamily::schur();
  if (kind == "ap") return PatternFamily::progression(j.at("d").get<unsigned>());
  if (kind == "folkman") return PatternFamily::folkman(j.at("count").get<unsigned>());
  if (kind == "fixed") return PatternFamily::single(pattern_from_json(j.at("pattern")));
  throw ParseError("unknown pattern family '" + kind + "'", 0);
}

json budget_to_json(const SearchBudget& b) {
  json j = {{"maxGroundElements", b.max_ground_elements},
            {"maxA", b.max_a},
            {"maxB", b.max_b},
            {"maxCandidates", b.max_candidates}};
  if (b.time_limit) j["timeLimitMs"] = b.time_limit->count();
  return j;
}

SearchBudget budget_from_json(const json& j) {
  SearchBudget b;
  b.max_ground_elements = j.value("maxGroundElements", b.max_ground_elements);
  b.max_a = j.value("maxA", b.max_a);
  b.max_b = j.value("maxB", b.max_b);
  b.max_candidates = j.value("maxCandidates", b.max_candidates);
  if (j.contains("timeLimitMs")) {
    b.time_limit = std::chrono::milliseconds(j.at("timeLimitMs").get<std::int64_t>());
  }
  return b;
}

json element_to_json(const GroundStructure& s, Element x) {
  if (s.kind() == StructureKind::FinUnions) return set_members(x);
  return x;
}

Element element_from_json(const GroundStructure& s, const json& j) {
  Element x = 0;
  if (s.kind() == StructureKind::FinUnions) {
    const auto members = j.get<std::vector<unsigned>>();
    for (unsigned m : members) {
      if (m >= 64) throw InvalidElement("set member " + std::to_string(m) + " out of range");
    }
    x = set_from(members);
    if (set_size(x) != members.size()) throw InvalidElement("set members repeat");
  } else {
    x = j.get<Element>();
  }
  s.check(x);
  return x;
}

json witness_to_json(const GroundStructure& s, const Witness& w) {
  json family = json::array();
  for (Element x : w.family.members) family.push_back(element_to_json(s, x));
  return {{"family", family},
          {"block", w.block},
          {"pattern", pattern_to_json(w.pattern)},
          {"lengths", w.lengths.values()},
          {"color", w.color}};
}

Witness witness_from_json(const GroundStructure& s, const json& j) {
  Witness w;
  for (const auto& e : j.at("family")) w.family.members.push_back(element_from_json(s, e));
  w.block = j.value("block", false);
  w.family.block = w.block;
  w.pattern = pattern_from_json(j.at("pattern"));
  w.lengths = LengthSet(j.at("lengths").get<std::vector<unsigned>>());
  w.color = j.at("color").get<unsigned>();
  return w;
}

json trace_to_json(const GroundStructure& s, const ReplayTrace& t) {
  json ground = json::array();
  for (Element x : t.ground) ground.push_back(element_to_json(s, x));
  json homogeneous = json::array();
  for (Element x : t.homogeneous) homogeneous.push_back(element_to_json(s, x));
  return {{"n", t.n},
          {"ground", ground},
          {"homogeneous", homogeneous},
          {"inducedColors", t.induced},
          {"progression", {{"a", t.a}, {"b", t.b}, {"d", t.d}}}};
}

json instance_to_json(const Instance& inst) {
  json j = {{"structure", structure_to_json(inst.structure)},
            {"coloring", coloring_to_json(inst.coloring)},
            {"size", inst.size},
            {"block", inst.block},
            {"budget", budget_to_json(inst.budget)}};
  if (inst.family) j["pattern"] = family_to_json(*inst.family);
  if (inst.d) j["d"] = *inst.d;
  return j;
}

Instance instance_from_json(const json& j) {
  Instance inst;
  inst.structure = structure_from_json(j.at("structure"));
  inst.coloring = coloring_from_json(j.at("coloring"));
  inst.size = j.at("size").get<std::size_t>();
  inst.block = j.value("block", false);
  if (j.contains("budget")) inst.budget = budget_from_json(j.at("budget"));
  if (j.contains("pattern")) inst.family = family_from_json(j.at("pattern"));
  if (j.contains("d")) inst.d = j.at("d").get<unsigned>();
  return inst;
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json make_certificate(const std::string& command, const json& instance, const std::string& outcome) {
  return {{"tool", "hindlab"},
          {"version", HINDLAB_VERSION},
          {"command", command},
          {"instance", instance},
          {"instanceDigest", digest(instance)},
          {"outcome", outcome},
          {"witness", nullptr},
          {"trace", nullptr}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace hindlab::io
