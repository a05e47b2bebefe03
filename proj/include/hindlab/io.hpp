#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hindlab/algebra.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/pattern.hpp"
#include "hindlab/replay.hpp"
#include "hindlab/search.hpp"

namespace hindlab::io {

using json = nlohmann::json;

// Short forms used on the command line.
GroundStructure parse_structure(std::string_view text);    // int-add:N, fin-unions:U
ColoringSpec parse_coloring(std::string_view text);        // const:c, parity, mod:k, seeded:s:c, explicit:c0,c1,...
PatternFamily parse_pattern_family(std::string_view text);  // schur, ap:k, folkman:d, or a fixed pattern
LengthPattern parse_fixed_pattern(std::string_view text);   // schur=a,b  ap=a,b,d  folkman=..  explicit=..  large=beta@m[@bound]
std::vector<unsigned> parse_uint_list(std::string_view text);

json structure_to_json(const GroundStructure& s);
GroundStructure structure_from_json(const json& j);

json coloring_to_json(const ColoringSpec& c);
ColoringSpec coloring_from_json(const json& j);

json pattern_to_json(const LengthPattern& p);
LengthPattern pattern_from_json(const json& j);

json family_to_json(const PatternFamily& f);
PatternFamily family_from_json(const json& j);

json budget_to_json(const SearchBudget& b);
SearchBudget budget_from_json(const json& j);

// IntAdd and OpTable elements are integers, FinUnions elements are member arrays.
json element_to_json(const GroundStructure& s, Element x);
Element element_from_json(const GroundStructure& s, const json& j);

json witness_to_json(const GroundStructure& s, const Witness& w);
Witness witness_from_json(const GroundStructure& s, const json& j);

json trace_to_json(const GroundStructure& s, const ReplayTrace& t);

/// Everything a search or replay needs, in one self-describing document.
struct Instance {
  GroundStructure structure = GroundStructure::int_add(1);
  ColoringSpec coloring;
  std::optional<PatternFamily> family;  // search
  std::optional<unsigned> d;            // replay
  std::size_t size = 1;
  bool block = false;
  SearchBudget budget;
};

json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

// FNV-1a 64 of the compact dump, as 16 hex digits.
std::string digest(const json& j);

json make_certificate(const std::string& command, const json& instance, const std::string& outcome);

// Throws Error with a readable message on a malformed document.
json read_json_file(const std::string& path);

}  // namespace hindlab::io
