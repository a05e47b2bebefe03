#include "hindlab/pattern.hpp"

#include <functional>

#include "hindlab/error.hpp"

namespace hindlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void validate_pattern(const LengthPattern& p) {
  std::visit(overloaded{
                 [](const SchurLengths& s) {
                   if (s.a == 0 || s.b == 0) throw InvalidElement("schur parameters must be positive");
                 },
                 [](const ProgressionLengths& s) {
                   if (s.a == 0 || s.b == 0 || s.d == 0) {
                     throw InvalidElement("progression parameters must be positive");
                   }
                 },
                 [](const FolkmanLengths& f) {
                   if (f.generators.empty()) throw InvalidElement("folkman needs generators");
                   validate_int_set(f.generators);
                 },
                 [](const ExplicitLengths& e) {
                   if (e.lengths.empty()) throw InvalidElement("explicit length set is empty");
                 },
                 [](const LargeLengths& l) {
                   if (l.min_length == 0) throw InvalidElement("large-set minimum must be positive");
                   if (!l.beta.well_formed()) throw InvalidElement("malformed ordinal");
                 },
             },
             p);
}

LengthSet expand_pattern(const LengthPattern& p) {
  validate_pattern(p);
  return std::visit(
      overloaded{
          [](const SchurLengths& s) { return LengthSet({s.a, s.b, s.a + s.b}); },
          [](const ProgressionLengths& s) {
            std::vector<unsigned> out;
            for (unsigned i = 0; i <= s.d; ++i) out.push_back(s.a + i * s.b);
            return LengthSet(std::move(out));
          },
          [](const FolkmanLengths& f) {
            std::vector<unsigned> out;
            const std::size_t n = f.generators.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
              unsigned sum = 0;
              for (std::size_t i = 0; i < n; ++i) {
                if (mask >> i & 1) sum += f.generators[i];
              }
              out.push_back(sum);
            }
            return LengthSet(std::move(out));
          },
          [](const ExplicitLengths& e) { return e.lengths; },
          [](const LargeLengths& l) {
            auto b = large_length_set(l.beta, l.min_length, l.bound);
            if (!b) {
              throw PreconditionFailed("no " + to_string(omega_pow(l.beta)) +
                                       "-large length set within [" +
                                       std::to_string(l.min_length) + "," +
                                       std::to_string(l.bound) + "]");
            }
            return LengthSet(std::move(*b));
          },
      },
      p);
}

namespace {

std::string join(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string describe(const LengthPattern& p) {
  return std::visit(
      overloaded{
          [](const SchurLengths& s) { return "schur=" + join({s.a, s.b}); },
          [](const ProgressionLengths& s) { return "ap=" + join({s.a, s.b, s.d}); },
          [](const FolkmanLengths& f) { return "folkman=" + join(f.generators); },
          [](const ExplicitLengths& e) { return "explicit=" + join(e.lengths.values()); },
          [](const LargeLengths& l) {
            return "large=" + to_string(l.beta) + "@" + std::to_string(l.min_length) + "@" +
                   std::to_string(l.bound);
          },
      },
      p);
}

std::string PatternFamily::describe() const {
  switch (kind) {
    case Kind::Schur:
      return "schur";
    case Kind::Progression:
      return "ap:" + std::to_string(d + 1);
    case Kind::Folkman:
      return "folkman:" + std::to_string(d);
    case Kind::Fixed:
      return hindlab::describe(fixed);
  }
  return "?";
}

std::vector<LengthPattern> enumerate_family(const PatternFamily& family, unsigned max_length,
                                            unsigned max_a, unsigned max_b) {
  std::vector<LengthPattern> out;
  switch (family.kind) {
    case PatternFamily::Kind::Schur:
      for (unsigned a = 1; a <= max_a && 2 * a <= max_length; ++a) {
        for (unsigned b = a; b <= max_b && a + b <= max_length; ++b) {
          out.push_back(SchurLengths{a, b});
        }
      }
      break;
    case PatternFamily::Kind::Progression:
      if (family.d == 0) throw InvalidElement("progression needs d >= 1");
      for (unsigned a = 1; a <= max_a && a + family.d <= max_length; ++a) {
        for (unsigned b = 1; b <= max_b && a + family.d * b <= max_length; ++b) {
          out.push_back(ProgressionLengths{a, b, family.d});
        }
      }
      break;
    case PatternFamily::Kind::Folkman: {
      if (family.d == 0) throw InvalidElement("folkman needs at least one generator");
      std::vector<unsigned> gens;
      std::function<void(unsigned, unsigned)> rec = [&](unsigned next, unsigned sum) {
        if (gens.size() == family.d) {
          out.push_back(FolkmanLengths{gens});
          return;
        }
        for (unsigned g = next; g <= max_a && sum + g <= max_length; ++g) {
          gens.push_back(g);
          rec(g + 1, sum + g);
          gens.pop_back();
        }
      };
      rec(1, 0);
      break;
    }
    case PatternFamily::Kind::Fixed:
      if (expand_pattern(family.fixed).max() <= max_length) out.push_back(family.fixed);
      break;
  }
  return out;
}

}  // namespace hindlab
