#include "hindlab/ordinals.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hindlab/error.hpp"

namespace hindlab {

Ordinal::Ordinal() = default;

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal{}, n});
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(nat(1)); }

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  Ordinal o;
  o.terms_ = std::move(terms);
  if (!o.well_formed()) throw InvalidElement("terms are not in Cantor normal form");
  return o;
}

bool Ordinal::is_zero() const { return terms_.empty(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

std::uint64_t Ordinal::finite_value() const { return terms_.empty() ? 0 : terms_[0].coefficient; }

bool Ordinal::well_formed() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0 || !terms_[i].exponent.well_formed()) return false;
    if (i > 0 && !(terms_[i].exponent < terms_[i - 1].exponent)) return false;
  }
  return true;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) return c;
    if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }
bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == 0; }

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead.exponent) {
      out.push_back(t);
    } else {
      if (t.exponent == lead.exponent) {
        out.push_back(Ordinal::Term{lead.exponent, t.coefficient + lead.coefficient});
      }
      break;
    }
  }
  const bool merged = !out.empty() && out.back().exponent == lead.exponent;
  if (!merged) out.push_back(lead);
  for (std::size_t i = 1; i < b.terms().size(); ++i) out.push_back(b.terms()[i]);
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul_nat(const Ordinal& a, std::uint64_t k) {
  if (k == 0 || a.is_zero()) return Ordinal{};
  auto terms = a.terms();
  terms.front().coefficient *= k;
  return Ordinal::from_terms(std::move(terms));
}

Ordinal omega_pow(const Ordinal& beta) {
  return Ordinal::from_terms({Ordinal::Term{beta, 1}});
}

Ordinal predecessor(const Ordinal& a) {
  if (!a.is_successor()) throw InvalidElement(to_string(a) + " is not a successor");
  auto terms = a.terms();
  if (--terms.back().coefficient == 0) terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

Ordinal fundamental_sequence(const Ordinal& limit, std::uint64_t n) {
  if (!limit.is_limit()) throw NotALimit(to_string(limit) + " is not a limit ordinal");
  auto terms = limit.terms();
  const Ordinal e = terms.back().exponent;
  if (--terms.back().coefficient == 0) terms.pop_back();
  const Ordinal base = Ordinal::from_terms(std::move(terms));
  if (e.is_successor()) {
    return add(base, mul_nat(omega_pow(predecessor(e)), n));
  }
  return add(base, omega_pow(fundamental_sequence(e, n)));
}

namespace {

bool simple_exponent(const Ordinal& e) {
  return e.is_finite() || (e.terms().size() == 1 && e.terms()[0].coefficient == 1 &&
                           e.terms()[0].exponent == Ordinal::nat(1));
}

}  // namespace

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal::nat(1))) {
      out += "^";
      out += simple_exponent(t.exponent) ? to_string(t.exponent) : "(" + to_string(t.exponent) + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

// ordinal := term ('+' term)* ; term := nat | 'w' ['^' atom] ['*' nat]
// atom := nat | 'w' | '(' ordinal ')'
class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal o = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return o;
  }

 private:
  Ordinal sum() {
    Ordinal acc = term();
    while (peek('+')) {
      ++pos_;
      acc = add(acc, term());
    }
    return acc;
  }

  Ordinal term() {
    skip();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return Ordinal::nat(number());
    }
    if (!peek('w')) fail("expected 'w' or a natural number");
    ++pos_;
    Ordinal exponent = Ordinal::nat(1);
    if (peek('^')) {
      ++pos_;
      exponent = atom();
    }
    std::uint64_t coefficient = 1;
    if (peek('*')) {
      ++pos_;
      skip();
      coefficient = number();
      if (coefficient == 0) fail("coefficient must be positive");
    }
    return mul_nat(omega_pow(exponent), coefficient);
  }

  Ordinal atom() {
    skip();
    if (peek('(')) {
      ++pos_;
      Ordinal inner = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (peek('w')) {
      ++pos_;
      return Ordinal::omega();
    }
    return Ordinal::nat(number());
  }

  std::uint64_t number() {
    skip();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return v;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return OrdinalParser(text).parse(); }

void validate_int_set(std::span<const unsigned> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] == 0) throw InvalidElement("integer sets hold positive integers only");
    if (i > 0 && set[i] <= set[i - 1]) throw InvalidElement("integer set must be strictly increasing");
  }
}

Ordinal consume(Ordinal state, unsigned element) {
  while (state.is_limit()) state = fundamental_sequence(state, element);
  return state.is_zero() ? state : predecessor(state);
}

bool is_alpha_large(std::span<const unsigned> set, const Ordinal& alpha) {
  Ordinal state = alpha;
  std::size_t pos = 0;
  while (true) {
    if (state.is_zero()) return true;
    if (state.is_finite()) return set.size() - pos >= state.finite_value();
    if (pos == set.size()) return false;
    state = consume(std::move(state), set[pos]);
    ++pos;
  }
}

LargePiece partition_large_piece(std::span<const unsigned> set, const std::vector<IntSet>& pieces,
                                 const Ordinal& beta) {
  validate_int_set(set);
  std::vector<unsigned> merged;
  for (const auto& p : pieces) {
    validate_int_set(p);
    merged.insert(merged.end(), p.begin(), p.end());
  }
  std::sort(merged.begin(), merged.end());
  if (!std::equal(merged.begin(), merged.end(), set.begin(), set.end())) {
    throw PreconditionFailed("pieces do not partition the set");
  }
  const Ordinal piece_order = omega_pow(beta);
  const Ordinal whole_order = mul_nat(piece_order, pieces.size() + 1);
  if (!is_alpha_large(set, whole_order)) {
    throw PreconditionFailed("set is not " + to_string(whole_order) + "-large");
  }
  LargePiece out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (is_alpha_large(pieces[i], piece_order)) {
      out.index = i;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "no " << to_string(piece_order) << "-large piece in partition of {";
  for (std::size_t i = 0; i < set.size(); ++i) msg << (i ? "," : "") << set[i];
  msg << "} into";
  for (const auto& p : pieces) {
    msg << " {";
    for (std::size_t i = 0; i < p.size(); ++i) msg << (i ? "," : "") << p[i];
    msg << "}";
  }
  out.counterexample = msg.str();
  return out;
}

namespace {

class LargeSetSearch {
 public:
  explicit LargeSetSearch(unsigned bound) : bound_(bound) {}

  // Some subset of [lo, bound] is `state`-large.
  bool feasible(const Ordinal& state, unsigned lo) {
    if (state.is_zero()) return true;
    if (lo > bound_) return false;
    if (state.is_finite()) return bound_ - lo + 1 >= state.finite_value();
    const auto key = std::make_pair(to_string(state), lo);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (unsigned v = lo; v <= bound_ && !ok; ++v) ok = feasible(consume(state, v), v + 1);
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  unsigned bound_;
  std::map<std::pair<std::string, unsigned>, bool> memo_;
};

}  // namespace

std::optional<IntSet> large_length_set(const Ordinal& beta, unsigned min_element, unsigned bound) {
  if (min_element == 0) throw InvalidElement("minimum length must be positive");
  LargeSetSearch search(bound);
  Ordinal state = omega_pow(beta);
  if (!search.feasible(state, min_element)) return std::nullopt;
  // A large prefix is lexicographically below all of its extensions, so
  // greedily take the least element that keeps the target reachable.
  IntSet out;
  unsigned lo = min_element;
  while (!state.is_zero()) {
    for (unsigned v = lo; v <= bound; ++v) {
      Ordinal next = consume(state, v);
      if (search.feasible(next, v + 1)) {
        out.push_back(v);
        state = std::move(next);
        lo = v + 1;
        break;
      }
    }
  }
  return out;
}

}  // namespace hindlab
