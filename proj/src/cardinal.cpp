#include "hindlab/cardinal.hpp"

#include <cctype>

#include "hindlab/error.hpp"
#include "hindlab/numbers.hpp"

namespace hindlab {

CardExpr CardExpr::aleph(unsigned index) {
  return CardExpr(std::make_shared<const Node>(Node{Kind::Aleph, index, {}, nullptr}));
}

CardExpr CardExpr::var(std::string name) {
  if (name.empty()) throw InvalidElement("variable name must be nonempty");
  return CardExpr(std::make_shared<const Node>(Node{Kind::Var, 0, std::move(name), nullptr}));
}

CardExpr CardExpr::succ(CardExpr inner) {
  return CardExpr(std::make_shared<const Node>(
      Node{Kind::Succ, 0, {}, std::make_shared<const CardExpr>(std::move(inner))}));
}

CardExpr CardExpr::beth(unsigned n, CardExpr base) {
  return CardExpr(std::make_shared<const Node>(
      Node{Kind::Beth, n, {}, std::make_shared<const CardExpr>(std::move(base))}));
}

std::size_t CardExpr::depth() const {
  if (kind() == Kind::Aleph || kind() == Kind::Var) return 1;
  return 1 + operand().depth();
}

bool operator==(const CardExpr& a, const CardExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case CardExpr::Kind::Aleph:
      return a.index() == b.index();
    case CardExpr::Kind::Var:
      return a.name() == b.name();
    case CardExpr::Kind::Succ:
      return a.operand() == b.operand();
    case CardExpr::Kind::Beth:
      return a.index() == b.index() && a.operand() == b.operand();
  }
  return false;
}

CardExpr normalize(const CardExpr& e) {
  switch (e.kind()) {
    case CardExpr::Kind::Aleph:
    case CardExpr::Kind::Var:
      return e;
    case CardExpr::Kind::Succ: {
      CardExpr inner = normalize(e.operand());
      if (inner.kind() == CardExpr::Kind::Aleph) return CardExpr::aleph(inner.index() + 1);
      return CardExpr::succ(std::move(inner));
    }
    case CardExpr::Kind::Beth: {
      CardExpr inner = normalize(e.operand());
      if (e.index() == 0) return inner;
      if (inner.kind() == CardExpr::Kind::Beth) {
        return CardExpr::beth(e.index() + inner.index(), inner.operand());
      }
      return CardExpr::beth(e.index(), std::move(inner));
    }
  }
  return e;
}

bool is_normal(const CardExpr& e) { return normalize(e) == e; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LT:
      return "LT";
    case Verdict::LE:
      return "LE";
    case Verdict::EQ:
      return "EQ";
    case Verdict::GE:
      return "GE";
    case Verdict::GT:
      return "GT";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "?";
}

namespace {

using Proof = std::vector<std::string>;

CardExpr lower_beth(const CardExpr& b) {
  // b = beth_m(y), m >= 1: returns beth_{m-1}(y).
  if (b.index() == 1) return b.operand();
  return CardExpr::beth(b.index() - 1, b.operand());
}

bool le(const CardExpr& a, const CardExpr& b, Proof& proof);

bool lt(const CardExpr& a, const CardExpr& b, Proof& proof) {
  const auto sa = to_string(a), sb = to_string(b);
  if (a.kind() == CardExpr::Kind::Aleph && b.kind() == CardExpr::Kind::Aleph) {
    if (a.index() < b.index()) {
      proof.push_back(sa + " < " + sb + "  (aleph index order)");
      return true;
    }
    return false;
  }
  if (b.kind() == CardExpr::Kind::Succ) {
    Proof sub;
    if (le(a, b.operand(), sub)) {
      proof.insert(proof.end(), sub.begin(), sub.end());
      proof.push_back(to_string(b.operand()) + " < " + sb + "  (k < k^+)");
      return true;
    }
  }
  if (b.kind() == CardExpr::Kind::Beth && b.index() >= 1) {
    const CardExpr below = lower_beth(b);
    Proof sub;
    if (le(a, below, sub)) {
      proof.insert(proof.end(), sub.begin(), sub.end());
      proof.push_back(to_string(below) + " < " + sb + "  (k < 2^k)");
      return true;
    }
  }
  return false;
}

bool le(const CardExpr& a, const CardExpr& b, Proof& proof) {
  if (a == b) return true;
  {
    Proof sub;
    if (lt(a, b, sub)) {
      proof.insert(proof.end(), sub.begin(), sub.end());
      return true;
    }
  }
  const auto sa = to_string(a), sb = to_string(b);
  if (a.kind() == CardExpr::Kind::Aleph && a.index() == 0 && b.kind() == CardExpr::Kind::Var) {
    proof.push_back(sa + " <= " + sb + "  (variables are infinite)");
    return true;
  }
  if (a.kind() == CardExpr::Kind::Succ && b.kind() == CardExpr::Kind::Succ) {
    Proof sub;
    if (le(a.operand(), b.operand(), sub)) {
      proof.insert(proof.end(), sub.begin(), sub.end());
      proof.push_back(sa + " <= " + sb + "  (^+ is monotone)");
      return true;
    }
  }
  if (a.kind() == CardExpr::Kind::Beth && b.kind() == CardExpr::Kind::Beth &&
      a.index() <= b.index()) {
    const unsigned gap = b.index() - a.index();
    const CardExpr lifted = gap == 0 ? b.operand() : CardExpr::beth(gap, b.operand());
    Proof sub;
    if (le(a.operand(), lifted, sub)) {
      proof.insert(proof.end(), sub.begin(), sub.end());
      proof.push_back(sa + " <= " + sb + "  (beth is monotone)");
      return true;
    }
  }
  if (a.kind() == CardExpr::Kind::Succ) {
    Proof sub;
    if (lt(a.operand(), b, sub)) {
      proof.insert(proof.end(), sub.begin(), sub.end());
      proof.push_back(sa + " <= " + sb + "  (k < l implies k^+ <= l)");
      return true;
    }
  }
  return false;
}

}  // namespace

Verdict cmp_provable(const CardExpr& a, const CardExpr& b, std::vector<std::string>* derivation) {
  Proof proof;
  Verdict v = Verdict::Unknown;
  if (a == b) {
    v = Verdict::EQ;
    proof.push_back(to_string(a) + " = " + to_string(b));
  } else if (lt(a, b, proof)) {
    v = Verdict::LT;
  } else if (proof.clear(), lt(b, a, proof)) {
    v = Verdict::GT;
  } else if (proof.clear(), le(a, b, proof)) {
    v = Verdict::LE;
  } else if (proof.clear(), le(b, a, proof)) {
    v = Verdict::GE;
  } else {
    proof.clear();
  }
  if (derivation) *derivation = std::move(proof);
  return v;
}

std::string to_string(const ArrowStmt& s) {
  return to_string(s.source) + " -> (" + to_string(s.target) + ")^" + std::to_string(s.exponent) +
         "_" + s.colors;
}

ArrowStmt erdos_rado_instance(const CardExpr& kappa, unsigned n) {
  return ArrowStmt{normalize(CardExpr::succ(CardExpr::beth(n, kappa))),
                   normalize(CardExpr::succ(kappa)), n + 1, to_string(normalize(kappa))};
}

std::string BoundTheorem::describe() const {
  switch (kind) {
    case Kind::VanDerWaerden:
      return "vdw(c=" + std::to_string(colors) + ",d=" + std::to_string(d) + ")";
    case Kind::Folkman:
      return "folkman(c=" + std::to_string(colors) + ",d=" + std::to_string(d) + ")";
    case Kind::Schur:
      return "schur(c=" + std::to_string(colors) + ")";
  }
  return "?";
}

std::string BoundTheorem::finite_symbol() const {
  switch (kind) {
    case Kind::VanDerWaerden:
      return "W(" + std::to_string(d + 1) + ";" + std::to_string(colors) + ")";
    case Kind::Folkman:
      return "F(" + std::to_string(d) + ";" + std::to_string(colors) + ")";
    case Kind::Schur:
      return "S(" + std::to_string(colors) + ")+1";
  }
  return "?";
}

FiniteOracle default_finite_oracle(unsigned cap) {
  return [cap](const BoundTheorem& t) -> std::optional<unsigned> {
    switch (t.kind) {
      case BoundTheorem::Kind::VanDerWaerden:
        return van_der_waerden(t.d + 1, t.colors, cap);
      case BoundTheorem::Kind::Folkman: {
        std::vector<unsigned> lengths;
        for (unsigned j = 1; j <= t.d; ++j) lengths.push_back(j);
        const auto target = UniversalTarget::of_family(
            PatternFamily::single(ExplicitLengths{LengthSet(lengths)}), t.d);
        const auto r = min_universal_n(target, t.colors, cap);
        if (r.cap_exceeded) return std::nullopt;
        return r.n;
      }
      case BoundTheorem::Kind::Schur: {
        const auto r = min_universal_n(UniversalTarget::sum_triple(), t.colors, cap);
        if (r.cap_exceeded) return std::nullopt;
        return r.n;
      }
    }
    return std::nullopt;
  };
}

TheoremBound theorem_bound(const BoundTheorem& theorem, const CardExpr& lambda,
                           const FiniteOracle& oracle) {
  if (theorem.colors == 0) throw InvalidElement("color count must be positive");
  if (theorem.kind != BoundTheorem::Kind::Schur && theorem.d == 0) {
    throw InvalidElement("d must be positive");
  }
  TheoremBound out;
  out.n = oracle(theorem);
  const CardExpr base = normalize(lambda);
  if (out.n) {
    out.bound = normalize(CardExpr::succ(CardExpr::beth(*out.n - 1, base)));
    out.text = to_string(*out.bound);
  } else {
    out.text = "beth_{" + theorem.finite_symbol() + "-1}(" + to_string(base) + ")^+";
  }
  return out;
}

std::string to_string(ConsistencyReport::Status s) {
  switch (s) {
    case ConsistencyReport::Status::Consistent:
      return "consistent";
    case ConsistencyReport::Status::Inconsistent:
      return "inconsistent";
    case ConsistencyReport::Status::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

ConsistencyReport lower_bound_consistency(const CardExpr& lambda, const CardExpr& upper) {
  ConsistencyReport r;
  const CardExpr floor = normalize(CardExpr::power_of_two(lambda));
  r.verdict = cmp_provable(normalize(upper), floor, &r.chain);
  switch (r.verdict) {
    case Verdict::GT:
      r.status = ConsistencyReport::Status::Consistent;
      break;
    case Verdict::LT:
    case Verdict::LE:
    case Verdict::EQ:
      r.status = ConsistencyReport::Status::Inconsistent;
      break;
    case Verdict::GE:
    case Verdict::Unknown:
      r.status = ConsistencyReport::Status::Indeterminate;
      break;
  }
  return r;
}

namespace {

class CardParser {
 public:
  explicit CardParser(std::string_view text) : text_(text) {}

  CardExpr parse() {
    CardExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  CardExpr expr() {
    CardExpr e = primary();
    while (true) {
      skip();
      const std::size_t save = pos_;
      if (eat('^') && eat('+')) {
        e = CardExpr::succ(std::move(e));
      } else {
        pos_ = save;
        return e;
      }
    }
  }

  CardExpr primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      CardExpr e = expr();
      expect(')');
      return e;
    }
    if (c == '2') {
      ++pos_;
      expect('^');
      expect('(');
      CardExpr e = expr();
      expect(')');
      return CardExpr::power_of_two(std::move(e));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected an expression");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string word(text_.substr(start, pos_ - start));
    if ((word == "aleph" || word == "beth") && pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      const unsigned n = number();
      if (word == "aleph") return CardExpr::aleph(n);
      expect('(');
      CardExpr e = expr();
      expect(')');
      return CardExpr::beth(n, std::move(e));
    }
    return CardExpr::var(word);
  }

  unsigned number() {
    skip();
    const std::size_t start = pos_;
    unsigned v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return v;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CardExpr parse_card_expr(std::string_view text) { return CardParser(text).parse(); }

std::string to_string(const CardExpr& e) {
  switch (e.kind()) {
    case CardExpr::Kind::Aleph:
      return "aleph_" + std::to_string(e.index());
    case CardExpr::Kind::Var:
      return e.name();
    case CardExpr::Kind::Succ:
      return to_string(e.operand()) + "^+";
    case CardExpr::Kind::Beth:
      return "beth_" + std::to_string(e.index()) + "(" + to_string(e.operand()) + ")";
  }
  return "?";
}

}  // namespace hindlab
