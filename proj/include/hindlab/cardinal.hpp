#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hindlab {

/// Symbolic cardinal: aleph_k, a variable, a successor, or beth_n(base).
/// 2^x is beth_1(x).
class CardExpr {
 public:
  enum class Kind { Aleph, Var, Succ, Beth };

  static CardExpr aleph(unsigned index);
  static CardExpr var(std::string name);
  static CardExpr succ(CardExpr inner);
  static CardExpr beth(unsigned n, CardExpr base);
  static CardExpr power_of_two(CardExpr exponent) { return beth(1, std::move(exponent)); }

  Kind kind() const { return node_->kind; }
  unsigned index() const { return node_->index; }  // aleph index or beth height
  const std::string& name() const { return node_->name; }
  const CardExpr& operand() const { return *node_->operand; }

  std::size_t depth() const;

  friend bool operator==(const CardExpr& a, const CardExpr& b);

 private:
  struct Node {
    Kind kind;
    unsigned index = 0;
    std::string name;
    std::shared_ptr<const CardExpr> operand;
  };
  explicit CardExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// beth_0(x) -> x, beth_m(beth_n(x)) -> beth_{m+n}(x), (aleph_k)^+ -> aleph_{k+1}.
CardExpr normalize(const CardExpr& e);
bool is_normal(const CardExpr& e);

enum class Verdict { LT, LE, EQ, GE, GT, Unknown };
std::string to_string(Verdict v);

/// Relation provable from: k < k^+, k < 2^k, monotonicity of beth and ^+,
/// aleph index order, aleph_0 <= every variable, and k < l => k^+ <= l.
/// Anything else is Unknown. `derivation`, when given, receives the steps.
Verdict cmp_provable(const CardExpr& a, const CardExpr& b,
                     std::vector<std::string>* derivation = nullptr);

struct ArrowStmt {
  CardExpr source;
  CardExpr target;
  unsigned exponent = 2;
  std::string colors;  // a cardinal expression or a finite count
};

std::string to_string(const ArrowStmt& s);

// beth_n(k)^+ -> (k^+)^{n+1}_k
ArrowStmt erdos_rado_instance(const CardExpr& kappa, unsigned n);

struct BoundTheorem {
  enum class Kind { VanDerWaerden, Folkman, Schur };
  Kind kind = Kind::VanDerWaerden;
  unsigned colors = 2;
  unsigned d = 1;  // progression d (d+1 terms) or Folkman generator count

  std::string describe() const;
  std::string finite_symbol() const;  // e.g. W(2;3)
};

// Supplies the finite length n the composition needs, or nullopt past its cap.
using FiniteOracle = std::function<std::optional<unsigned>(const BoundTheorem&)>;
FiniteOracle default_finite_oracle(unsigned cap = 64);

struct TheoremBound {
  std::optional<unsigned> n;
  std::optional<CardExpr> bound;  // beth_{n-1}(lambda)^+, normalized
  std::string text;               // printed bound, symbolic in n when n is unknown
};

TheoremBound theorem_bound(const BoundTheorem& theorem, const CardExpr& lambda,
                           const FiniteOracle& oracle);

struct ConsistencyReport {
  enum class Status { Consistent, Inconsistent, Indeterminate };
  Status status = Status::Indeterminate;
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> chain;
};

std::string to_string(ConsistencyReport::Status s);

// Checks that `upper` provably exceeds 2^lambda.
ConsistencyReport lower_bound_consistency(const CardExpr& lambda, const CardExpr& upper);

CardExpr parse_card_expr(std::string_view text);
std::string to_string(const CardExpr& e);

}  // namespace hindlab
