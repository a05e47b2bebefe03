#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hindlab {

/// An ordinal below epsilon_0 in Cantor normal form:
/// w^e1*c1 + w^e2*c2 + ... with e1 > e2 > ... and every ci >= 1.
/// The empty term list is 0.
class Ordinal {
 public:
  struct Term;

  Ordinal();
  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  // Builds from terms, throwing if they are not in Cantor normal form.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const;
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  std::uint64_t finite_value() const;  // only meaningful when is_finite()

  // Re-checks strict exponent descent and positive coefficients, recursively.
  bool well_formed() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul_nat(const Ordinal& a, std::uint64_t k);
Ordinal omega_pow(const Ordinal& beta);
Ordinal predecessor(const Ordinal& a);  // a must be a successor

// (g + w^(b+1))[n] = g + w^b*n and (g + w^l)[n] = g + w^(l[n]) for limit l.
Ordinal fundamental_sequence(const Ordinal& limit, std::uint64_t n);

std::string to_string(const Ordinal& a);
Ordinal parse_ordinal(std::string_view text);

/// Finite sets of positive integers, strictly increasing.
using IntSet = std::vector<unsigned>;

// Throws InvalidElement unless the set is strictly increasing and positive.
void validate_int_set(std::span<const unsigned> set);

// One move of the largeness game: resolve limits at `element`, then take
// the successor step that consumes it.
Ordinal consume(Ordinal state, unsigned element);

bool is_alpha_large(std::span<const unsigned> set, const Ordinal& alpha);

struct LargePiece {
  std::optional<std::size_t> index;  // first omega^beta-large piece
  std::string counterexample;        // full instance when no piece qualifies
};

// pieces must partition `set`, and `set` must be (w^beta * (pieces+1))-large.
LargePiece partition_large_piece(std::span<const unsigned> set, const std::vector<IntSet>& pieces,
                                 const Ordinal& beta);

// Lexicographically least w^beta-large B within [min_element, bound].
std::optional<IntSet> large_length_set(const Ordinal& beta, unsigned min_element, unsigned bound);

}  // namespace hindlab
