#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opart {

using nat = std::uint64_t;

/// An ordinal below epsilon_0 in Cantor normal form:
///
///     w^e0 * c0  +  w^e1 * c1  +  ...  +  w^en * cn
///
/// with e0 > e1 > ... > en (ordinals, recursively in the same form) and
/// every coefficient ci >= 1.  The empty term list denotes 0, and finite
/// ordinals are a single term with exponent 0.
class Ordinal {
 public:
  struct Term;  // (exponent, coefficient); defined below the class

  Ordinal();            // zero
  Ordinal(nat n);       // finite ordinals convert implicitly
  Ordinal(const Ordinal&);
  Ordinal(Ordinal&&) noexcept;
  Ordinal& operator=(const Ordinal&);
  Ordinal& operator=(Ordinal&&) noexcept;
  ~Ordinal();

  static Ordinal omega();
  /// Builds from a term list that must already satisfy the invariants;
  /// throws std::invalid_argument otherwise.
  static Ordinal from_terms(std::vector<Term> terms);
  /// Interprets an arbitrary term list as the ordinal sum of its terms,
  /// taken left to right, and returns the normal form.
  static Ordinal normalise(const std::vector<Term>& terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  std::optional<nat> as_finite() const;
  /// Leading exponent; throws on zero.
  const Ordinal& degree() const;

  std::string to_string() const;
  /// Parses the literal grammar
  ///   expr := term ('+' term)* ; term := 'w' ('^' atom)? ('*' nat)? | nat
  ///   atom := nat | 'w' | '(' expr ')'
  /// Whitespace is insignificant.  Throws std::invalid_argument with the
  /// offending position on bad input.
  static Ordinal parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  nat coefficient = 1;
};

enum class Ordering { less, equal, greater };

Ordering ord_cmp(const Ordinal& a, const Ordinal& b);
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& b);

/// True iff a is additively indecomposable, i.e. a power of omega.
/// Throws std::invalid_argument on zero.
bool is_indecomposable(const Ordinal& a);

/// Splits a decomposable ordinal as a = beta + gamma with beta, gamma < a.
/// Canonical choice: gamma is one copy of the last CNF term, beta the rest.
/// Throws std::invalid_argument when a is indecomposable.
std::pair<Ordinal, Ordinal> decompose(const Ordinal& a);

bool operator==(const Ordinal& a, const Ordinal& b);
bool operator!=(const Ordinal& a, const Ordinal& b);
bool operator<(const Ordinal& a, const Ordinal& b);
bool operator<=(const Ordinal& a, const Ordinal& b);
bool operator>(const Ordinal& a, const Ordinal& b);
bool operator>=(const Ordinal& a, const Ordinal& b);
Ordinal operator+(const Ordinal& a, const Ordinal& b);
Ordinal operator*(const Ordinal& a, const Ordinal& b);

}  // namespace opart
