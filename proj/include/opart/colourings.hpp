#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "opart/ordinal.hpp"

namespace opart {

/// A point of a materialised ordinal slice: its value together with its
/// position in the canonical enumeration pi of the ordinal by naturals.
struct TaggedOrdinal {
  Ordinal value;
  nat pi_index = 0;
};

/// The first `horizon` points of alpha under the canonical enumeration,
/// returned in increasing ordinal order.  The enumeration walks the CNF
/// degree strata (stratum d holds the points with leading exponent d)
/// round-robin, so initial slices of limit ordinals meet every stratum.
/// Requires alpha below w^w.
std::vector<TaggedOrdinal> materialise_domain(const Ordinal& alpha, nat horizon);

/// A two-colouring of the pairs of a materialised domain.
class PairColouring {
 public:
  enum class Kind { Sierpinski, Decomposable, Table, Rule };

  Kind kind() const { return kind_; }
  const std::vector<TaggedOrdinal>& domain() const { return domain_; }
  /// Colour of the pair of domain positions i != j; throws on i == j.
  int colour(std::size_t i, std::size_t j) const;
  nat horizon() const { return domain_.size(); }
  const Ordinal& beta() const { return beta_; }

  static PairColouring sierpinski(const Ordinal& alpha, nat horizon);
  static PairColouring decomposable(const Ordinal& beta, const Ordinal& gamma, nat horizon);
  /// Explicit table over {0..n-1}; missing pairs default to colour 0.
  static PairColouring table(nat n, std::map<std::pair<nat, nat>, int> entries);
  /// Named rule over {0..n-1}.
  static PairColouring rule(std::string name, nat n, std::function<int(nat, nat)> fn);

 private:
  Kind kind_ = Kind::Rule;
  std::vector<TaggedOrdinal> domain_;
  Ordinal beta_;  // split point for the decomposable kind
  std::map<std::pair<nat, nat>, int> table_;
  std::function<int(nat, nat)> fn_;
  std::string name_;
};

struct AuditReport {
  std::string kind;
  nat horizon = 0;
  nat checks_run = 0;
  std::vector<std::string> violations;
  nat longest_one_chain = 0;  // Sierpinski audit only
};

/// Exhaustively verifies on the slice that a subset is 1-monochromatic
/// exactly when pi is strictly decreasing along it (and 0-monochromatic
/// exactly when strictly increasing), for subsets up to the given size;
/// also reports the longest 1-monochromatic chain.
AuditReport audit_sierpinski(const PairColouring& col, nat max_subset_size = 4);

/// Exhaustively verifies on the slice that no 3-subset is
/// 1-monochromatic and that 0-monochromatic pairs never straddle the
/// split point.
AuditReport audit_decomposable(const PairColouring& col);

}  // namespace opart
