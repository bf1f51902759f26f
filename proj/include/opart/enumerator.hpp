#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opart/seq.hpp"

namespace opart {

/// A strictly monotone total map from naturals to naturals, standing in for
/// an infinite subset of the naturals.  Finitely described as an explicit
/// prefix followed by a periodic tail: the tail contains x >= tail_start
/// with (x - tail_start) mod period in a fixed nonempty offset set.
///
/// The plain spec forms (all, arith, list;arith, evens, odds) have a single
/// offset; the multi-offset form keeps the family closed under residue
/// filters, intersections and differences, which the forcing machinery
/// needs when it refines one infinite set inside another.
class Enumerator {
 public:
  static Enumerator all();
  static Enumerator evens();
  static Enumerator odds();
  static Enumerator arithmetic(nat start, nat step);
  static Enumerator with_prefix(std::vector<nat> prefix, nat start, nat step);

  /// Mini-language: "all" | "evens" | "odds" | "arith:<start>,<step>"
  /// | "list:<a1>,<a2>,...;arith:<start>,<step>".  Throws on bad input.
  static Enumerator parse_spec(std::string_view text);

  /// k-th smallest member; k >= 1 when one_based, else k >= 0.
  nat nth(nat k, bool one_based = true) const;
  bool contains(nat x) const;
  /// Members below the horizon, in increasing order.
  std::vector<nat> below(nat horizon) const;
  nat count_in(nat lo, nat hi) const;

  /// Members of this set congruent to r mod m.  Throws std::domain_error
  /// when the result would be finite.
  Enumerator filter_residue(nat r, nat m) const;
  /// Members strictly greater than n.
  Enumerator above(nat n) const;
  /// This set minus finitely many points.
  Enumerator remove(const std::vector<nat>& points) const;
  /// Replaces every member below the first tail element after the given
  /// prefix by exactly that prefix.  The prefix must be strictly increasing
  /// and consist of members.
  Enumerator restrict_prefix(const std::vector<nat>& prefix) const;
  /// Explicit prefix followed by the part of tail above it.
  static Enumerator compose(std::vector<nat> prefix, const Enumerator& tail);

  /// nullopt when the intersection/difference is finite.
  std::optional<Enumerator> intersect(const Enumerator& other) const;
  std::optional<Enumerator> minus(const Enumerator& other) const;
  /// True iff all but finitely many members of this set belong to other.
  bool almost_subset_of(const Enumerator& other) const;

  std::string spec_string() const;

  const std::vector<nat>& prefix() const { return prefix_; }
  nat tail_start() const { return tail_start_; }
  nat period() const { return period_; }
  const std::vector<nat>& offsets() const { return offsets_; }

  bool operator==(const Enumerator& other) const = default;

 private:
  Enumerator(std::vector<nat> prefix, nat tail_start, nat period, std::vector<nat> offsets);
  void normalise();

  std::vector<nat> prefix_;   // strictly increasing, all below the first tail member
  nat tail_start_ = 0;        // first tail member (offset 0 always present)
  nat period_ = 1;
  std::vector<nat> offsets_;  // sorted, unique, in [0, period), contains 0
};

}  // namespace opart
