#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "opart/seq.hpp"

namespace opart {

/// Classification of a pair {(a,b),(c,d)} of increasing pairs of naturals,
/// taken with a <= c:
///   form 0:  a < b < c < d          (disjoint, one before the other)
///   form 1:  a < c < b < d          (overlapping)
///   form 2:  a < c < d < b          (nested)
///   form 3:  a = c, b != d          (shared first coordinate)
/// The scheme is the set {a,b,c,d} of coordinates, as an increasing
/// sequence (three elements for form 3).
struct FormU {
  nat form = 0;
  Seq scheme;
};

/// nullopt when a coincidence (b = c, or b = d with a != c) matches no
/// pattern.  Throws std::invalid_argument on equal or non-increasing pairs.
std::optional<FormU> classify_form_u(std::pair<nat, nat> x, std::pair<nat, nat> y);

/// Classification of a pair {x,y} of distinct strictly increasing
/// sequences.  Equal lengths give form 0.  Otherwise, writing s for the
/// shorter and t for the longer sequence, the pair has form l = ka+kb-1
/// when s splits into nonempty blocks a_1..a_ka and t into b_1..b_kb with
/// kb <= ka <= kb+1 such that, with the length records
///   c = acc_lengths(0, a-blocks),  d = acc_lengths(0, b-blocks),
/// the interleaving  c a_1 d b_1 a_2 b_2 ... is strictly increasing.
/// That interleaving is the interaction scheme of the pair.
struct FormData {
  nat form = 0;                 // l; 0 means equal lengths, no scheme
  nat k = 0;                    // l = 2k-1 or l = 2k
  std::vector<Seq> a_blocks;    // blocks of the shorter sequence
  std::vector<Seq> b_blocks;    // blocks of the longer sequence
  Seq c;
  Seq d;
  Seq scheme;
};

/// nullopt when no decomposition satisfies the ordering clauses.
/// Throws std::invalid_argument when x = y or either input is not
/// strictly increasing.
std::optional<FormData> classify_form(const Seq& x, const Seq& y);

/// The interaction scheme of a pair already known to have form l > 0.
/// Throws std::invalid_argument when l = 0 or the pair classifies
/// differently.
Seq inter_scheme(nat l, const Seq& x, const Seq& y);

/// Coalesces two lists of blocks into alternating groups us, vs with
///   concat(us[0]) < concat(vs[0]) < concat(us[1]) < ...
/// taking maximal runs at each step.  Requires nonempty blocks with both
/// concatenations strictly increasing, blocks pairwise comparable across
/// the two lists, and head(as) < head(bs) when both are nonempty; returns
/// nullopt when those ordering clauses fail.
std::optional<std::pair<std::vector<Seq>, std::vector<Seq>>> merge_blocks(
    const std::vector<Seq>& as, const std::vector<Seq>& bs);

/// Assembles c * a_1 * d * b_1 * a_2 * b_2 * ... from block lists.
Seq scheme_of_blocks(const std::vector<Seq>& a_blocks, const std::vector<Seq>& b_blocks);

}  // namespace opart
