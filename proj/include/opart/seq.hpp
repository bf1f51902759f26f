#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opart/ordinal.hpp"

namespace opart {

/// A finite sequence of naturals.  Members of the universe W are the
/// strictly increasing ones; intermediate results of the block combinators
/// may be unsorted and are checked where it matters.
using Seq = std::vector<nat>;

bool strict_sorted(const Seq& s);

/// s < t blockwise: every element of s is below every element of t.
/// Vacuously true when either is empty.
bool less_seq(const Seq& s, const Seq& t);

/// Total order on W: first by length, then lexicographically.
Ordering lenlex_cmp(const Seq& s, const Seq& t);

/// Running totals of block lengths, offset by acc:
///   acc_lengths(acc, [])        = []
///   acc_lengths(acc, [l | ls])  = (acc+|l|) : acc_lengths(acc+|l|, ls)
Seq acc_lengths(nat acc, const std::vector<Seq>& blocks);

Seq concat(const std::vector<Seq>& blocks);

/// Alternating concatenation x1 y1 x2 y2 ...; the longer tail is appended
/// whole once the other side runs out.
Seq interact(const std::vector<Seq>& xss, const std::vector<Seq>& yss);

/// Rank of a length-n strictly increasing sequence within the
/// lexicographically ordered stratum W(n), as an ordinal below w^n:
///   sum over i < n of w^(n-1-i) * f_i,  f_0 = s_0, f_i = s_i - s_(i-1) - 1.
/// Throws std::invalid_argument unless |s| = n and s is strictly increasing.
Ordinal w_rank(const Seq& s, nat n);

/// Rank within W = union of the W(n), ordered by length then lex:
/// the strata offsets 1 + w + w^2 + ... are summed with ordinal addition.
Ordinal ww_rank(const Seq& s);

std::string seq_to_string(const Seq& s);        // "[2,5,9]"
Seq parse_seq(std::string_view text);           // throws on malformed input

}  // namespace opart
