#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opart/enumerator.hpp"
#include "opart/seq.hpp"

namespace opart {

/// A family of finite subsets of the naturals (identified with their
/// increasing enumerations).  Three kinds:
///   Explicit  -- a finite list of members;
///   Uniform   -- all k-element subsets of a ground set;
///   Rule      -- a stopping rule: members are the minimal accepted
///                prefixes along the ground set, with a depth bound so
///                horizon-truncated trees stay finite.
class Family {
 public:
  enum class Kind { Explicit, Uniform, Rule };

  static Family explicit_family(std::vector<Seq> members);
  static Family uniform(Enumerator ground, nat k);
  static Family rule_front(std::string name, std::function<bool(const Seq&)> accepted,
                           std::function<nat(nat)> depth_bound, Enumerator ground);
  /// The family of s with |s| = min(s) + 1.
  static Family schreier(Enumerator ground);

  Kind kind() const { return kind_; }
  const std::vector<Seq>& members() const;
  nat uniform_k() const;
  const Enumerator& ground() const;

  bool is_member(const Seq& s) const;
  /// Members all of whose elements lie below the horizon.
  std::vector<Seq> members_within(nat horizon) const;
  nat depth_bound(nat horizon) const;
  std::string describe() const;

 private:
  Family() = default;
  Kind kind_ = Kind::Explicit;
  std::vector<Seq> members_;
  nat k_ = 0;
  std::optional<Enumerator> ground_;
  std::string name_;
  std::function<bool(const Seq&)> accepted_;
  std::function<nat(nat)> depth_bound_;
};

/// S is an initial segment of T (as increasing sequences: a prefix).
bool init_segment(const Seq& S, const Seq& T);

/// No member is a proper initial segment of another.  Explicit families
/// are checked; uniform and rule families are thin by construction.
bool is_thin(const Family& F);

/// Members T of F with T a prefix of S, or S a prefix of T and T-S inside
/// M.  The horizon bounds the materialisation of uniform and rule members.
std::vector<Seq> comparables(const Seq& S, const Enumerator& M, const Family& F, nat horizon);

/// Exact forcing primitives; defined for explicit and uniform families
/// (they throw std::invalid_argument on rule fronts, whose acceptance
/// question is not decidable from the rule alone).
bool accepts(const Family& F, const Seq& S, const Enumerator& M);
bool rejects(const Family& F, const Seq& S, const Enumerator& M);
bool strongly_accepts(const Family& F, const Seq& S, const Enumerator& M);

enum class Decided { Rejects, StronglyAccepts, Undecided };
Decided decides(const Family& F, const Seq& S, const Enumerator& M);

enum class TriBool { False, True, Unknown };
/// Bounded replacement for "every infinite subset accepts": every subset
/// of M below the horizon with at least min_size elements accepts S.
/// min_size 0 selects the default ceil(horizon/4).  Unknown when the
/// search budget runs out.
TriBool strongly_accepts_bounded(const Family& F, const Seq& S, const Enumerator& M,
                                 nat horizon, nat min_size = 0,
                                 nat node_budget = 2000000);
Decided decides_bounded(const Family& F, const Seq& S, const Enumerator& M, nat horizon,
                        nat min_size = 0);

/// Refines M to an N of which every finite subset within the horizon is
/// decided (exact semantics; explicit and uniform families).
Enumerator refine_decides_subsets(const Family& F, const Enumerator& M, nat horizon);

/// The n in M below the horizon for which S + {n} is no longer strongly
/// accepted.  Requires strongly_accepts(F, S, M).
std::vector<nat> exceptional_extensions(const Family& F, const Seq& S, const Enumerator& M,
                                        nat horizon);

/// The tree of prefixes of members over ground elements below the
/// horizon, with ranks: members (and childless truncation leaves) have
/// rank 0, interior nodes 1 + max over children.
struct FrontTree {
  nat root_rank = 0;
  bool horizon_truncated = false;  // rank is a lower bound only
  nat node_count = 0;
  nat member_count = 0;
  nat horizon = 0;
  std::vector<std::pair<Seq, nat>> nodes;  // depth-first, with ranks
};

FrontTree front_tree(const Family& F, nat horizon);
nat front_rank(const Family& F, nat horizon);

/// F_n = { s above n : {n} + s in F }, a front on the ground set above n.
/// Requires a non-trivial front (the empty sequence is not a member).
Family derived_front(const Family& F, nat n);

struct NashWilliamsResult {
  nat colour = 0;
  std::vector<nat> prefix;     // homogeneous set, materialised below the horizon
  bool verified = false;
  bool approximation = true;   // horizon-bounded run
  nat horizon = 0;
  nat members_checked = 0;
  std::string diagnostics;
};

/// Bounded homogenisation driver: refines M so that every member of F
/// inside the returned prefix has one colour.  Follows the combinatorial
/// forcing route (decide all small subsets, prune extension-breaking
/// points, then split on whether the empty set is rejected for the
/// colour-0 subfamily); more than two colours are handled by iterating
/// the two-colour case.  The output is re-verified member by member;
/// verified = false (with diagnostics) when the horizon is too small.
NashWilliamsResult nash_williams_bounded(const Family& F,
                                         const std::function<nat(const Seq&)>& colour, nat r,
                                         const Enumerator& M, nat horizon, nat min_size = 0);

/// Exhaustive finite partition oracle: does every 2-colouring of the
/// pairs of {0..n-1} contain a 0-monochromatic beta-set or a
/// 1-monochromatic gamma-set?  witness holds a counterexample colouring
/// (edge colours indexed by pair_index) when the answer is no.
struct RamseyResult {
  bool holds = true;
  nat n = 0, beta = 0, gamma = 0;
  std::vector<int> witness;
};

RamseyResult ramsey_bruteforce(nat n, nat beta, nat gamma, nat cap = 8,
                               const std::function<void(nat, nat)>& progress = nullptr);

std::size_t pair_index(nat n, nat u, nat v);

/// Lexicographically first size-subset of the universe whose pairs all
/// have the given colour.
std::optional<std::vector<nat>> find_monochromatic(
    const std::function<int(nat, nat)>& colour_of, const std::vector<nat>& universe, nat size,
    int colour);

}  // namespace opart
