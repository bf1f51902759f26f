#include "opart/forcing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace opart {

// --- Family ----------------------------------------------------------------

Family Family::explicit_family(std::vector<Seq> members) {
  for (const Seq& m : members)
    if (!strict_sorted(m))
      throw std::invalid_argument("family: member not strictly increasing");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Family f;
  f.kind_ = Kind::Explicit;
  f.members_ = std::move(members);
  return f;
}

Family Family::uniform(Enumerator ground, nat k) {
  Family f;
  f.kind_ = Kind::Uniform;
  f.ground_ = std::move(ground);
  f.k_ = k;
  return f;
}

Family Family::rule_front(std::string name, std::function<bool(const Seq&)> accepted,
                          std::function<nat(nat)> depth_bound, Enumerator ground) {
  Family f;
  f.kind_ = Kind::Rule;
  f.name_ = std::move(name);
  f.accepted_ = std::move(accepted);
  f.depth_bound_ = std::move(depth_bound);
  f.ground_ = std::move(ground);
  return f;
}

Family Family::schreier(Enumerator ground) {
  return rule_front(
      "schreier", [](const Seq& s) { return !s.empty() && s.size() == s[0] + 1; },
      [](nat horizon) { return horizon + 1; }, std::move(ground));
}

const std::vector<Seq>& Family::members() const {
  if (kind_ != Kind::Explicit) throw std::invalid_argument("family: not explicit");
  return members_;
}

nat Family::uniform_k() const {
  if (kind_ != Kind::Uniform) throw std::invalid_argument("family: not uniform");
  return k_;
}

const Enumerator& Family::ground() const {
  if (!ground_) throw std::invalid_argument("family: no ground set");
  return *ground_;
}

bool Family::is_member(const Seq& s) const {
  switch (kind_) {
    case Kind::Explicit:
      return std::binary_search(members_.begin(), members_.end(), s);
    case Kind::Uniform: {
      if (s.size() != k_ || !strict_sorted(s)) return false;
      for (nat v : s)
        if (!ground_->contains(v)) return false;
      return true;
    }
    case Kind::Rule: {
      if (!strict_sorted(s)) return false;
      for (nat v : s)
        if (!ground_->contains(v)) return false;
      if (!accepted_(s)) return false;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (accepted_(Seq(s.begin(), s.begin() + j))) return false;
      return true;
    }
  }
  return false;
}

nat Family::depth_bound(nat horizon) const {
  switch (kind_) {
    case Kind::Explicit: {
      nat d = 0;
      for (const Seq& m : members_) d = std::max<nat>(d, m.size());
      return d;
    }
    case Kind::Uniform:
      return k_;
    case Kind::Rule:
      return depth_bound_(horizon);
  }
  return horizon;
}

namespace {

// Materialisation budget: rule fronts can have exponentially many nodes
// below a horizon, so bail out with a nameable error instead of hanging.
constexpr nat kMaterialiseBudget = 4000000;

[[noreturn]] void horizon_overflow(const char* what) {
  throw std::domain_error(std::string(what) +
                          ": horizon cap exceeded, too many nodes below this horizon");
}

void collect_uniform(const std::vector<nat>& pool, nat k, std::size_t from, Seq& cur,
                     std::vector<Seq>& out, nat& budget) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (budget-- == 0) horizon_overflow("members_within");
    cur.push_back(pool[i]);
    collect_uniform(pool, k, i + 1, cur, out, budget);
    cur.pop_back();
  }
}

void collect_rule(const Family& F, const std::vector<nat>& pool, nat depth, std::size_t from,
                  Seq& cur, std::vector<Seq>& out, nat& budget) {
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (budget-- == 0) horizon_overflow("members_within");
    cur.push_back(pool[i]);
    if (F.is_member(cur))
      out.push_back(cur);
    else if (cur.size() < depth)
      collect_rule(F, pool, depth, i + 1, cur, out, budget);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Seq> Family::members_within(nat horizon) const {
  switch (kind_) {
    case Kind::Explicit: {
      std::vector<Seq> out;
      for (const Seq& m : members_)
        if (m.empty() || m.back() < horizon) out.push_back(m);
      return out;
    }
    case Kind::Uniform: {
      std::vector<Seq> out;
      Seq cur;
      nat budget = kMaterialiseBudget;
      if (k_ == 0) return {Seq{}};
      collect_uniform(ground_->below(horizon), k_, 0, cur, out, budget);
      return out;
    }
    case Kind::Rule: {
      std::vector<Seq> out;
      Seq cur;
      nat budget = kMaterialiseBudget;
      if (is_member(Seq{})) out.push_back(Seq{});
      collect_rule(*this, ground_->below(horizon), depth_bound_(horizon), 0, cur, out, budget);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

std::string Family::describe() const {
  switch (kind_) {
    case Kind::Explicit: {
      std::ostringstream os;
      os << "explicit:{";
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ",";
        os << seq_to_string(members_[i]);
      }
      os << "}";
      return os.str();
    }
    case Kind::Uniform: {
      std::ostringstream os;
      os << "uniform:" << k_ << " on " << ground_->spec_string();
      return os.str();
    }
    case Kind::Rule:
      return name_ + " on " + ground_->spec_string();
  }
  return "?";
}

// --- forcing primitives ------------------------------------------------------

bool init_segment(const Seq& S, const Seq& T) {
  if (S.size() > T.size()) return false;
  return std::equal(S.begin(), S.end(), T.begin());
}

bool is_thin(const Family& F) {
  if (F.kind() != Family::Kind::Explicit) return true;
  const auto& ms = F.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (i != j && init_segment(ms[i], ms[j])) return false;
  return true;
}

namespace {

bool subset_of_enum(const Seq& s, const Enumerator& M, std::size_t from = 0) {
  for (std::size_t i = from; i < s.size(); ++i)
    if (!M.contains(s[i])) return false;
  return true;
}

/// Elements of ground & M above the given point, counted up to `need`; exact.
nat common_above(const Enumerator& A, const Enumerator& M, nat above, nat need) {
  if (A.intersect(M)) return need;  // infinite intersection: always enough
  // Finite intersection: everything common lies below the periodic bound.
  nat bound = std::max(A.tail_start(), M.tail_start()) +
              A.period() / std::gcd(A.period(), M.period()) * M.period();
  nat count = 0;
  for (nat v : M.below(bound))
    if (v > above && A.contains(v)) ++count;
  return std::min(count, need);
}

void require_exact_kind(const Family& F, const char* op) {
  if (F.kind() == Family::Kind::Rule)
    throw std::invalid_argument(std::string(op) + ": rule fronts have no exact semantics");
}

}  // namespace

std::vector<Seq> comparables(const Seq& S, const Enumerator& M, const Family& F, nat horizon) {
  std::vector<Seq> out;
  const std::vector<Seq> pool =
      F.kind() == Family::Kind::Explicit ? F.members() : F.members_within(horizon);
  for (const Seq& T : pool) {
    if (init_segment(T, S) ||
        (init_segment(S, T) && subset_of_enum(T, M, S.size())))
      out.push_back(T);
  }
  return out;
}

bool accepts(const Family& F, const Seq& S, const Enumerator& M) {
  require_exact_kind(F, "accepts");
  if (!strict_sorted(S)) throw std::invalid_argument("accepts: S not strictly increasing");
  if (F.kind() == Family::Kind::Explicit) {
    for (const Seq& T : F.members())
      if (init_segment(T, S) || (init_segment(S, T) && subset_of_enum(T, M, S.size())))
        return true;
    return false;
  }
  const nat k = F.uniform_k();
  const Enumerator& A = F.ground();
  if (k <= S.size())
    return subset_of_enum(Seq(S.begin(), S.begin() + k), A);
  if (!subset_of_enum(S, A)) return false;
  nat need = k - S.size();
  nat above = S.empty() ? 0 : S.back();
  // Extension elements must avoid max(S) itself when S is empty and 0 is common.
  if (S.empty()) {
    // "above 0" would wrongly skip the element 0; count from the bottom.
    if (auto common = A.intersect(M)) return true;
    nat bound = std::max(A.tail_start(), M.tail_start()) +
                A.period() / std::gcd(A.period(), M.period()) * M.period();
    nat count = 0;
    for (nat v : M.below(bound))
      if (A.contains(v)) ++count;
    return count >= need;
  }
  return common_above(A, M, above, need) >= need;
}

bool rejects(const Family& F, const Seq& S, const Enumerator& M) { return !accepts(F, S, M); }

bool strongly_accepts(const Family& F, const Seq& S, const Enumerator& M) {
  require_exact_kind(F, "strongly_accepts");
  if (!strict_sorted(S))
    throw std::invalid_argument("strongly_accepts: S not strictly increasing");
  if (F.kind() == Family::Kind::Explicit) {
    // A finite family is strongly accepted exactly when some member is a
    // prefix of S: otherwise an infinite subset can dodge one element of
    // each of the finitely many nonempty differences.
    for (const Seq& T : F.members())
      if (init_segment(T, S)) return true;
    return false;
  }
  const nat k = F.uniform_k();
  const Enumerator& A = F.ground();
  if (k <= S.size()) return subset_of_enum(Seq(S.begin(), S.begin() + k), A);
  return subset_of_enum(S, A) && M.almost_subset_of(A);
}

Decided decides(const Family& F, const Seq& S, const Enumerator& M) {
  if (rejects(F, S, M)) return Decided::Rejects;
  if (strongly_accepts(F, S, M)) return Decided::StronglyAccepts;
  return Decided::Undecided;
}

// --- bounded strong acceptance ----------------------------------------------

namespace {

/// Difference sets U - S over members U extending S within the pool.
std::vector<std::vector<nat>> difference_sets(const std::vector<Seq>& members, const Seq& S,
                                              const std::set<nat>& pool) {
  std::vector<std::vector<nat>> out;
  for (const Seq& U : members) {
    if (U.size() <= S.size() || !init_segment(S, U)) continue;
    std::vector<nat> diff(U.begin() + S.size(), U.end());
    bool inside = true;
    for (nat v : diff)
      if (!pool.count(v)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(std::move(diff));
  }
  // Keep only inclusion-minimal sets; hitting those hits everything.
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<std::vector<nat>> minimal;
  for (const auto& d : out) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (std::includes(d.begin(), d.end(), m.begin(), m.end())) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(d);
  }
  return minimal;
}

bool member_prefix_of(const std::vector<Seq>& members, const Seq& S) {
  for (const Seq& T : members)
    if (init_segment(T, S)) return true;
  return false;
}

/// Is there a hitting set of size <= limit?  Branch-and-bound on the
/// smallest unhit set; nodes counts down a shared budget.
bool hitting_set_within(std::vector<std::vector<nat>> sets, nat limit, nat& budget,
                        bool& unknown) {
  if (sets.empty()) return true;
  if (limit == 0) return false;
  if (budget == 0) {
    unknown = true;
    return false;
  }
  --budget;
  auto smallest = std::min_element(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  std::vector<nat> branch = *smallest;
  for (nat v : branch) {
    std::vector<std::vector<nat>> rest;
    for (const auto& d : sets)
      if (!std::binary_search(d.begin(), d.end(), v)) rest.push_back(d);
    if (hitting_set_within(std::move(rest), limit - 1, budget, unknown)) return true;
    if (unknown) return false;
  }
  return false;
}

}  // namespace

TriBool strongly_accepts_bounded(const Family& F, const Seq& S, const Enumerator& M,
                                 nat horizon, nat min_size, nat node_budget) {
  if (!strict_sorted(S))
    throw std::invalid_argument("strongly_accepts_bounded: S not strictly increasing");
  const nat q = min_size ? min_size : (horizon + 3) / 4;
  std::vector<nat> ground = M.below(horizon);
  if (ground.size() < q) return TriBool::True;  // no candidate subset at all
  auto members = F.members_within(horizon);
  if (member_prefix_of(members, S)) return TriBool::True;
  std::set<nat> pool(ground.begin(), ground.end());
  auto diffs = difference_sets(members, S, pool);
  if (diffs.empty()) return TriBool::False;  // the whole ground set rejects S
  // A rejecting C may keep every point that is in no difference set, so the
  // question is whether ground minus a minimum hitting set reaches size q.
  nat limit = ground.size() - q;  // rejecting C of size >= q  <=>  hits <= limit
  bool unknown = false;
  bool found = hitting_set_within(std::move(diffs), limit, node_budget, unknown);
  if (unknown) return TriBool::Unknown;
  return found ? TriBool::False : TriBool::True;
}

Decided decides_bounded(const Family& F, const Seq& S, const Enumerator& M, nat horizon,
                        nat min_size) {
  bool accepted = false;
  for (const Seq& T : F.members_within(horizon))
    if (init_segment(T, S) || (init_segment(S, T) && subset_of_enum(T, M, S.size()))) {
      accepted = true;
      break;
    }
  if (!accepted) return Decided::Rejects;
  if (strongly_accepts_bounded(F, S, M, horizon, min_size) == TriBool::True)
    return Decided::StronglyAccepts;
  return Decided::Undecided;
}

// --- refinement ---------------------------------------------------------------

Enumerator refine_decides_subsets(const Family& F, const Enumerator& M, nat horizon) {
  require_exact_kind(F, "refine_decides_subsets");
  if (F.kind() == Family::Kind::Uniform) {
    if (auto common = M.intersect(F.ground())) return *common;
    auto rest = M.minus(F.ground());
    // M is infinite, so at least one of the two parts is.
    return *rest;
  }

  const auto& members = F.members();
  nat top = 0;
  for (const Seq& U : members)
    if (!U.empty()) top = std::max(top, U.back());

  Enumerator A = M;
  std::vector<nat> chosen;
  std::set<nat> chosen_set;

  auto scan = [&] {
    // Reject every undecided prefix-of-a-member whose difference is still
    // reachable; cutting past the member keeps the cut permanent.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Seq& U : members) {
        if (U.empty()) continue;
        for (std::size_t j = 0; j < U.size(); ++j) {
          Seq T(U.begin(), U.begin() + j);
          bool in_chosen = true;
          for (nat v : T)
            if (!chosen_set.count(v)) {
              in_chosen = false;
              break;
            }
          if (!in_chosen || member_prefix_of(members, T)) continue;
          bool reachable = true;
          for (std::size_t i = j; i < U.size(); ++i)
            if (!chosen_set.count(U[i]) && !A.contains(U[i])) {
              reachable = false;
              break;
            }
          if (reachable) {
            A = A.above(U.back());
            changed = true;
          }
        }
      }
    }
  };

  scan();
  while (true) {
    nat next = A.nth(1);
    if (next >= horizon && next > top) break;
    chosen.push_back(next);
    chosen_set.insert(next);
    A = A.above(next);
    scan();
  }
  return Enumerator::compose(chosen, A);
}

std::vector<nat> exceptional_extensions(const Family& F, const Seq& S, const Enumerator& M,
                                        nat horizon) {
  if (!strongly_accepts(F, S, M))
    throw std::invalid_argument("exceptional_extensions: S is not strongly accepted");
  std::vector<nat> out;
  for (nat v : M.below(horizon)) {
    if (std::binary_search(S.begin(), S.end(), v)) continue;
    Seq T = S;
    T.insert(std::upper_bound(T.begin(), T.end(), v), v);
    if (!strongly_accepts(F, T, M)) out.push_back(v);
  }
  return out;
}

// --- front trees -----------------------------------------------------------

namespace {

struct TreeBuilder {
  const Family& F;
  nat horizon;
  std::vector<nat> pool;  // ground elements below horizon
  nat depth_cap;
  FrontTree tree;
  nat budget = kMaterialiseBudget;

  bool is_node_child(const Seq& s) const {
    switch (F.kind()) {
      case Family::Kind::Explicit: {
        for (const Seq& m : F.members())
          if (init_segment(s, m)) return true;
        return false;
      }
      case Family::Kind::Uniform:
        return s.size() <= F.uniform_k();
      case Family::Kind::Rule: {
        if (s.size() > depth_cap) return false;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (F.is_member(Seq(s.begin(), s.begin() + j))) return false;
        return true;
      }
    }
    return false;
  }

  nat rank(Seq& s) {
    if (budget-- == 0) horizon_overflow("front_tree");
    if (F.is_member(s)) {
      tree.nodes.emplace_back(s, 0);
      ++tree.node_count;
      ++tree.member_count;
      return 0;
    }
    nat best = 0;
    bool any = false;
    nat from = s.empty() ? 0 : s.back() + 1;
    for (nat v : pool) {
      if (v < from) continue;
      s.push_back(v);
      if (is_node_child(s)) {
        any = true;
        best = std::max(best, rank(s) + 1);
      }
      s.pop_back();
    }
    ++tree.node_count;
    tree.nodes.emplace_back(s, any ? best : 0);
    return any ? best : 0;
  }
};

}  // namespace

FrontTree front_tree(const Family& F, nat horizon) {
  TreeBuilder b{F, horizon, {}, 0, {}};
  b.pool = (F.kind() == Family::Kind::Explicit)
               ? [&] {
                   std::set<nat> vals;
                   for (const Seq& m : F.members())
                     for (nat v : m)
                       if (v < horizon) vals.insert(v);
                   return std::vector<nat>(vals.begin(), vals.end());
                 }()
               : F.ground().below(horizon);
  b.depth_cap = F.depth_bound(horizon);
  b.tree.horizon = horizon;
  Seq root;
  b.tree.root_rank = b.rank(root);
  switch (F.kind()) {
    case Family::Kind::Explicit: {
      for (const Seq& m : F.members())
        if (!m.empty() && m.back() >= horizon) b.tree.horizon_truncated = true;
      break;
    }
    case Family::Kind::Uniform:
      b.tree.horizon_truncated = F.ground().count_in(0, horizon) < F.uniform_k();
      break;
    case Family::Kind::Rule:
      b.tree.horizon_truncated = true;  // never claim an exact rank for a rule front
      break;
  }
  return b.tree;
}

nat front_rank(const Family& F, nat horizon) { return front_tree(F, horizon).root_rank; }

Family derived_front(const Family& F, nat n) {
  switch (F.kind()) {
    case Family::Kind::Explicit: {
      for (const Seq& m : F.members())
        if (m.empty())
          throw std::invalid_argument("derived_front: trivial front has no derivative");
      std::vector<Seq> derived;
      for (const Seq& m : F.members())
        if (m.front() == n) derived.emplace_back(m.begin() + 1, m.end());
      return Family::explicit_family(std::move(derived));
    }
    case Family::Kind::Uniform: {
      if (F.uniform_k() == 0)
        throw std::invalid_argument("derived_front: trivial front has no derivative");
      return Family::uniform(F.ground().above(n), F.uniform_k() - 1);
    }
    case Family::Kind::Rule: {
      if (F.is_member(Seq{}))
        throw std::invalid_argument("derived_front: trivial front has no derivative");
      const Family base = F;  // copy captures the rule
      auto accepted = [base, n](const Seq& s) {
        Seq t;
        t.reserve(s.size() + 1);
        t.push_back(n);
        t.insert(t.end(), s.begin(), s.end());
        // Minimal acceptance of {n}+s relative to prefixes through n.
        return base.is_member(t);
      };
      std::ostringstream name;
      name << F.describe() << "/" << n;
      return Family::rule_front(name.str(), accepted, [](nat h) { return h + 1; },
                                F.ground().above(n));
    }
  }
  throw std::logic_error("derived_front: unreachable");
}

// --- bounded Nash-Williams driver -------------------------------------------

namespace {

bool seq_subset_of(const Seq& s, const std::set<nat>& pool) {
  for (nat v : s)
    if (!pool.count(v)) return false;
  return true;
}

/// Large subset of the pool containing no difference set of a member
/// extending S; empty when S extends a member.  Greedy over several
/// element orders (by value, by reverse value, and fewest-difference-sets
/// first), keeping the best: a single ascending pass can poison itself by
/// taking one low point that meets every difference set.
std::vector<nat> greedy_rejecting(const std::vector<Seq>& members, const Seq& S,
                                  const std::vector<nat>& pool) {
  if (member_prefix_of(members, S)) return {};
  std::set<nat> pool_set(pool.begin(), pool.end());
  auto diffs = difference_sets(members, S, pool_set);
  if (diffs.empty()) return pool;

  auto sweep = [&](const std::vector<nat>& order) {
    std::vector<nat> chosen;
    std::set<nat> chosen_set;
    for (nat v : order) {
      bool completes = false;
      for (const auto& d : diffs) {
        if (!std::binary_search(d.begin(), d.end(), v)) continue;
        bool rest_in = true;
        for (nat u : d)
          if (u != v && !chosen_set.count(u)) {
            rest_in = false;
            break;
          }
        if (rest_in) {
          completes = true;
          break;
        }
      }
      if (!completes) {
        chosen.push_back(v);
        chosen_set.insert(v);
      }
    }
    return chosen;
  };

  std::vector<nat> best = sweep(pool);
  std::vector<nat> reversed(pool.rbegin(), pool.rend());
  std::vector<nat> by_degree = pool;
  std::map<nat, nat> degree;
  for (const auto& d : diffs)
    for (nat v : d) ++degree[v];
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](nat a, nat b) { return degree[a] < degree[b]; });
  for (const auto& order : {reversed, by_degree}) {
    auto got = sweep(order);
    if (got.size() > best.size()) best = got;
  }
  std::sort(best.begin(), best.end());
  return best;
}

/// No substantial rejecting subset of the pool => treat S as strongly
/// accepted.  The threshold scales with the pool so that points near the
/// horizon cannot ride on a vacuously small remainder.
bool claim_strongly_accepted(const std::vector<Seq>& members, const Seq& S,
                             const std::vector<nat>& pool_above) {
  if (member_prefix_of(members, S)) return true;
  nat threshold = std::max<nat>(2, (pool_above.size() + 1) / 2);
  return greedy_rejecting(members, S, pool_above).size() < threshold;
}

std::vector<nat> elements_above(const std::vector<nat>& pool, nat v) {
  std::vector<nat> out;
  for (nat u : pool)
    if (u > v) out.push_back(u);
  return out;
}

/// All distinct proper prefixes of the given members.
std::vector<Seq> proper_prefixes(const std::vector<Seq>& members) {
  std::set<Seq> out;
  for (const Seq& U : members)
    for (std::size_t j = 0; j < U.size(); ++j) out.insert(Seq(U.begin(), U.begin() + j));
  return std::vector<Seq>(out.begin(), out.end());
}

struct CoreResult {
  std::vector<nat> prefix;
  bool claims_homogeneous;  // true: colour of the subfamily; false: it is excluded
};

/// Two-colour core: refine the ground so that the subfamily either owns
/// every member inside the result or is shut out of it entirely.
CoreResult homogenise_against(const std::vector<Seq>& sub_members,
                              const std::vector<nat>& ground, nat q) {
  // Phase 1: decide every admissible prefix while admitting points.
  std::vector<nat> admitted;
  std::vector<nat> pool = ground;
  auto prefixes = proper_prefixes(sub_members);

  // The empty set first: refine the pool if it can still be rejected.
  if (!member_prefix_of(sub_members, Seq{})) {
    auto C = greedy_rejecting(sub_members, Seq{}, pool);
    if (C.size() >= q) pool = C;
  }
  std::set<nat> admitted_set;
  while (!pool.empty()) {
    nat v = pool.front();
    pool.erase(pool.begin());
    // Prefixes whose largest element is v and whose rest is admitted.
    for (const Seq& T : prefixes) {
      if (T.empty() || T.back() != v) continue;
      if (!seq_subset_of(Seq(T.begin(), T.end() - 1), admitted_set)) continue;
      if (member_prefix_of(sub_members, T)) continue;
      auto diffs_pool = pool;  // only points above v can matter
      auto C = greedy_rejecting(sub_members, T, diffs_pool);
      if (C.size() >= q) pool = C;  // refine: T is now rejected
      // otherwise T is treated as strongly accepted
    }
    admitted.push_back(v);
    admitted_set.insert(v);
  }

  // Phase 2: drop points that break strong acceptance of an accepted set.
  std::vector<nat> kept;
  std::set<nat> kept_set;
  for (nat v : admitted) {
    bool ok = true;
    std::vector<Seq> candidates{Seq{}};
    for (const Seq& T : prefixes)
      if (!T.empty() && T.back() < v && seq_subset_of(T, kept_set)) candidates.push_back(T);
    for (const Seq& T : candidates) {
      auto above_T = elements_above(admitted, T.empty() ? 0 : T.back());
      if (T.empty()) above_T = admitted;
      if (!claim_strongly_accepted(sub_members, T, above_T)) continue;
      Seq Tv = T;
      Tv.push_back(v);
      if (!claim_strongly_accepted(sub_members, Tv, elements_above(admitted, v))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      kept.push_back(v);
      kept_set.insert(v);
    }
  }

  // Split on whether the subfamily still reaches into the result.
  bool has_member_inside = false;
  for (const Seq& U : sub_members)
    if (seq_subset_of(U, kept_set)) {
      has_member_inside = true;
      break;
    }
  return CoreResult{kept, has_member_inside};
}

}  // namespace

NashWilliamsResult nash_williams_bounded(const Family& F,
                                         const std::function<nat(const Seq&)>& colour, nat r,
                                         const Enumerator& M, nat horizon, nat min_size) {
  if (r == 0) throw std::invalid_argument("nash_williams_bounded: need at least one colour");
  if (!is_thin(F)) throw std::invalid_argument("nash_williams_bounded: family is not thin");
  const nat q = min_size ? min_size : std::max<nat>(1, (horizon + 3) / 4);

  NashWilliamsResult res;
  res.horizon = horizon;

  std::vector<nat> ground = M.below(horizon);
  std::vector<Seq> all_members;
  {
    std::set<nat> gset(ground.begin(), ground.end());
    for (const Seq& m : F.members_within(horizon))
      if (seq_subset_of(m, gset)) all_members.push_back(m);
  }

  auto members_inside = [&](const std::vector<nat>& g) {
    std::set<nat> gset(g.begin(), g.end());
    std::vector<Seq> out;
    for (const Seq& m : all_members)
      if (seq_subset_of(m, gset)) out.push_back(m);
    return out;
  };

  auto verify = [&](const std::vector<nat>& g, nat claimed) -> bool {
    res.members_checked = 0;
    for (const Seq& m : members_inside(g)) {
      ++res.members_checked;
      if (colour(m) != claimed) {
        std::ostringstream os;
        os << "verification failed: member " << seq_to_string(m) << " has colour "
           << colour(m) << ", claimed " << claimed;
        res.diagnostics = os.str();
        return false;
      }
    }
    return true;
  };

  for (nat lo = 0; lo + 1 < r; ++lo) {
    std::vector<Seq> cur = members_inside(ground);
    std::vector<Seq> sub;
    for (const Seq& m : cur)
      if (colour(m) == lo) sub.push_back(m);
    CoreResult core = homogenise_against(sub, ground, q);
    if (core.prefix.size() < q) {
      std::ostringstream os;
      os << "horizon too small: refined set has " << core.prefix.size()
         << " points, need at least " << q;
      res.diagnostics = os.str();
      res.colour = lo;
      res.prefix = core.prefix;
      return res;
    }
    if (core.claims_homogeneous) {
      res.colour = lo;
      res.prefix = core.prefix;
      res.verified = verify(core.prefix, lo);
      return res;
    }
    // Colour lo is shut out; continue inside the refined set.
    ground = core.prefix;
    for (const Seq& m : members_inside(ground))
      if (colour(m) == lo) {
        res.diagnostics = "refinement failed to exclude colour " + std::to_string(lo);
        res.colour = lo;
        res.prefix = ground;
        return res;
      }
  }
  res.colour = r - 1;
  res.prefix = ground;
  res.verified = verify(ground, r - 1);
  return res;
}

// --- finite partition oracle --------------------------------------------------

std::size_t pair_index(nat n, nat u, nat v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>((2 * n - 1 - u) * u / 2 + v - u - 1);
}

namespace {

/// Monochromatic subset search over a bitmask colouring, specialised by
/// size for the hot loop of the exhaustive search.
bool has_mono_bits(nat bits, nat n, nat size, int colour) {
  const nat edges = n * (n - 1) / 2;
  auto edge = [&](nat u, nat v) -> int { return (bits >> pair_index(n, u, v)) & 1; };
  if (size == 2)
    return colour == 0 ? bits != ((nat{1} << edges) - 1) : bits != 0;
  if (size == 3) {
    for (nat u = 0; u < n; ++u)
      for (nat v = u + 1; v < n; ++v) {
        if (edge(u, v) != colour) continue;
        for (nat w = v + 1; w < n; ++w)
          if (edge(u, w) == colour && edge(v, w) == colour) return true;
      }
    return false;
  }
  std::vector<nat> cur;
  std::function<bool(nat)> grow = [&](nat from) -> bool {
    if (cur.size() == size) return true;
    for (nat v = from; v < n; ++v) {
      bool fits = true;
      for (nat u : cur)
        if (edge(u, v) != colour) {
          fits = false;
          break;
        }
      if (!fits) continue;
      cur.push_back(v);
      if (grow(v + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  return grow(0);
}

}  // namespace

RamseyResult ramsey_bruteforce(nat n, nat beta, nat gamma, nat cap,
                               const std::function<void(nat, nat)>& progress) {
  if (n > cap) throw std::invalid_argument("ramsey_bruteforce: n exceeds the configured cap");
  if (n < 2 || beta < 2 || gamma < 2 || beta > n || gamma > n)
    throw std::invalid_argument("ramsey_bruteforce: need 2 <= beta,gamma <= n <= cap");
  RamseyResult res;
  res.n = n;
  res.beta = beta;
  res.gamma = gamma;
  const nat edges = n * (n - 1) / 2;
  // When the two target sizes agree, swapping colours maps witnesses to
  // witnesses, so the colour of edge {0,1} can be fixed.
  const bool prune = (beta == gamma);
  const nat free_bits = prune ? edges - 1 : edges;
  const nat total = nat{1} << free_bits;
  for (nat mask = 0; mask < total; ++mask) {
    if (progress && (mask & 0xFFFFF) == 0) progress(mask, total);
    nat bits = prune ? (mask << 1) : mask;
    if (!has_mono_bits(bits, n, beta, 0) && !has_mono_bits(bits, n, gamma, 1)) {
      res.holds = false;
      res.witness.resize(edges);
      for (nat e = 0; e < edges; ++e) res.witness[e] = (bits >> e) & 1;
      return res;
    }
  }
  return res;
}

std::optional<std::vector<nat>> find_monochromatic(
    const std::function<int(nat, nat)>& colour_of, const std::vector<nat>& universe, nat size,
    int colour) {
  std::vector<nat> cur;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) -> bool {
    if (cur.size() == size) return true;
    for (std::size_t i = from; i < universe.size(); ++i) {
      bool fits = true;
      for (nat u : cur)
        if (colour_of(u, universe[i]) != colour) {
          fits = false;
          break;
        }
      if (!fits) continue;
      cur.push_back(universe[i]);
      if (grow(i + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  if (size == 0) return std::vector<nat>{};
  if (grow(0)) return cur;
  return std::nullopt;
}

}  // namespace opart
