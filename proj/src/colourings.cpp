#include "opart/colourings.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace opart {

namespace {

bool below_omega_to_omega(const Ordinal& alpha) {
  for (const auto& t : alpha.terms())
    if (!t.exponent.is_finite()) return false;
  return true;
}

/// Lazy enumeration of one CNF-degree stratum of alpha: the points with
/// leading exponent d, generated level by level (level = largest
/// coefficient) and lexicographically within a level.
struct StratumGen {
  nat d = 0;
  Ordinal alpha;
  std::optional<nat> size_limit;  // nullopt: infinite stratum
  nat emitted = 0;
  nat level = 0;
  std::vector<Ordinal> queue;
  std::size_t queue_pos = 0;

  bool exhausted() const { return size_limit && emitted >= *size_limit; }

  std::optional<Ordinal> next() {
    if (exhausted()) return std::nullopt;
    if (d == 0) {
      Ordinal v{emitted};
      ++emitted;
      return v;
    }
    while (queue_pos >= queue.size()) {
      ++level;
      fill_level();
    }
    ++emitted;
    return queue[queue_pos++];
  }

  void fill_level() {
    queue.clear();
    queue_pos = 0;
    // Coefficient vectors (c_d,...,c_0), c_d >= 1, entries <= level, with
    // at least one entry equal to level, in lexicographic order.
    std::vector<nat> combo(d + 1, 0);
    combo[0] = 1;
    while (true) {
      nat top = *std::max_element(combo.begin(), combo.end());
      if (top == level) {
        std::vector<Ordinal::Term> terms;
        for (nat i = 0; i <= d; ++i)
          if (combo[i] > 0) terms.push_back({Ordinal{d - i}, combo[i]});
        Ordinal v = Ordinal::from_terms(std::move(terms));
        if (ord_cmp(v, alpha) == Ordering::less) queue.push_back(std::move(v));
      }
      // Odometer step.
      std::size_t pos = d + 1;
      while (pos-- > 0) {
        if (combo[pos] < level) {
          ++combo[pos];
          for (std::size_t q = pos + 1; q <= d; ++q) combo[q] = 0;
          if (combo[0] == 0) combo[0] = 1;
          break;
        }
        if (pos == 0) return;
      }
    }
  }
};

}  // namespace

std::vector<TaggedOrdinal> materialise_domain(const Ordinal& alpha, nat horizon) {
  if (!below_omega_to_omega(alpha))
    throw std::invalid_argument("materialise_domain: ordinal must lie below w^w");
  std::vector<TaggedOrdinal> out;
  if (alpha.is_zero() || horizon == 0) return out;

  nat top_degree = 0;
  if (!alpha.is_finite()) top_degree = *alpha.degree().as_finite();

  std::vector<StratumGen> strata;
  for (nat d = 0; d <= top_degree; ++d) {
    StratumGen g;
    g.d = d;
    g.alpha = alpha;
    if (d == 0 && alpha.is_finite()) {
      g.size_limit = *alpha.as_finite();
    } else if (d == top_degree && d > 0) {
      const auto& lead = alpha.terms()[0];
      if (lead.coefficient == 1) {
        std::vector<Ordinal::Term> rest(alpha.terms().begin() + 1, alpha.terms().end());
        Ordinal tail = Ordinal::from_terms(rest);
        if (auto fin = tail.as_finite()) g.size_limit = *fin;  // possibly 0
      }
    }
    strata.push_back(std::move(g));
  }

  nat pi = 0;
  bool progress = true;
  while (out.size() < horizon && progress) {
    progress = false;
    for (auto& g : strata) {
      if (out.size() >= horizon) break;
      if (auto v = g.next()) {
        out.push_back(TaggedOrdinal{*v, pi++});
        progress = true;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TaggedOrdinal& a, const TaggedOrdinal& b) {
    return ord_cmp(a.value, b.value) == Ordering::less;
  });
  return out;
}

int PairColouring::colour(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("pair colouring: pairs of distinct points only");
  switch (kind_) {
    case Kind::Sierpinski: {
      const auto& a = domain_.at(i);
      const auto& b = domain_.at(j);
      bool value_less = ord_cmp(a.value, b.value) == Ordering::less;
      bool pi_greater = a.pi_index > b.pi_index;
      return value_less == pi_greater ? 1 : 0;
    }
    case Kind::Decomposable: {
      bool lo_i = ord_cmp(domain_.at(i).value, beta_) == Ordering::less;
      bool lo_j = ord_cmp(domain_.at(j).value, beta_) == Ordering::less;
      return lo_i == lo_j ? 0 : 1;
    }
    case Kind::Table: {
      nat lo = std::min<nat>(i, j), hi = std::max<nat>(i, j);
      auto it = table_.find({lo, hi});
      return it == table_.end() ? 0 : it->second;
    }
    case Kind::Rule:
      return fn_(i, j);
  }
  return 0;
}

PairColouring PairColouring::sierpinski(const Ordinal& alpha, nat horizon) {
  if (alpha.is_finite())
    throw std::invalid_argument("sierpinski: needs an infinite ordinal");
  PairColouring c;
  c.kind_ = Kind::Sierpinski;
  c.domain_ = materialise_domain(alpha, horizon);
  c.name_ = "sierpinski";
  return c;
}

PairColouring PairColouring::decomposable(const Ordinal& beta, const Ordinal& gamma,
                                          nat horizon) {
  if (beta.is_zero() || gamma.is_zero())
    throw std::invalid_argument("decomposable: both parts must be positive");
  PairColouring c;
  c.kind_ = Kind::Decomposable;
  c.beta_ = beta;
  c.domain_ = materialise_domain(ord_add(beta, gamma), horizon);
  c.name_ = "decomposable";
  return c;
}

PairColouring PairColouring::table(nat n, std::map<std::pair<nat, nat>, int> entries) {
  PairColouring c;
  c.kind_ = Kind::Table;
  for (nat i = 0; i < n; ++i) c.domain_.push_back(TaggedOrdinal{Ordinal{i}, i});
  c.table_ = std::move(entries);
  c.name_ = "table";
  return c;
}

PairColouring PairColouring::rule(std::string name, nat n, std::function<int(nat, nat)> fn) {
  PairColouring c;
  c.kind_ = Kind::Rule;
  for (nat i = 0; i < n; ++i) c.domain_.push_back(TaggedOrdinal{Ordinal{i}, i});
  c.fn_ = std::move(fn);
  c.name_ = std::move(name);
  return c;
}

namespace {

void for_each_subset(nat n, nat size, const std::function<void(const std::vector<nat>&)>& fn) {
  std::vector<nat> cur;
  std::function<void(nat)> rec = [&](nat from) {
    if (cur.size() == size) {
      fn(cur);
      return;
    }
    for (nat v = from; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

AuditReport audit_sierpinski(const PairColouring& col, nat max_subset_size) {
  if (col.kind() != PairColouring::Kind::Sierpinski)
    throw std::invalid_argument("audit_sierpinski: wrong colouring kind");
  AuditReport rep;
  rep.kind = "sierpinski";
  rep.horizon = col.horizon();
  const nat n = col.horizon();
  // Domain is in increasing ordinal order; chains read off the pi indices.
  for (nat size = 2; size <= max_subset_size; ++size) {
    for_each_subset(n, size, [&](const std::vector<nat>& S) {
      ++rep.checks_run;
      bool mono1 = true, mono0 = true;
      for (std::size_t i = 0; i < S.size() && (mono0 || mono1); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
          int c = col.colour(S[i], S[j]);
          (c == 1 ? mono0 : mono1) = false;
        }
      bool pi_desc = true, pi_asc = true;
      for (std::size_t i = 0; i + 1 < S.size(); ++i) {
        nat a = col.domain()[S[i]].pi_index, b = col.domain()[S[i + 1]].pi_index;
        if (a < b) pi_desc = false;
        if (a > b) pi_asc = false;
      }
      if (mono1 != pi_desc || mono0 != pi_asc) {
        std::ostringstream os;
        os << "subset {";
        for (nat v : S) os << v << ",";
        os << "}: mono/pi equivalence broken";
        rep.violations.push_back(os.str());
      }
    });
  }
  // Longest 1-monochromatic chain = longest strictly decreasing pi run.
  std::vector<nat> best(n, 1);
  for (nat i = 0; i < n; ++i)
    for (nat j = 0; j < i; ++j)
      if (col.domain()[j].pi_index > col.domain()[i].pi_index)
        best[i] = std::max(best[i], best[j] + 1);
  for (nat i = 0; i < n; ++i) rep.longest_one_chain = std::max(rep.longest_one_chain, best[i]);
  return rep;
}

AuditReport audit_decomposable(const PairColouring& col) {
  if (col.kind() != PairColouring::Kind::Decomposable)
    throw std::invalid_argument("audit_decomposable: wrong colouring kind");
  AuditReport rep;
  rep.kind = "decomposable";
  rep.horizon = col.horizon();
  const nat n = col.horizon();
  for_each_subset(n, 3, [&](const std::vector<nat>& S) {
    ++rep.checks_run;
    if (col.colour(S[0], S[1]) == 1 && col.colour(S[0], S[2]) == 1 &&
        col.colour(S[1], S[2]) == 1) {
      std::ostringstream os;
      os << "1-monochromatic triple {" << S[0] << "," << S[1] << "," << S[2] << "}";
      rep.violations.push_back(os.str());
    }
  });
  for (nat i = 0; i < n; ++i)
    for (nat j = i + 1; j < n; ++j) {
      ++rep.checks_run;
      if (col.colour(i, j) != 0) continue;
      bool lo_i = ord_cmp(col.domain()[i].value, col.beta()) == Ordering::less;
      bool lo_j = ord_cmp(col.domain()[j].value, col.beta()) == Ordering::less;
      if (lo_i != lo_j) {
        std::ostringstream os;
        os << "0-coloured pair {" << i << "," << j << "} straddles the split";
        rep.violations.push_back(os.str());
      }
    }
  return rep;
}

}  // namespace opart
