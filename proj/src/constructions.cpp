#include "opart/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace opart {

namespace {

/// Monotone read head over an enumerator.  Blocks are consecutive draws,
/// so every later block is element-wise larger than every earlier one.
struct Cursor {
  const Enumerator& N;
  nat index = 0;  // 0-based position of the next element

  explicit Cursor(const Enumerator& n) : N(n) {
    // Record values double as block lengths, so a leading 0 is useless;
    // working inside N minus {0} keeps every guarantee (subsets of N).
    if (N.nth(0, false) == 0) index = 1;
  }

  nat take_one() { return N.nth(index++, false); }

  Seq take(nat count) {
    Seq out;
    out.reserve(count);
    for (nat i = 0; i < count; ++i) out.push_back(take_one());
    return out;
  }

  Seq take_above(nat count, nat threshold) {
    while (N.nth(index, false) <= threshold) ++index;
    return take(count);
  }
};

void check_scheme_in(const Seq& scheme, const Enumerator& N, const std::string& what) {
  for (nat v : scheme)
    if (!N.contains(v))
      throw std::runtime_error(what + ": scheme element " + std::to_string(v) +
                               " lies outside the ground set");
}

}  // namespace

std::vector<std::pair<nat, nat>> specker_mk(nat k, nat m, const Enumerator& N) {
  if (k >= 4) throw std::invalid_argument("specker_mk: form index must be below 4");
  auto n = [&](nat i) { return N.nth(i); };  // 1-based
  std::vector<std::pair<nat, nat>> out;
  out.reserve(m);
  for (nat i = 1; i <= m; ++i) {
    switch (k) {
      case 0: out.emplace_back(n(2 * i - 1), n(2 * i)); break;      // disjoint blocks
      case 1: out.emplace_back(n(i), n(m + i)); break;              // overlapping ladder
      case 2: out.emplace_back(n(i), n(2 * m + 1 - i)); break;      // nested intervals
      case 3: out.emplace_back(n(1), n( 1 + i)); break;             // common first point
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      auto got = classify_form_u(out[i], out[j]);
      if (!got || got->form != k) {
        std::ostringstream os;
        os << "specker_mk: pair " << i << "," << j << " failed the form-" << k << " audit";
        throw std::runtime_error(os.str());
      }
      check_scheme_in(got->scheme, N, "specker_mk");
    }
  return out;
}

std::vector<std::pair<nat, nat>> specker_x(const Enumerator& N, nat count) {
  if (count == 0) return {};
  auto cantor = [](nat i, nat j) { return (i + j) * (i + j + 1) / 2 + j; };
  nat r = static_cast<nat>(std::ceil(std::sqrt(static_cast<double>(count)))) + 1;
  std::vector<std::pair<nat, nat>> grid;
  for (nat i = 1; i <= r; ++i)
    for (nat j = 1; j <= r; ++j)
      grid.emplace_back(N.nth(2 * i), N.nth(2 * cantor(i, j) + 1));
  std::sort(grid.begin(), grid.end());
  grid.resize(count);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      auto got = classify_form_u(grid[i], grid[j]);
      if (!got) {
        std::ostringstream os;
        os << "specker_x: pair " << i << "," << j << " admits no form";
        throw std::runtime_error(os.str());
      }
      check_scheme_in(got->scheme, N, "specker_x");
    }
  return grid;
}

BlockWitness larson_37(const Enumerator& N, nat m, nat l) {
  if (l == 0) throw std::invalid_argument("larson_37: form index must be positive");
  BlockWitness w;
  w.m = m;
  w.l = l;
  w.k = (l % 2 == 1) ? (l + 1) / 2 : l / 2;
  const nat k = w.k;
  const bool even_form = (l % 2 == 0);
  if (m == 0) return w;

  Cursor cur(N);
  w.d.resize(m);
  w.a.assign(m, std::vector<Seq>(k + 1));

  // Rows first: the record block d^i, then the opening block a^i_1 of the
  // exact length d^i_1.
  for (nat i = 0; i < m; ++i) {
    w.d[i] = cur.take(k + 1);
    w.a[i][0] = cur.take(w.d[i][0]);
  }
  // Middle columns in row order.
  for (nat j = 1; j < k; ++j)
    for (nat i = 0; i < m; ++i) w.a[i][j] = cur.take(w.d[i][j] - w.d[i][j - 1]);
  // Final column in reversed row order; this is what places the later
  // rows' tails below the earlier rows' tails, which the even forms need.
  for (nat i = m; i-- > 0;) w.a[i][k] = cur.take(w.d[i][k] - w.d[i][k - 1]);

  const nat cols = even_form ? k + 1 : k;
  for (nat i = 0; i < m; ++i) {
    std::vector<Seq> blocks(w.a[i].begin(), w.a[i].begin() + cols);
    w.elements.push_back(concat(blocks));
    if (!strict_sorted(w.elements.back()))
      throw std::runtime_error("larson_37: assembled element is not increasing");
  }

  for (nat i = 0; i < m; ++i)
    for (nat j = i + 1; j < m; ++j) {
      auto got = classify_form(w.elements[i], w.elements[j]);
      if (!got || got->form != l) {
        std::ostringstream os;
        os << "larson_37: rows " << i + 1 << "," << j + 1 << " classify to "
           << (got ? std::to_string(got->form) : std::string("no form")) << ", wanted " << l;
        throw std::runtime_error(os.str());
      }
      check_scheme_in(got->scheme, N, "larson_37");
    }
  return w;
}

TriangularFamilies larson_38_generate(const Enumerator& N, nat jmax, nat kmax) {
  if (jmax > kmax) throw std::invalid_argument("larson_38_generate: jmax exceeds kmax");
  TriangularFamilies fam;
  fam.jmax = jmax;
  fam.kmax = kmax;
  fam.generation_order = "d(j=1..jmax); a(j=1..jmax) with jump thresholds; b by k, then j, then i";
  if (jmax == 0) return fam;

  Cursor cur(N);
  fam.d.resize(jmax);
  fam.a.resize(jmax);
  fam.b.resize(jmax);

  // Record blocks first, so their values stay small.
  for (nat j = 1; j <= jmax; ++j) fam.d[j - 1] = cur.take(j);

  // Opening blocks.  Their lengths are ground-set members chosen so that
  // the assembled elements are shorter than their own least value, and so
  // that each later opening block is longer than every earlier block's
  // values; both are needed for the interleaving records to order.
  nat prev_bound = 0;
  for (nat j = 1; j <= jmax; ++j) {
    nat marker = N.nth(2 * j + 1);
    nat bound = std::max(marker, prev_bound);
    nat length = bound + 1;
    while (!N.contains(length)) ++length;
    fam.a[j - 1] = cur.take_above(length, length + fam.d[j - 1].back());
    prev_bound = std::max(length, fam.a[j - 1].back());
  }

  for (nat j = 1; j <= jmax; ++j)
    fam.b[j - 1].assign(kmax - j + 1, std::vector<Seq>(j));
  for (nat k = 1; k <= kmax; ++k)
    for (nat j = 1; j <= std::min<nat>(k, jmax); ++j)
      for (nat i = 1; i <= j; ++i) {
        nat len = (i == 1) ? fam.d[j - 1][0] : fam.d[j - 1][i - 1] - fam.d[j - 1][i - 2];
        fam.b[j - 1][k - j][i - 1] = cur.take(len);
      }
  return fam;
}

std::vector<Seq> larson_38_elements(const TriangularFamilies& fam, nat j) {
  if (j == 0 || j > fam.jmax)
    throw std::invalid_argument("larson_38_elements: stratum out of range");
  std::vector<Seq> out;
  std::vector<nat> tuple;
  auto emit = [&] {
    Seq e = fam.a[j - 1];
    for (nat i = 1; i <= j; ++i) {
      const Seq& blk = fam.b[j - 1][tuple[i - 1] - j][i - 1];
      e.insert(e.end(), blk.begin(), blk.end());
    }
    out.push_back(std::move(e));
  };
  std::function<void(nat)> rec = [&](nat from) {
    if (tuple.size() == j) {
      emit();
      return;
    }
    for (nat k = from; k <= fam.kmax; ++k) {
      tuple.push_back(k);
      rec(k + 1);
      tuple.pop_back();
    }
  };
  rec(j + 1);
  return out;
}

bool verify_order_embedding(const std::vector<Seq>& elems, nat j) {
  (void)j;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].size() != elems[0].size()) return false;
    if (!strict_sorted(elems[i])) return false;
    if (i > 0 && lenlex_cmp(elems[i - 1], elems[i]) != Ordering::less) return false;
  }
  return true;
}

ClassifyReport larson_38_classify_pairs(const TriangularFamilies& fam, const Enumerator& N) {
  ClassifyReport report;
  std::vector<std::vector<Seq>> strata(fam.jmax);
  for (nat j = 1; j <= fam.jmax; ++j) strata[j - 1] = larson_38_elements(fam, j);
  for (nat j = 1; j <= fam.jmax; ++j)
    for (nat r = j + 1; r <= fam.jmax; ++r)
      for (const Seq& x : strata[j - 1])
        for (const Seq& y : strata[r - 1]) {
          PairClassification pc;
          pc.j = j;
          pc.r = r;
          pc.x = x;
          pc.y = y;
          auto got = classify_form(x, y);
          if (!got || got->form == 0 || got->form > 2 * j + 1) {
            ++report.failures;
            pc.form = got ? got->form : 0;
            report.pairs.push_back(std::move(pc));
            continue;
          }
          pc.form = got->form;
          pc.scheme_in_ground = true;
          for (nat v : got->scheme)
            if (!N.contains(v)) pc.scheme_in_ground = false;
          if (!pc.scheme_in_ground) report.all_schemes_in_ground = false;
          pc.scheme_above_marker = !got->scheme.empty() && got->scheme[0] > N.nth(got->form);
          report.pairs.push_back(std::move(pc));
        }
  return report;
}

}  // namespace opart
