#include "opart/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace opart {

std::optional<FormU> classify_form_u(std::pair<nat, nat> x, std::pair<nat, nat> y) {
  if (x.first >= x.second || y.first >= y.second)
    throw std::invalid_argument("classify_form_u: pairs must be strictly increasing");
  if (x == y) throw std::invalid_argument("classify_form_u: pair of equal elements");
  if (x.first > y.first || (x.first == y.first && x.second > y.second)) std::swap(x, y);
  const nat a = x.first, b = x.second, c = y.first, d = y.second;
  auto result = [](nat form, std::initializer_list<nat> coords) {
    Seq scheme(coords);
    std::sort(scheme.begin(), scheme.end());
    scheme.erase(std::unique(scheme.begin(), scheme.end()), scheme.end());
    return FormU{form, std::move(scheme)};
  };
  if (a == c) return result(3, {a, b, d});
  if (b < c) return result(0, {a, b, c, d});
  if (c < b && b < d) return result(1, {a, b, c, d});
  if (d < b) return result(2, {a, b, c, d});
  return std::nullopt;  // b = c, or b = d with a != c
}

Seq scheme_of_blocks(const std::vector<Seq>& a_blocks, const std::vector<Seq>& b_blocks) {
  std::vector<Seq> head{acc_lengths(0, a_blocks), a_blocks[0], acc_lengths(0, b_blocks),
                        b_blocks[0]};
  std::vector<Seq> a_rest(a_blocks.begin() + 1, a_blocks.end());
  std::vector<Seq> b_rest(b_blocks.begin() + 1, b_blocks.end());
  Seq scheme = concat(head);
  Seq tail = interact(a_rest, b_rest);
  scheme.insert(scheme.end(), tail.begin(), tail.end());
  return scheme;
}

std::optional<std::pair<std::vector<Seq>, std::vector<Seq>>> merge_blocks(
    const std::vector<Seq>& as, const std::vector<Seq>& bs) {
  for (const Seq& blk : as)
    if (blk.empty()) return std::nullopt;
  for (const Seq& blk : bs)
    if (blk.empty()) return std::nullopt;
  if (!strict_sorted(concat(as)) || !strict_sorted(concat(bs))) return std::nullopt;
  for (const Seq& a : as)
    for (const Seq& b : bs)
      if (!less_seq(a, b) && !less_seq(b, a)) return std::nullopt;
  if (!as.empty() && !bs.empty() && !less_seq(as.front(), bs.front())) return std::nullopt;

  std::vector<Seq> us, vs;
  std::size_t i = 0, j = 0;
  while (i < as.size() || j < bs.size()) {
    if (i < as.size()) {
      Seq group;
      while (i < as.size() && (j >= bs.size() || less_seq(as[i], bs[j]))) {
        group.insert(group.end(), as[i].begin(), as[i].end());
        ++i;
      }
      // Nonempty: initially head(as) < head(bs), afterwards the previous
      // b-group stopped exactly because as[i] < bs[j] failed the other way.
      us.push_back(std::move(group));
    }
    if (j < bs.size()) {
      Seq group;
      while (j < bs.size() && (i >= as.size() || less_seq(bs[j], as[i]))) {
        group.insert(group.end(), bs[j].begin(), bs[j].end());
        ++j;
      }
      vs.push_back(std::move(group));
    }
  }
  return std::make_pair(std::move(us), std::move(vs));
}

std::optional<FormData> classify_form(const Seq& x, const Seq& y) {
  if (!strict_sorted(x) || !strict_sorted(y))
    throw std::invalid_argument("classify_form: inputs must be strictly increasing");
  if (x == y) throw std::invalid_argument("classify_form: pair of equal elements");

  if (x.size() == y.size()) return FormData{};  // form 0, no scheme

  const Seq& s = x.size() < y.size() ? x : y;
  const Seq& t = x.size() < y.size() ? y : x;
  if (s.empty()) return std::nullopt;  // blocks must be nonempty

  // Any valid decomposition is forced to cut both sequences at the maximal
  // runs of their interleaving, so classification reduces to one merge.
  std::vector<Seq> a_singles, b_singles;
  for (nat v : s) a_singles.push_back({v});
  for (nat v : t) b_singles.push_back({v});
  auto merged = merge_blocks(a_singles, b_singles);
  if (!merged) return std::nullopt;
  auto& [us, vs] = *merged;
  const nat ka = us.size(), kb = vs.size();
  if (kb > ka || ka > kb + 1) return std::nullopt;

  Seq scheme = scheme_of_blocks(us, vs);
  if (!strict_sorted(scheme)) return std::nullopt;

  FormData out;
  out.form = ka + kb - 1;
  out.k = kb;
  out.a_blocks = std::move(us);
  out.b_blocks = std::move(vs);
  out.c = acc_lengths(0, out.a_blocks);
  out.d = acc_lengths(0, out.b_blocks);
  out.scheme = std::move(scheme);
  return out;
}

Seq inter_scheme(nat l, const Seq& x, const Seq& y) {
  if (l == 0) throw std::invalid_argument("inter_scheme: form 0 has no scheme");
  auto data = classify_form(x, y);
  if (!data || data->form != l)
    throw std::invalid_argument("inter_scheme: pair does not have form " + std::to_string(l));
  return data->scheme;
}

}  // namespace opart
