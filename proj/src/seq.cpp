#include "opart/seq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace opart {

bool strict_sorted(const Seq& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

bool less_seq(const Seq& s, const Seq& t) {
  if (s.empty() || t.empty()) return true;
  return *std::max_element(s.begin(), s.end()) < *std::min_element(t.begin(), t.end());
}

Ordering lenlex_cmp(const Seq& s, const Seq& t) {
  if (s.size() != t.size()) return s.size() < t.size() ? Ordering::less : Ordering::greater;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != t[i]) return s[i] < t[i] ? Ordering::less : Ordering::greater;
  return Ordering::equal;
}

Seq acc_lengths(nat acc, const std::vector<Seq>& blocks) {
  Seq out;
  out.reserve(blocks.size());
  for (const Seq& b : blocks) {
    acc += b.size();
    out.push_back(acc);
  }
  return out;
}

Seq concat(const std::vector<Seq>& blocks) {
  Seq out;
  for (const Seq& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Seq interact(const std::vector<Seq>& xss, const std::vector<Seq>& yss) {
  Seq out;
  const std::size_t n = std::min(xss.size(), yss.size());
  for (std::size_t i = 0; i < n; ++i) {
    out.insert(out.end(), xss[i].begin(), xss[i].end());
    out.insert(out.end(), yss[i].begin(), yss[i].end());
  }
  for (std::size_t i = n; i < xss.size(); ++i) out.insert(out.end(), xss[i].begin(), xss[i].end());
  for (std::size_t i = n; i < yss.size(); ++i) out.insert(out.end(), yss[i].begin(), yss[i].end());
  return out;
}

Ordinal w_rank(const Seq& s, nat n) {
  if (s.size() != n) throw std::invalid_argument("w_rank: length mismatch");
  if (!strict_sorted(s)) throw std::invalid_argument("w_rank: sequence not strictly increasing");
  Ordinal rank;
  for (nat i = 0; i < n; ++i) {
    nat digit = (i == 0) ? s[0] : s[i] - s[i - 1] - 1;
    if (digit > 0)
      rank = ord_add(rank, ord_mul(omega_pow(Ordinal{n - 1 - i}), Ordinal{digit}));
  }
  return rank;
}

Ordinal ww_rank(const Seq& s) {
  const nat n = s.size();
  Ordinal offset;
  for (nat i = 0; i < n; ++i) offset = ord_add(offset, omega_pow(Ordinal{i}));
  return ord_add(offset, w_rank(s, n));
}

std::string seq_to_string(const Seq& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

Seq parse_seq(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    std::ostringstream os;
    os << "sequence parse error at position " << pos << ": " << what;
    throw std::invalid_argument(os.str());
  };
  skip();
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  Seq out;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected a number");
      nat v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + static_cast<nat>(text[pos++] - '0');
      out.push_back(v);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  skip();
  if (pos != text.size()) fail("trailing input");
  return out;
}

}  // namespace opart
