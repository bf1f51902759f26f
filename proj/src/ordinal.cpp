#include "opart/ordinal.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace opart {

Ordinal::Ordinal() = default;
Ordinal::Ordinal(const Ordinal&) = default;
Ordinal::Ordinal(Ordinal&&) noexcept = default;
Ordinal& Ordinal::operator=(const Ordinal&) = default;
Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
Ordinal::~Ordinal() = default;

Ordinal::Ordinal(nat n) {
  if (n > 0) terms_.push_back(Term{Ordinal{}, n});
}

Ordinal Ordinal::omega() {
  Ordinal w;
  w.terms_.push_back(Term{Ordinal{1}, 1});
  return w;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::optional<nat> Ordinal::as_finite() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coefficient;
  return std::nullopt;
}

const Ordinal& Ordinal::degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree: zero has no leading exponent");
  return terms_[0].exponent;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw std::invalid_argument("from_terms: zero coefficient");
    if (i + 1 < terms.size() &&
        ord_cmp(terms[i].exponent, terms[i + 1].exponent) != Ordering::greater)
      throw std::invalid_argument("from_terms: exponents not strictly decreasing");
  }
  Ordinal a;
  a.terms_ = std::move(terms);
  return a;
}

Ordinal Ordinal::normalise(const std::vector<Term>& terms) {
  Ordinal acc;
  for (const Term& t : terms) {
    if (t.coefficient == 0) continue;
    Ordinal piece;
    piece.terms_.push_back(t);
    acc = ord_add(acc, piece);
  }
  return acc;
}

Ordering ord_cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    Ordering e = ord_cmp(ta[i].exponent, tb[i].exponent);
    if (e != Ordering::equal) return e;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? Ordering::less : Ordering::greater;
  }
  // A normal form extending another by further (smaller) terms is larger.
  if (ta.size() != tb.size())
    return ta.size() < tb.size() ? Ordering::less : Ordering::greater;
  return Ordering::equal;
}

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = b.terms()[0].exponent;
  std::vector<Ordinal::Term> out;
  nat merged = b.terms()[0].coefficient;
  for (const auto& t : a.terms()) {
    Ordering c = ord_cmp(t.exponent, lead);
    if (c == Ordering::greater) {
      out.push_back(t);
    } else if (c == Ordering::equal) {
      merged += t.coefficient;
      break;
    } else {
      break;  // lower terms of a are absorbed
    }
  }
  out.push_back(Ordinal::Term{lead, merged});
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  Ordinal acc;
  for (const auto& t : b.terms()) {
    Ordinal part;
    if (t.exponent.is_zero()) {
      // a * n: multiply the leading coefficient, keep the tail.
      std::vector<Ordinal::Term> ts = a.terms();
      ts[0].coefficient *= t.coefficient;
      part = Ordinal::from_terms(std::move(ts));
    } else {
      // a * w^e * c = w^(deg(a)+e) * c for e > 0.
      part = Ordinal::from_terms(
          {Ordinal::Term{ord_add(a.degree(), t.exponent), t.coefficient}});
    }
    acc = ord_add(acc, part);
  }
  return acc;
}

Ordinal omega_pow(const Ordinal& b) {
  return Ordinal::from_terms({Ordinal::Term{b, 1}});
}

bool is_indecomposable(const Ordinal& a) {
  if (a.is_zero()) throw std::invalid_argument("is_indecomposable: zero");
  return a.terms().size() == 1 && a.terms()[0].coefficient == 1;
}

std::pair<Ordinal, Ordinal> decompose(const Ordinal& a) {
  if (a.is_zero() || is_indecomposable(a))
    throw std::invalid_argument("decompose: ordinal is indecomposable");
  std::vector<Ordinal::Term> ts = a.terms();
  Ordinal gamma = omega_pow(ts.back().exponent);
  if (--ts.back().coefficient == 0) ts.pop_back();
  return {Ordinal::from_terms(std::move(ts)), gamma};
}

// --- printing ------------------------------------------------------------

namespace {

// An exponent prints without parentheses when it is a plain natural or
// exactly "w"; anything else is wrapped.
std::string exponent_string(const Ordinal& e) {
  if (auto n = e.as_finite()) return std::to_string(*n);
  if (e == Ordinal::omega()) return "w";
  return "(" + e.to_string() + ")";
}

}  // namespace

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += "+";
    const Term& t = terms_[i];
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (!(t.exponent == Ordinal{1})) out += "^" + exponent_string(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

// --- parsing -------------------------------------------------------------

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "ordinal parse error at position " << pos << ": " << what;
    throw std::invalid_argument(os.str());
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::optional<char> peek() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    return text[pos];
  }

  nat number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    nat v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<nat>(text[pos] - '0');
      ++pos;
    }
    return v;
  }

  Ordinal atom() {
    auto c = peek();
    if (!c) fail("expected exponent");
    if (*c == '(') {
      eat('(');
      Ordinal e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (*c == 'w') {
      eat('w');
      return Ordinal::omega();
    }
    return Ordinal{number()};
  }

  Ordinal term() {
    auto c = peek();
    if (!c) fail("expected term");
    if (*c != 'w') return Ordinal{number()};
    eat('w');
    Ordinal exponent{1};
    if (eat('^')) exponent = atom();
    nat coefficient = 1;
    if (eat('*')) {
      coefficient = number();
      if (coefficient == 0) fail("coefficient must be positive");
    }
    return ord_mul(omega_pow(exponent), Ordinal{coefficient});
  }

  Ordinal expr() {
    Ordinal acc = term();
    while (eat('+')) acc = ord_add(acc, term());
    return acc;
  }

  Ordinal parse_all() {
    Ordinal v = expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return v;
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  return Parser{text}.parse_all();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == Ordering::equal; }
bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }
bool operator<(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == Ordering::less; }
bool operator<=(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) != Ordering::greater; }
bool operator>(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) == Ordering::greater; }
bool operator>=(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) != Ordering::less; }
Ordinal operator+(const Ordinal& a, const Ordinal& b) { return ord_add(a, b); }
Ordinal operator*(const Ordinal& a, const Ordinal& b) { return ord_mul(a, b); }

}  // namespace opart
