#include "opart/enumerator.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace opart {

namespace {

nat lcm_nat(nat a, nat b) { return a / std::gcd(a, b) * b; }

}  // namespace

Enumerator::Enumerator(std::vector<nat> prefix, nat tail_start, nat period,
                       std::vector<nat> offsets)
    : prefix_(std::move(prefix)), tail_start_(tail_start), period_(period),
      offsets_(std::move(offsets)) {
  normalise();
}

void Enumerator::normalise() {
  if (period_ == 0) throw std::invalid_argument("enumerator: zero period");
  std::sort(offsets_.begin(), offsets_.end());
  offsets_.erase(std::unique(offsets_.begin(), offsets_.end()), offsets_.end());
  if (offsets_.empty()) throw std::domain_error("enumerator: set would be finite");
  for (nat o : offsets_)
    if (o >= period_) throw std::invalid_argument("enumerator: offset out of range");
  // Shift so that tail_start is itself a member.
  if (offsets_[0] != 0) {
    nat shift = offsets_[0];
    tail_start_ += shift;
    for (nat& o : offsets_) o -= shift;
  }
  if (!strict_sorted(prefix_))
    throw std::invalid_argument("enumerator: prefix not strictly increasing");
  if (!prefix_.empty() && prefix_.back() >= tail_start_)
    throw std::invalid_argument("enumerator: prefix overlaps tail");
}

Enumerator Enumerator::all() { return Enumerator({}, 0, 1, {0}); }
Enumerator Enumerator::evens() { return Enumerator({}, 0, 2, {0}); }
Enumerator Enumerator::odds() { return Enumerator({}, 1, 2, {0}); }

Enumerator Enumerator::arithmetic(nat start, nat step) {
  if (step == 0) throw std::invalid_argument("enumerator: step must be positive");
  return Enumerator({}, start, step, {0});
}

Enumerator Enumerator::with_prefix(std::vector<nat> prefix, nat start, nat step) {
  if (step == 0) throw std::invalid_argument("enumerator: step must be positive");
  return Enumerator(std::move(prefix), start, step, {0});
}

nat Enumerator::nth(nat k, bool one_based) const {
  nat i = one_based ? k - 1 : k;  // zero-based index
  if (one_based && k == 0) throw std::invalid_argument("enumerator: 1-based index is 0");
  if (i < prefix_.size()) return prefix_[i];
  i -= prefix_.size();
  const nat m = offsets_.size();
  return tail_start_ + (i / m) * period_ + offsets_[i % m];
}

bool Enumerator::contains(nat x) const {
  if (x < tail_start_)
    return std::binary_search(prefix_.begin(), prefix_.end(), x);
  return std::binary_search(offsets_.begin(), offsets_.end(), (x - tail_start_) % period_);
}

std::vector<nat> Enumerator::below(nat horizon) const {
  std::vector<nat> out;
  for (nat k = 0;; ++k) {
    nat v = nth(k, false);
    if (v >= horizon) break;
    out.push_back(v);
  }
  return out;
}

nat Enumerator::count_in(nat lo, nat hi) const {
  nat n = 0;
  for (nat k = 0;; ++k) {
    nat v = nth(k, false);
    if (v >= hi) break;
    if (v >= lo) ++n;
  }
  return n;
}

Enumerator Enumerator::filter_residue(nat r, nat m) const {
  if (m == 0) throw std::invalid_argument("enumerator: zero modulus");
  std::vector<nat> prefix;
  for (nat p : prefix_)
    if (p % m == r % m) prefix.push_back(p);
  const nat period = lcm_nat(period_, m);
  std::vector<nat> offsets;
  for (nat t = 0; t < period; ++t)
    if (std::binary_search(offsets_.begin(), offsets_.end(), t % period_) &&
        (tail_start_ + t) % m == r % m)
      offsets.push_back(t);
  return Enumerator(std::move(prefix), tail_start_, period, std::move(offsets));
}

Enumerator Enumerator::above(nat n) const {
  std::vector<nat> prefix;
  for (nat p : prefix_)
    if (p > n) prefix.push_back(p);
  if (tail_start_ > n) return Enumerator(std::move(prefix), tail_start_, period_, offsets_);
  // Advance the tail start past n, folding skipped members into nothing:
  // members of the tail that are <= n are dropped, the pattern is kept.
  nat shift = ((n - tail_start_) / period_) * period_;
  nat base = tail_start_ + shift;
  std::vector<nat> keep;
  for (nat cycle = 0; cycle < 2; ++cycle)
    for (nat o : offsets_) {
      nat v = base + cycle * period_ + o;
      if (v > n) keep.push_back(v - base);
    }
  // keep is nonempty: some member of the next full period exceeds n.
  std::vector<nat> offsets;
  nat start = base + keep[0];
  for (nat t : keep) {
    nat rel = (base + t) - start;
    if (rel < period_) offsets.push_back(rel);
  }
  return Enumerator({}, start, period_, std::move(offsets));
}

Enumerator Enumerator::remove(const std::vector<nat>& points) const {
  if (points.empty()) return *this;
  nat top = *std::max_element(points.begin(), points.end());
  // New tail begins at the first member beyond all removed points.
  nat start = tail_start_;
  while (start <= top || !contains(start)) ++start;
  std::vector<nat> prefix;
  for (nat v : below(start))
    if (std::find(points.begin(), points.end(), v) == points.end()) prefix.push_back(v);
  Enumerator tail = above(start - 1);
  return Enumerator(std::move(prefix), tail.tail_start_, tail.period_, tail.offsets_);
}

Enumerator Enumerator::restrict_prefix(const std::vector<nat>& prefix) const {
  if (!strict_sorted(prefix))
    throw std::invalid_argument("enumerator: replacement prefix not strictly increasing");
  for (nat v : prefix)
    if (!contains(v)) throw std::invalid_argument("enumerator: replacement prefix not a subset");
  return compose(prefix, *this);
}

Enumerator Enumerator::compose(std::vector<nat> prefix, const Enumerator& tail) {
  if (!strict_sorted(prefix))
    throw std::invalid_argument("enumerator: prefix not strictly increasing");
  Enumerator rest = prefix.empty() ? tail : tail.above(prefix.back());
  return Enumerator(std::move(prefix), rest.tail_start_, rest.period_, rest.offsets_);
}

std::optional<Enumerator> Enumerator::intersect(const Enumerator& other) const {
  const nat period = lcm_nat(period_, other.period_);
  const nat base = std::max(tail_start_, other.tail_start_);
  std::vector<nat> offsets;
  for (nat t = 0; t < period; ++t)
    if (contains(base + t) && other.contains(base + t)) offsets.push_back(t);
  if (offsets.empty()) return std::nullopt;
  std::vector<nat> prefix;
  for (nat v : below(base + offsets[0]))
    if (other.contains(v)) prefix.push_back(v);
  return Enumerator(std::move(prefix), base + offsets[0], period,
                    [&] {
                      std::vector<nat> rel;
                      for (nat t : offsets) rel.push_back(t - offsets[0]);
                      for (auto it = rel.begin(); it != rel.end();)
                        it = (*it < period) ? it + 1 : rel.erase(it);
                      return rel;
                    }());
}

std::optional<Enumerator> Enumerator::minus(const Enumerator& other) const {
  const nat period = lcm_nat(period_, other.period_);
  const nat base = std::max(tail_start_, other.tail_start_);
  std::vector<nat> offsets;
  for (nat t = 0; t < period; ++t)
    if (contains(base + t) && !other.contains(base + t)) offsets.push_back(t);
  if (offsets.empty()) return std::nullopt;
  std::vector<nat> prefix;
  for (nat v : below(base + offsets[0]))
    if (!other.contains(v)) prefix.push_back(v);
  return Enumerator(std::move(prefix), base + offsets[0], period,
                    [&] {
                      std::vector<nat> rel;
                      for (nat t : offsets)
                        if (t - offsets[0] < period) rel.push_back(t - offsets[0]);
                      return rel;
                    }());
}

bool Enumerator::almost_subset_of(const Enumerator& other) const {
  const nat period = lcm_nat(period_, other.period_);
  const nat base = std::max(tail_start_, other.tail_start_);
  for (nat t = 0; t < period; ++t)
    if (contains(base + t) && !other.contains(base + t)) return false;
  return true;
}

std::string Enumerator::spec_string() const {
  std::ostringstream os;
  if (!prefix_.empty()) {
    os << "list:";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
      if (i) os << ",";
      os << prefix_[i];
    }
    os << ";";
  }
  if (offsets_.size() == 1) {
    os << "arith:" << tail_start_ << "," << period_;
  } else {
    os << "pattern:" << tail_start_ << "," << period_ << ",{";
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
      if (i) os << ",";
      os << offsets_[i];
    }
    os << "}";
  }
  return os.str();
}

namespace {

std::vector<nat> parse_nat_list(std::string_view text) {
  std::vector<nat> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw std::invalid_argument("set-spec: expected a number");
    nat v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + static_cast<nat>(text[pos++] - '0');
    out.push_back(v);
    if (pos < text.size()) {
      if (text[pos] != ',') throw std::invalid_argument("set-spec: expected ','");
      ++pos;
    }
  }
  return out;
}

}  // namespace

Enumerator Enumerator::parse_spec(std::string_view text) {
  if (text == "all") return all();
  if (text == "evens") return evens();
  if (text == "odds") return odds();
  if (text.substr(0, 6) == "arith:") {
    auto nums = parse_nat_list(text.substr(6));
    if (nums.size() != 2) throw std::invalid_argument("set-spec: arith wants start,step");
    return arithmetic(nums[0], nums[1]);
  }
  if (text.substr(0, 5) == "list:") {
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
      throw std::invalid_argument("set-spec: list needs ';arith:start,step' tail");
    auto prefix = parse_nat_list(text.substr(5, semi - 5));
    auto rest = text.substr(semi + 1);
    if (rest.substr(0, 6) != "arith:")
      throw std::invalid_argument("set-spec: list tail must be arith:start,step");
    auto nums = parse_nat_list(rest.substr(6));
    if (nums.size() != 2) throw std::invalid_argument("set-spec: arith wants start,step");
    return with_prefix(std::move(prefix), nums[0], nums[1]);
  }
  throw std::invalid_argument("set-spec: unknown form '" + std::string(text) + "'");
}

}  // namespace opart
