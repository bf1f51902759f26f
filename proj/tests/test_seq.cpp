#include <stdexcept>
#include <algorithm>
#include <random>

#include "doctest.h"
#include "opart/seq.hpp"
#include "oracles.hpp"

using namespace opart;

namespace {

std::vector<Seq> all_increasing(nat length, nat bound) {
  std::vector<Seq> out;
  Seq cur;
  std::function<void(nat)> rec = [&](nat from) {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (nat v = from; v < bound; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("seqcore");

TEST_CASE("less_seq") {
  CHECK(less_seq({1, 2}, {3, 4}));
  CHECK(less_seq({}, {5}));
  CHECK(less_seq({5}, {}));
  CHECK(!less_seq({1, 9}, {5, 12}));
  CHECK(!less_seq({3}, {3}));
}

TEST_CASE("lenlex") {
  CHECK(lenlex_cmp({7}, {1, 2}) == Ordering::less);
  CHECK(lenlex_cmp({1, 3}, {1, 4}) == Ordering::less);
  CHECK(lenlex_cmp({2, 5, 9}, {2, 5, 9}) == Ordering::equal);
  CHECK(lenlex_cmp({9, 10, 11}, {0, 1}) == Ordering::greater);
}

TEST_CASE("acc_lengths") {
  CHECK(acc_lengths(0, {}) == Seq{});
  CHECK(acc_lengths(0, {{3, 4}, {9}}) == Seq{2, 3});
  CHECK(acc_lengths(5, {{1}}) == Seq{6});
  CHECK(acc_lengths(0, {{1, 2, 3}, {4}, {5, 6}}) == Seq{3, 4, 6});
}

TEST_CASE("interact") {
  CHECK(interact({}, {{2, 3}}) == Seq{2, 3});
  CHECK(interact({{1}, {4}}, {{2, 3}, {5}}) == Seq{1, 2, 3, 4, 5});
  CHECK(interact({{1, 2}}, {}) == Seq{1, 2});
  CHECK(interact({{0}, {5}, {9}}, {{2}}) == Seq{0, 2, 5, 9});
}

TEST_CASE("interact ordering under the blockwise hypotheses") {
  // |yss| <= |xss| <= |yss|+1, nonempty increasing blocks, alternating
  // block order: then the interleaving is strictly increasing.
  std::mt19937 rng(42);
  std::uniform_int_distribution<nat> len_d(1, 3), gap_d(1, 4), count_d(1, 4);
  for (int round = 0; round < 500; ++round) {
    nat pairs = count_d(rng);
    bool extra = count_d(rng) % 2 == 0;
    std::vector<Seq> xss, yss;
    nat v = gap_d(rng);
    auto draw = [&](std::vector<Seq>& side) {
      Seq blk;
      nat len = len_d(rng);
      for (nat i = 0; i < len; ++i) {
        blk.push_back(v);
        v += gap_d(rng);
      }
      side.push_back(blk);
    };
    for (nat i = 0; i < pairs; ++i) {
      draw(xss);
      draw(yss);
    }
    if (extra) draw(xss);
    Seq joined = interact(xss, yss);
    CHECK(strict_sorted(joined));
    // Same multiset of elements.
    Seq all = concat(xss);
    Seq rest = concat(yss);
    all.insert(all.end(), rest.begin(), rest.end());
    std::sort(all.begin(), all.end());
    Seq sorted_joined = joined;
    std::sort(sorted_joined.begin(), sorted_joined.end());
    CHECK(all == sorted_joined);
    // Running length totals end at the full concatenation length.
    CHECK(acc_lengths(0, xss).back() == concat(xss).size());
  }
}

TEST_CASE("w_rank examples") {
  CHECK(w_rank({5}, 1) == Ordinal{5});
  CHECK(w_rank({0, 1}, 2) == Ordinal{0});
  CHECK(w_rank({2, 5}, 2) == Ordinal::parse("w*2+2"));
  CHECK_THROWS_AS(w_rank({1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("w_rank respects lex order and matches predecessor counts") {
  for (nat n = 1; n <= 3; ++n) {
    auto slice = all_increasing(n, 8);  // already in lex order
    for (std::size_t i = 0; i + 1 < slice.size(); ++i)
      CHECK(ord_cmp(w_rank(slice[i], n), w_rank(slice[i + 1], n)) == Ordering::less);
    // The rank order isomorphism pins each element's position.
    for (std::size_t i = 0; i < slice.size(); ++i) {
      nat pos = oracles::oracle_w_rank(slice[i], n, 8);
      CHECK(pos == i);
      nat below = 0;
      for (const Seq& t : slice)
        if (ord_cmp(w_rank(t, n), w_rank(slice[i], n)) == Ordering::less) ++below;
      CHECK(below == pos);
    }
  }
}

TEST_CASE("ww_rank examples") {
  CHECK(ww_rank({}) == Ordinal{0});
  CHECK(ww_rank({3}) == Ordinal{4});
  CHECK(ww_rank({2, 5}) == Ordinal::parse("w*3+2"));
}

TEST_CASE("ww_rank is monotone for length-then-lex") {
  std::vector<Seq> all;
  for (nat len = 0; len <= 4; ++len)
    for (const Seq& s : all_increasing(len, 8)) all.push_back(s);
  for (const Seq& s : all)
    for (const Seq& t : all) {
      Ordering by_order = lenlex_cmp(s, t);
      Ordering by_rank = ord_cmp(ww_rank(s), ww_rank(t));
      CHECK(by_order == by_rank);
    }
}

TEST_CASE("sequence text round trip") {
  CHECK(seq_to_string({2, 5, 9}) == "[2,5,9]");
  CHECK(parse_seq("[2,5,9]") == Seq{2, 5, 9});
  CHECK(parse_seq("[]") == Seq{});
  CHECK(parse_seq(" [ 1 , 2 ] ") == Seq{1, 2});
  CHECK_THROWS_AS(parse_seq("[1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_seq("1,2]"), std::invalid_argument);
}

TEST_SUITE_END();
