// Acceptance suite: every release-gating property in one binary, one
// pass/fail line per criterion, each with its wall-clock budget pinned.
// Expects the CLI binary path as argv[1] for the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opart/colourings.hpp"
#include "opart/constructions.hpp"
#include "opart/enumerator.hpp"
#include "opart/forcing.hpp"
#include "opart/forms.hpp"
#include "opart/ordinal.hpp"
#include "opart/seq.hpp"
#include "oracles.hpp"

using namespace opart;

namespace {

struct Harness {
  int passed = 0;
  int failed = 0;
  int index = 0;

  void run(const std::string& name, double limit_s, const std::function<bool(std::string&)>& fn) {
    ++index;
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = fn(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > limit_s) {
      ok = false;
      why += (why.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%2d] %s  %-22s (%.2f s, limit %.0f s)%s%s\n", index, ok ? "PASS" : "FAIL",
                name.c_str(), secs, limit_s, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
    ok ? ++passed : ++failed;
  }
};

Ordinal O(const char* s) { return Ordinal::parse(s); }

Ordinal random_ordinal(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<nat> lead_d(1, 3);
  std::vector<Ordinal::Term> pieces;
  if (coin(rng) == 0) pieces.push_back({Ordinal::omega(), lead_d(rng)});
  std::uniform_int_distribution<nat> exp_d(0, 6), coeff_d(1, 9), count_d(0, 4);
  nat terms = count_d(rng);
  for (nat i = 0; i < terms; ++i) pieces.push_back({Ordinal{exp_d(rng)}, coeff_d(rng)});
  return Ordinal::normalise(pieces);
}

std::vector<Seq> sequences_up_to(nat max_len, nat bound) {
  std::vector<Seq> out;
  Seq cur;
  std::function<void(nat)> rec = [&](nat from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (nat v = from; v < bound; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Family random_thin(std::mt19937& rng, nat max_members = 6, nat bound = 18) {
  std::uniform_int_distribution<nat> len_d(1, 4), val_d(0, bound - 1), count_d(1, max_members);
  std::vector<Seq> members;
  nat want = count_d(rng);
  int attempts = 0;
  while (members.size() < want && attempts++ < 200) {
    std::set<nat> vals;
    nat len = len_d(rng);
    while (vals.size() < len) vals.insert(val_d(rng));
    Seq cand(vals.begin(), vals.end());
    bool ok = true;
    for (const Seq& m : members)
      if (init_segment(m, cand) || init_segment(cand, m)) ok = false;
    if (ok) members.push_back(cand);
  }
  return Family::explicit_family(members);
}

// --- criterion bodies -------------------------------------------------------

bool cnf_algebra(std::string& why) {
  std::mt19937 rng(20240191);
  Ordinal cap = O("w^w*4");
  for (int i = 0; i < 10000; ++i) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    if (!(a < cap && b < cap && c < cap)) {
      why = "generator escaped the bound";
      return false;
    }
    if ((a + b) + c != a + (b + c)) { why = "add not associative"; return false; }
    if ((a * b) * c != a * (b * c)) { why = "mul not associative"; return false; }
    if (a * (b + c) != a * b + a * c) { why = "no left distributivity"; return false; }
    if (omega_pow(a + b) != omega_pow(a) * omega_pow(b)) {
      why = "omega_pow not a homomorphism";
      return false;
    }
  }
  if (O("1") + O("w") != O("w") || O("w") + O("1") == O("w")) {
    why = "1+w absorption broken";
    return false;
  }
  return true;
}

bool rank_isomorphism(std::string& why) {
  for (nat n = 1; n <= 3; ++n) {
    std::vector<Seq> slice;
    Seq cur;
    std::function<void(nat)> rec = [&](nat from) {
      if (cur.size() == n) {
        slice.push_back(cur);
        return;
      }
      for (nat v = from; v < 10; ++v) {
        cur.push_back(v);
        rec(v + 1);
        cur.pop_back();
      }
    };
    rec(0);
    for (const Seq& s : slice)
      for (const Seq& t : slice) {
        Ordering lex = lenlex_cmp(s, t);  // equal lengths: plain lex
        if (lex != ord_cmp(w_rank(s, n), w_rank(t, n))) {
          why = "w_rank breaks lex at " + seq_to_string(s) + " vs " + seq_to_string(t);
          return false;
        }
      }
  }
  auto all = sequences_up_to(4, 8);
  all.push_back(Seq{});
  for (const Seq& s : all)
    for (const Seq& t : all)
      if (lenlex_cmp(s, t) != ord_cmp(ww_rank(s), ww_rank(t))) {
        why = "ww_rank breaks lenlex at " + seq_to_string(s) + " vs " + seq_to_string(t);
        return false;
      }
  return true;
}

bool forms_slice(std::string& why) {
  auto pool = sequences_up_to(8, 12);
  std::map<nat, std::map<Seq, std::pair<Seq, Seq>>> by_form;
  nat checked = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const Seq &x = pool[i], &y = pool[j];
      if (x.size() + y.size() > 9) continue;
      ++checked;
      auto fast = classify_form(x, y);
      if (x.size() == y.size()) {
        if (!fast || fast->form != 0) {
          why = "equal lengths must classify to form 0";
          return false;
        }
        continue;
      }
      auto slow = oracles::oracle_classify_form(x, y);
      if (fast.has_value() != slow.has_value() ||
          (fast && (fast->form != slow->form || fast->scheme != slow->scheme))) {
        why = "oracle disagrees at " + seq_to_string(x) + " vs " + seq_to_string(y);
        return false;
      }
      if (fast && fast->form > 0) {
        auto [it, fresh] = by_form[fast->form].try_emplace(fast->scheme, x, y);
        if (!fresh && it->second != std::make_pair(x, y)) {
          why = "scheme collision within form " + std::to_string(fast->form);
          return false;
        }
      }
    }
  for (auto& [form, schemes] : by_form) {
    const Seq* prev = nullptr;
    for (auto& [scheme, pair] : schemes) {
      if (prev && prev->size() < scheme.size() &&
          std::equal(prev->begin(), prev->end(), scheme.begin())) {
        why = "form " + std::to_string(form) + " scheme family is not thin";
        return false;
      }
      prev = &scheme;
    }
  }
  if (checked < 1000000) {
    why = "slice unexpectedly small: " + std::to_string(checked);
    return false;
  }
  return true;
}

bool block_witness_matrix(std::string& why) {
  std::vector<std::pair<std::string, Enumerator>> grounds{
      {"all", Enumerator::all()},
      {"evens", Enumerator::evens()},
      {"arith:1,3", Enumerator::arithmetic(1, 3)}};
  for (nat l = 1; l <= 6; ++l)
    for (nat m = 1; m <= 5; ++m)
      for (auto& [name, N] : grounds) {
        BlockWitness w = larson_37(N, m, l);
        if (w.elements.size() != m) {
          why = "wrong witness size at l=" + std::to_string(l) + " m=" + std::to_string(m) +
                " N=" + name;
          return false;
        }
        for (nat i = 0; i < m; ++i)
          for (nat j = i + 1; j < m; ++j) {
            auto got = classify_form(w.elements[i], w.elements[j]);
            if (!got || got->form != l) {
              why = "pair audit failed at l=" + std::to_string(l) + " N=" + name;
              return false;
            }
            for (nat v : got->scheme)
              if (!N.contains(v)) {
                why = "scheme escapes N at l=" + std::to_string(l) + " N=" + name;
                return false;
              }
          }
      }
  auto pinned = larson_37(Enumerator::arithmetic(1, 1), 2, 1);
  if (pinned.elements != std::vector<Seq>{{3}, {6, 7, 8, 9}}) {
    why = "pinned l=1 instance drifted";
    return false;
  }
  return true;
}

bool triangular_prefix(std::string& why) {
  auto fam = larson_38_generate(Enumerator::all(), 3, 7);
  for (nat j = 1; j <= 3; ++j) {
    for (nat k = j; k <= 7; ++k)
      for (nat i = 1; i <= j; ++i) {
        nat len = fam.b[j - 1][k - j][i - 1].size();
        nat want = (i == 1) ? fam.d[j - 1][0] : fam.d[j - 1][i - 1] - fam.d[j - 1][i - 2];
        if (len != want) {
          why = "length law broken at b(" + std::to_string(i) + "," + std::to_string(j) + "," +
                std::to_string(k) + ")";
          return false;
        }
      }
    if (!verify_order_embedding(larson_38_elements(fam, j), j)) {
      why = "order embedding failed at stratum " + std::to_string(j);
      return false;
    }
  }
  auto report = larson_38_classify_pairs(fam, Enumerator::all());
  if (report.failures != 0 || !report.all_schemes_in_ground) {
    why = "cross-stratum classification failed";
    return false;
  }
  for (const auto& pc : report.pairs)
    if (pc.form < 1 || pc.form > 2 * pc.j + 1) {
      why = "form bound exceeded: l=" + std::to_string(pc.form);
      return false;
    }
  return true;
}

bool specker_suite(std::string& why) {
  for (nat k = 0; k < 4; ++k)
    for (nat m = 0; m <= 5; ++m) {
      auto pairs = specker_mk(k, m, Enumerator::all());  // audits internally
      if (pairs.size() != m) {
        why = "specker_mk size mismatch";
        return false;
      }
    }
  auto xs = specker_x(Enumerator::all(), 15);
  if (xs.size() != 15) {
    why = "specker_x size mismatch";
    return false;
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      auto got = classify_form_u(xs[i], xs[j]);
      if (!got || got->form >= 4) {
        why = "unclassifiable grid pair";
        return false;
      }
      for (nat v : got->scheme)
        if (!Enumerator::all().contains(v)) {
          why = "scheme escapes the ground set";
          return false;
        }
    }
  auto even_xs = specker_x(Enumerator::evens(), 15);
  for (auto [a, b] : even_xs)
    if (a % 2 || b % 2) {
      why = "grid left the even ground set";
      return false;
    }
  return true;
}

bool forcing_exactness(std::string& why) {
  std::mt19937 rng(4711);
  std::vector<Enumerator> bases{Enumerator::all(), Enumerator::evens(),
                                Enumerator::arithmetic(1, 3)};
  for (int round = 0; round < 200; ++round) {
    Family F = random_thin(rng);
    const Enumerator& M = bases[round % bases.size()];
    Enumerator smaller = M.above(rng() % 5).remove({M.nth(4), M.nth(7)});
    std::uniform_int_distribution<nat> val_d(0, 11);
    std::set<nat> svals;
    nat len = rng() % 3;
    while (svals.size() < len) svals.insert(val_d(rng));
    Seq S(svals.begin(), svals.end());
    if (rejects(F, S, M) && !rejects(F, S, smaller)) {
      why = "rejects is not hereditary";
      return false;
    }
    if (strongly_accepts(F, S, M) && !strongly_accepts(F, S, smaller)) {
      why = "strong acceptance is not hereditary";
      return false;
    }
    Enumerator tail = S.empty() ? M : M.above(S.back());
    if (accepts(F, S, M) != accepts(F, S, tail) ||
        strongly_accepts(F, S, M) != strongly_accepts(F, S, tail) ||
        (decides(F, S, M) != Decided::Undecided) != (decides(F, S, tail) != Decided::Undecided)) {
      why = "tail invariance broken";
      return false;
    }

    Enumerator N = refine_decides_subsets(F, M, 30);
    // Only prefixes of members can be left undecided; check them all,
    // plus an exhaustive sweep over a small initial segment.
    for (const Seq& U : F.members())
      for (std::size_t j = 0; j <= U.size(); ++j) {
        Seq T(U.begin(), U.begin() + j);
        bool inside = true;
        for (nat v : T)
          if (!N.contains(v)) inside = false;
        if (inside && decides(F, T, N) == Decided::Undecided) {
          why = "refinement left a member prefix undecided";
          return false;
        }
      }
    auto low = N.below(12);
    for (nat mask = 0; mask < (nat{1} << low.size()); ++mask) {
      Seq T;
      for (std::size_t b = 0; b < low.size(); ++b)
        if (mask & (nat{1} << b)) T.push_back(low[b]);
      if (decides(F, T, N) == Decided::Undecided) {
        why = "refinement left a small subset undecided";
        return false;
      }
    }

    // Exceptional extension sets do not grow with the horizon.
    for (const Seq& U : F.members()) {
      if (!strongly_accepts(F, U, M)) continue;
      if (exceptional_extensions(F, U, M, 40) != exceptional_extensions(F, U, M, 80)) {
        why = "exceptional extensions grew with the horizon";
        return false;
      }
    }
  }
  return true;
}

bool front_ranks(std::string& why) {
  std::vector<Enumerator> grounds{Enumerator::all(), Enumerator::evens(), Enumerator::odds(),
                                  Enumerator::arithmetic(1, 3),
                                  Enumerator::with_prefix({2, 7}, 11, 4)};
  for (const auto& A : grounds)
    for (nat k = 1; k <= 4; ++k) {
      nat horizon = A.nth(k) + 2;
      if (front_rank(Family::uniform(A, k), horizon) != k) {
        why = "uniform rank wrong for k=" + std::to_string(k);
        return false;
      }
    }
  // Rank strictly descends when a front is derived at its least point.
  std::vector<Family> corpus;
  for (nat k = 1; k <= 3; ++k) corpus.push_back(Family::uniform(Enumerator::all(), k));
  corpus.push_back(Family::schreier(Enumerator::all()));
  corpus.push_back(Family::explicit_family({{0, 1}, {0, 2}, {1, 2, 3}, {2, 3}}));
  for (const Family& F : corpus) {
    nat base = front_rank(F, 12);
    nat derived = front_rank(derived_front(F, F.kind() == Family::Kind::Explicit
                                                  ? F.members().front().front()
                                                  : F.ground().nth(1)),
                             12);
    if (derived >= base) {
      why = "derived front rank did not descend for " + F.describe();
      return false;
    }
  }
  nat prev = 0;
  for (nat h = 4; h <= 12; ++h) {
    nat r = front_rank(Family::schreier(Enumerator::all()), h);
    if (r < prev) {
      why = "truncated rank decreased with the horizon";
      return false;
    }
    prev = r;
  }
  return true;
}

bool bounded_homogenisation(std::string& why) {
  const std::vector<std::pair<std::string, std::function<nat(const Seq&)>>> rules{
      {"always-0", [](const Seq&) -> nat { return 0; }},
      {"always-1", [](const Seq&) -> nat { return 1; }},
      {"min-parity", [](const Seq& s) -> nat { return s[0] % 2; }},
      {"max-parity", [](const Seq& s) -> nat { return s.back() % 2; }},
      {"sum-parity",
       [](const Seq& s) -> nat {
         nat t = 0;
         for (nat v : s) t += v;
         return t % 2;
       }},
      {"has-multiple-of-3",
       [](const Seq& s) -> nat {
         for (nat v : s)
           if (v % 3 == 0) return 0;
         return 1;
       }}};
  if (!ramsey_bruteforce(6, 3, 3).holds) {
    why = "finite cross-check base case failed";
    return false;
  }
  for (nat k = 1; k <= 2; ++k) {
    Family F = Family::uniform(Enumerator::all(), k);
    for (const auto& [name, rule] : rules) {
      auto res = nash_williams_bounded(F, rule, 2, Enumerator::all(), 60);
      if (!res.verified || res.prefix.size() < 8) {
        why = "driver failed for " + name + " on k=" + std::to_string(k) + ": " +
              res.diagnostics;
        return false;
      }
      // Independent re-verification of the output.
      std::set<nat> inside(res.prefix.begin(), res.prefix.end());
      for (const Seq& m : F.members_within(60)) {
        bool in = true;
        for (nat v : m)
          if (!inside.count(v)) in = false;
        if (in && rule(m) != res.colour) {
          why = "returned prefix is not homogeneous for " + name;
          return false;
        }
      }
      if (k == 2) {
        // A pair-homogeneous prefix yields a monochromatic triple, the
        // same shape the finite search guarantees on 6 points.
        auto colour_of = [&](nat a, nat b) {
          return static_cast<int>(rule(Seq{std::min(a, b), std::max(a, b)}));
        };
        std::vector<nat> first8(res.prefix.begin(),
                                res.prefix.begin() + std::min<std::size_t>(8, res.prefix.size()));
        if (!find_monochromatic(colour_of, first8, 3, static_cast<int>(res.colour))) {
          why = "no monochromatic triple inside the returned prefix";
          return false;
        }
      }
    }
  }
  return true;
}

bool finite_partition_oracle(std::string& why) {
  auto r6 = ramsey_bruteforce(6, 3, 3);
  if (!r6.holds) {
    why = "(6,3,3) reported false";
    return false;
  }
  auto r5 = ramsey_bruteforce(5, 3, 3);
  if (r5.holds || r5.witness.size() != 10) {
    why = "(5,3,3) missing counterexample";
    return false;
  }
  auto colour_of = [&](nat u, nat v) { return r5.witness[pair_index(5, u, v)]; };
  std::vector<nat> universe{0, 1, 2, 3, 4};
  if (find_monochromatic(colour_of, universe, 3, 0) ||
      find_monochromatic(colour_of, universe, 3, 1)) {
    why = "(5,3,3) witness does not verify";
    return false;
  }
  for (nat n = 2; n <= 8; ++n)
    if (!ramsey_bruteforce(n, 2, 2).holds) {
      why = "(" + std::to_string(n) + ",2,2) reported false";
      return false;
    }
  return true;
}

bool negative_colourings(std::string& why) {
  auto sp = audit_sierpinski(PairColouring::sierpinski(O("w*2"), 8), 4);
  if (!sp.violations.empty()) {
    why = "order-disagreement audit found " + std::to_string(sp.violations.size()) +
          " violations";
    return false;
  }
  auto de = audit_decomposable(PairColouring::decomposable(O("w"), O("w"), 12));
  if (!de.violations.empty()) {
    why = "split audit found " + std::to_string(de.violations.size()) + " violations";
    return false;
  }
  if (sp.checks_run == 0 || de.checks_run < 220) {
    why = "audits did not sweep the slice";
    return false;
  }
  return true;
}

// --- CLI determinism ----------------------------------------------------------

struct RunResult {
  int code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& binary, const std::string& args) {
  RunResult r;
  std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.stdout_text.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool cli_determinism(const std::string& binary, std::string& why) {
  if (binary.empty()) {
    why = "CLI path not supplied";
    return false;
  }
  const std::vector<std::string> documented{
      "ord eval \"w^2 + w^2+w+1\" --json",
      "ord cmp \"w^2+1\" \"w^2+w\" --json",
      "form classify --x \"[3,4]\" --y \"[6,7,8,9,10]\" --json",
      "scheme --l 2 --x \"[3,9]\" --y \"[5,6,7,8]\" --json",
      "construct lemma37 --set arith:1,1 --m 2 --l 1 --json",
      "construct specker-x --set all --count 10 --json",
      "construct specker-mk --k 3 --m 4 --set all --json",
      "construct larson38 --jmax 2 --kmax 5 --verify --set all --json",
      "nw run --front uniform:2 --colour sum-parity --set all --horizon 60 --json",
      "nw run --front uniform:1 --colour has-multiple-of-3 --set all --horizon 60 --json",
      "front rank --front uniform:3 --set all --horizon 30 --json",
      "front derive --front uniform:2 --set all --n 0 --horizon 30 --json",
      "ramsey check --n 6 --beta 3 --gamma 3 --json",
      "mono find --rule cycle --n 5 --size 3 --colour 0 --json",
      "mono find --rule sum-parity --n 10 --size 4 --colour 0 --json",
      "colour negative --alpha \"w*2\" --kind sierpinski --horizon 8 --audit --json",
      "colour negative --beta w --gamma w --kind decompose --horizon 12 --audit --json",
      "ord eval \"w^2*3+w+5\" --json --seed 7",
  };
  for (const std::string& args : documented) {
    RunResult a = run_cli(binary, args);
    RunResult b = run_cli(binary, args);
    if (a.code != 0 || b.code != 0) {
      why = "documented invocation failed: " + args;
      return false;
    }
    if (a.stdout_text != b.stdout_text || a.stdout_text.empty()) {
      why = "output not byte-identical for: " + args;
      return false;
    }
    // Machine output must re-parse; ordinal and sequence payloads must
    // round-trip through their own grammars.
    if (a.stdout_text.find('{') != 0) {
      why = "not a JSON object: " + args;
      return false;
    }
    for (const char* key : {"\"value\":\"", "\"left\":\"", "\"alpha\":\"", "\"beta\":\""}) {
      auto pos = a.stdout_text.find(key);
      if (pos == std::string::npos) continue;
      pos += std::string(key).size();
      auto end = a.stdout_text.find('"', pos);
      Ordinal::parse(a.stdout_text.substr(pos, end - pos));  // throws on failure
    }
  }
  RunResult fault =
      run_cli(binary, "construct lemma37 --set arith:1,1 --m 2 --l 1 --json --inject-fault");
  if (fault.code != 1) {
    why = "injected verification failure exited with " + std::to_string(fault.code);
    return false;
  }
  if (fault.stdout_text.find("\"verification\":\"fail\"") == std::string::npos) {
    why = "injected failure not reported in the output";
    return false;
  }
  RunResult usage = run_cli(binary, "ord eval \"w+*\" --json");
  if (usage.code != 2) {
    why = "usage error exited with " + std::to_string(usage.code);
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  Harness h;
  h.run("cnf-algebra", 5, cnf_algebra);
  h.run("rank-isomorphism", 10, rank_isomorphism);
  h.run("forms-slice", 60, forms_slice);
  h.run("block-witness-matrix", 5, block_witness_matrix);
  h.run("triangular-prefix", 30, triangular_prefix);
  h.run("specker-suite", 5, specker_suite);
  h.run("forcing-exactness", 30, forcing_exactness);
  h.run("front-ranks", 10, front_ranks);
  h.run("bounded-homogenisation", 60, bounded_homogenisation);
  h.run("finite-partition", 120, finite_partition_oracle);
  h.run("negative-colourings", 20, negative_colourings);
  h.run("cli-determinism", 60, [&](std::string& why) { return cli_determinism(cli, why); });
  std::printf("acceptance: %d/%d criteria passed\n", h.passed, h.passed + h.failed);
  return h.failed == 0 ? 0 : 1;
}
