#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opart/enumerator.hpp"
#include "opart/forms.hpp"
#include "opart/seq.hpp"

namespace opart {

/// m pairs from U = {(a,b): a < b} with all coordinates in N such that
/// every 2-subset has the given form k < 4 and its scheme lies in N.
/// Verified by the pair classifier before returning; a verification
/// failure throws std::runtime_error with diagnostics.
std::vector<std::pair<nat, nat>> specker_mk(nat k, nat m, const Enumerator& N);

/// A finite prefix of a subset X of U, lexicographically ordered and of
/// full order type omega^2, whose 2-subsets all classify to some form
/// below 4 with scheme inside N.  First coordinates sit at even positions
/// of N, second coordinates injectively at odd positions.
std::vector<std::pair<nat, nat>> specker_x(const Enumerator& N, nat count);

/// State of the block construction behind the m-element witness sets:
/// the length records d^1..d^m and the block matrix a^i_j drawn from N.
struct BlockWitness {
  nat m = 0;
  nat l = 0;
  nat k = 0;
  std::vector<Seq> d;                   // d[i]: k+1 record values for row i
  std::vector<std::vector<Seq>> a;      // a[i][j]: block j+1 of row i+1
  std::vector<Seq> elements;            // the assembled m sequences
};

/// The m-element set of increasing sequences every 2-subset of which has
/// form l with scheme inside N.  Rows are assembled from k blocks when
/// l = 2k-1 and k+1 blocks when l = 2k; the last block column is drawn in
/// reversed row order, which is what lets the even case interleave.
/// Every 2-subset is re-classified before returning; failures throw
/// std::runtime_error.
BlockWitness larson_37(const Enumerator& N, nat m, nat l);

/// Families d^j, a_j, b(i,j,k) for 1 <= i <= j <= k <= kmax drawn from N,
/// with |b(i,j,k)| = d^j_i - d^j_(i-1) independent of k.
struct TriangularFamilies {
  nat jmax = 0;
  nat kmax = 0;
  std::vector<Seq> d;                        // d[j-1], length j
  std::vector<Seq> a;                        // a[j-1]
  std::vector<std::vector<std::vector<Seq>>> b;  // b[j-1][k-j][i-1]
  std::string generation_order;              // documented draw order
};

TriangularFamilies larson_38_generate(const Enumerator& N, nat jmax, nat kmax);

/// All elements a_j * b(1,j,k1) * ... * b(j,j,kj) over index tuples
/// j < k1 < ... < kj <= kmax, in tuple-lexicographic order.
std::vector<Seq> larson_38_elements(const TriangularFamilies& fam, nat j);

/// True iff the tuple-order enumeration is a lexicographic order
/// isomorphism onto its image: all elements share one length and are
/// strictly increasing in lenlex order.
bool verify_order_embedding(const std::vector<Seq>& elems, nat j);

struct PairClassification {
  nat j = 0, r = 0;                     // strata of the two elements
  Seq x, y;
  nat form = 0;
  bool scheme_in_ground = false;
  bool scheme_above_marker = false;     // first scheme entry exceeds the l-th member of N
};

struct ClassifyReport {
  std::vector<PairClassification> pairs;
  nat failures = 0;                     // pairs with no form or form out of range
  bool all_schemes_in_ground = true;
};

/// Classifies every cross-stratum pair of elements (j < r) and checks
/// form bounds 1 <= l <= 2j+1 and scheme membership in N.
ClassifyReport larson_38_classify_pairs(const TriangularFamilies& fam, const Enumerator& N);

}  // namespace opart
