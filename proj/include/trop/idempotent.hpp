#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trop/core.hpp"
#include "trop/spectral.hpp"

namespace trop {

/// Analysis of multiplicatively idempotent tropical matrices (E (x) E = E)
/// and the reduction of their maximal subgroups to the full-rank case.

/// First entry (row-major, 0-based) where E (x) E differs from E, if any.
std::optional<std::pair<Index, Index>> idempotency_defect(const Mat& e);

inline bool is_idempotent(const Mat& e) { return !idempotency_defect(e).has_value(); }

/// Throws NotIdempotentError naming the first offending entry (1-based).
void require_idempotent(const Mat& e, const char* what);

struct IdempotentProfile {
  Mat matrix;
  CriticalStructure critical;
  Index rank = 0;           ///< number of critical classes = extremal columns of C(E)
  bool zero_diagonal = false;
};

/// Critical data of an idempotent. For idempotents the maximum cycle mean is
/// 0, the critical nodes are exactly {i : E_{i,i} = 0}, columns within one
/// critical class are proportional, and the class count equals the number of
/// extremal columns, which this library calls the rank.
IdempotentProfile idempotent_profile(const Mat& e);

struct NormalizeResult {
  Mat f;       ///< candidate zero-diagonal idempotent
  bool valid;  ///< true iff f is idempotent with C(f) = C(e)
};

/// Zero-diagonal normalization F_{j,i} = min_t (E_{j,t} - E_{i,t}): the
/// pointwise infimum of the scalings of column i that stay under column j.
/// F always has zero diagonal; `valid` reports whether the construction
/// succeeded, which happens exactly when C(E) is min-plus convex.
NormalizeResult zero_diag_normalize(const Mat& e);

struct FullRankReduction {
  Mat e;                              ///< the reduced idempotent
  std::vector<Index> representatives; ///< 0-based critical class representatives c
  Mat f;                              ///< E[c, c], a full-rank idempotent
  ExtMat m;                           ///< k x n selector: M_{t, c_t} = 0, else -inf
  ExtMat n;                           ///< n x k left factor of the H-class isomorphism
  ExtMat p;                           ///< k x n right factor of the H-class isomorphism
};

/// Restriction of an idempotent to its critical class representatives.
/// F = E[c, c] is a full-rank idempotent of size k = rank(E), and
/// M (x) N = P (x) M^T = I_k. When E has zero diagonal, A |-> M E A E M^T
/// and G |-> N G P are mutually inverse group isomorphisms between the
/// maximal subgroups H_E and H_F; reduce/lift below implement them.
FullRankReduction full_rank_reduce(const Mat& e);

/// H_E -> H_F. Requires red.e zero-diagonal and A in H_E.
Mat reduce_hclass_element(const FullRankReduction& red, const Mat& a);

/// H_F -> H_E. Requires red.e zero-diagonal and G in H_F.
Mat lift_hclass_element(const FullRankReduction& red, const Mat& g);

/// Corner-repeated embedding of a full-rank k x k idempotent into n x n:
/// E'_{i,j} = F_{min(i,k-1), min(j,k-1)}. E' is idempotent of rank k, and it
/// preserves a zero diagonal.
Mat embed_full_rank(const Mat& f, Index n);

/// The canonical zero-diagonal idempotent D-equivalent to E (same size,
/// same rank): the embedding of E's full-rank reduction.
Mat zero_diag_representative(const Mat& e);

}  // namespace trop
