#include "trop/idempotent.hpp"

#include <algorithm>
#include <string>

namespace trop {

namespace {

void require_square(const Mat& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DimensionError(std::string(what) + ": matrix must be square and nonempty, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

bool has_zero_diagonal(const Mat& a) {
  for (Index i = 0; i < a.rows(); ++i)
    if (a(i, i) != 0) return false;
  return true;
}

void require_zero_diagonal(const Mat& e, const char* what) {
  for (Index i = 0; i < e.rows(); ++i)
    if (e(i, i) != 0)
      throw DiagonalNotZeroError(std::string(what) + ": diagonal entry (" +
                                 std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is " +
                                 rat_to_string(e(i, i)) + ", expected 0");
}

}  // namespace

std::optional<std::pair<Index, Index>> idempotency_defect(const Mat& e) {
  require_square(e, "idempotency check");
  Mat sq = trop_mul(e, e);
  for (Index i = 0; i < e.rows(); ++i)
    for (Index j = 0; j < e.cols(); ++j)
      if (sq(i, j) != e(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

void require_idempotent(const Mat& e, const char* what) {
  if (auto defect = idempotency_defect(e))
    throw NotIdempotentError(std::string(what) + ": matrix is not idempotent, E*E differs from E "
                             "first at (" +
                             std::to_string(defect->first + 1) + "," +
                             std::to_string(defect->second + 1) + ")");
}

IdempotentProfile idempotent_profile(const Mat& e) {
  require_idempotent(e, "idempotent_profile");
  IdempotentProfile prof;
  prof.matrix = e;
  prof.critical = critical_structure(e);
  if (prof.critical.mcm != 0)
    throw InternalCheckError("idempotent_profile: idempotent with maximum cycle mean " +
                             rat_to_string(prof.critical.mcm));
  prof.rank = static_cast<Index>(prof.critical.classes.size());
  prof.zero_diagonal = has_zero_diagonal(e);
  return prof;
}

NormalizeResult zero_diag_normalize(const Mat& e) {
  require_idempotent(e, "zero_diag_normalize");
  const Index n = e.rows();
  NormalizeResult res;
  res.f.resize(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) {
      Rat best(e(j, 0) - e(i, 0));
      for (Index t = 1; t < n; ++t) {
        Rat d(e(j, t) - e(i, t));
        if (d < best) best = d;
      }
      res.f(j, i) = best;
    }
  res.valid = is_idempotent(res.f) && span_equal(res.f, e);
  return res;
}

FullRankReduction full_rank_reduce(const Mat& e) {
  require_idempotent(e, "full_rank_reduce");
  FullRankReduction red;
  red.e = e;
  CriticalStructure cs = critical_structure(e);
  red.representatives = cs.representatives;
  const Index n = e.rows();
  const Index k = static_cast<Index>(red.representatives.size());
  std::vector<bool> is_rep(static_cast<size_t>(n), false);
  for (Index c : red.representatives) is_rep[static_cast<size_t>(c)] = true;

  red.f = e(red.representatives, red.representatives);

  red.m = ExtMat(k, n);
  for (Index t = 0; t < k; ++t) red.m(t, red.representatives[static_cast<size_t>(t)]) = ExtRat(Rat(0));

  red.n = ExtMat(n, k);
  red.p = ExtMat(k, n);
  for (Index t = 0; t < k; ++t) {
    const Index ct = red.representatives[static_cast<size_t>(t)];
    for (Index s = 0; s < n; ++s) {
      if (s == ct) {
        red.n(s, t) = ExtRat(Rat(0));
        red.p(t, s) = ExtRat(Rat(0));
      } else if (!is_rep[static_cast<size_t>(s)]) {
        red.n(s, t) = ExtRat(e(s, ct));
        red.p(t, s) = ExtRat(e(ct, s));
      }
      // representatives other than ct stay at -inf
    }
  }

  // M N = P M^T = I_k by construction; cheap enough to verify outright.
  ExtMat id = trop_identity(k);
  if (!equal(trop_mul(red.m, red.n), id) || !equal(trop_mul(red.p, ExtMat(red.m.transpose())), id))
    throw InternalCheckError("full_rank_reduce: selector identities M N = P M^T = I failed");
  return red;
}

Mat reduce_hclass_element(const FullRankReduction& red, const Mat& a) {
  require_zero_diagonal(red.e, "reduce_hclass_element");
  if (a.rows() != red.e.rows() || a.cols() != red.e.cols())
    throw DimensionError("reduce_hclass_element: matrix size differs from the idempotent");
  if (!green_relation(a, red.e, GreenRel::H))
    throw NotInHClassError("reduce_hclass_element: matrix is not H-equivalent to the idempotent");
  // phi(A) = M E A E M^T; E A E = A on H_E, so this is A at representative
  // rows and columns.
  return a(red.representatives, red.representatives);
}

Mat lift_hclass_element(const FullRankReduction& red, const Mat& g) {
  require_zero_diagonal(red.e, "lift_hclass_element");
  const Index k = static_cast<Index>(red.representatives.size());
  if (g.rows() != k || g.cols() != k)
    throw DimensionError("lift_hclass_element: matrix size " + std::to_string(g.rows()) + "x" +
                         std::to_string(g.cols()) + " differs from the reduction size " +
                         std::to_string(k));
  if (!green_relation(g, red.f, GreenRel::H))
    throw NotInHClassError(
        "lift_hclass_element: matrix is not H-equivalent to the reduced idempotent");
  return to_finite(trop_mul(trop_mul(red.n, g), red.p));
}

Mat embed_full_rank(const Mat& f, Index n) {
  require_idempotent(f, "embed_full_rank");
  const Index k = f.rows();
  if (n < k)
    throw DimensionError("embed_full_rank: target size " + std::to_string(n) +
                         " is smaller than the matrix size " + std::to_string(k));
  CriticalStructure cs = critical_structure(f);
  if (static_cast<Index>(cs.classes.size()) != k)
    throw NotFullRankError("embed_full_rank: matrix has rank " +
                           std::to_string(cs.classes.size()) + ", expected full rank " +
                           std::to_string(k));
  Mat out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) out(i, j) = f(std::min(i, k - 1), std::min(j, k - 1));
  return out;
}

Mat zero_diag_representative(const Mat& e) {
  FullRankReduction red = full_rank_reduce(e);
  return embed_full_rank(red.f, e.rows());
}

}  // namespace trop
