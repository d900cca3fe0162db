#pragma once

#include <optional>
#include <vector>

#include "trop/matrix.hpp"

namespace trop {

/// Residuation-based linear algebra over the finite max-plus semiring:
/// exact span membership, Green's relations and extremal generators.
/// Column spaces are spanned by tropical combinations max_j (lambda_j + A_j).

/// <x|y> = min_i (y_i - x_i), the largest lambda with lambda (x) x <= y.
Rat scalar_product(const Vec& x, const Vec& y);

/// Principal solution of A (x) x = y: xhat_j = min_i (y_i - A_{i,j}).
/// Always satisfies A (x) xhat <= y; equality holds iff y is in C(A).
Vec residual_solve(const Mat& a, const Vec& y);

/// Membership of y in the column space of A. Returns the principal solution
/// as a witness when y is in C(A), std::nullopt otherwise.
std::optional<Vec> in_span(const Mat& a, const Vec& y);

/// C(A) subseteq C(B). A and B must have equal row counts.
bool span_subset(const Mat& a, const Mat& b);

inline bool span_equal(const Mat& a, const Mat& b) {
  return span_subset(a, b) && span_subset(b, a);
}

enum class GreenRel { LeqR, LeqL, R, L, H };

/// Green's order/equivalence on square matrices of equal size, computed via
/// exact span comparisons: A <=_R B iff C(A) subseteq C(B), A <=_L B iff
/// R(A) subseteq R(B), and R / L / H are the induced equivalences.
bool green_relation(const Mat& a, const Mat& b, GreenRel rel);

/// If y = lambda (x) x for a (necessarily unique) scalar lambda, returns it.
std::optional<Rat> is_multiple(const Vec& x, const Vec& y);

/// 0-based indices of the extremal columns: exact scalar duplicates are
/// dropped first (keeping the smallest index of each proportionality class),
/// then a kept column survives iff it is not in the span of the other kept
/// columns. The surviving columns generate C(A) and the set is minimal.
std::vector<Index> extremal_columns(const Mat& a);

/// Projective coordinates: subtracts the last entry and drops it (length >= 2).
Vec projectivize(const Vec& x);

/// Appends a zero entry, the canonical representative of a projective point.
Vec lift(const Vec& p);

}  // namespace trop
