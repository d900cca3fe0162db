#include "trop/core.hpp"

#include <algorithm>
#include <string>

namespace trop {

namespace {

void require_length_match(Index a, Index b, const char* what) {
  if (a != b)
    throw DimensionError(std::string(what) + ": lengths " + std::to_string(a) + " and " +
                         std::to_string(b) + " differ");
}

}  // namespace

Rat scalar_product(const Vec& x, const Vec& y) {
  require_length_match(x.size(), y.size(), "scalar_product");
  if (x.size() == 0) throw DimensionError("scalar_product: vectors must be nonempty");
  Rat best(y(0) - x(0));
  for (Index i = 1; i < x.size(); ++i) {
    Rat d(y(i) - x(i));
    if (d < best) best = d;
  }
  return best;
}

Vec residual_solve(const Mat& a, const Vec& y) {
  require_length_match(a.rows(), y.size(), "residual_solve");
  Vec xhat(a.cols());
  for (Index j = 0; j < a.cols(); ++j) xhat(j) = scalar_product(a.col(j), y);
  return xhat;
}

std::optional<Vec> in_span(const Mat& a, const Vec& y) {
  Vec xhat = residual_solve(a, y);
  Mat prod = trop_mul(a, xhat);
  if (equal(prod, y)) return xhat;
  return std::nullopt;
}

bool span_subset(const Mat& a, const Mat& b) {
  require_length_match(a.rows(), b.rows(), "span_subset");
  for (Index j = 0; j < a.cols(); ++j)
    if (!in_span(b, a.col(j))) return false;
  return true;
}

bool green_relation(const Mat& a, const Mat& b, GreenRel rel) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionError("green_relation: operands must be square and of equal size");
  Mat at = a.transpose();
  Mat bt = b.transpose();
  switch (rel) {
    case GreenRel::LeqR:
      return span_subset(a, b);
    case GreenRel::LeqL:
      return span_subset(at, bt);
    case GreenRel::R:
      return span_subset(a, b) && span_subset(b, a);
    case GreenRel::L:
      return span_subset(at, bt) && span_subset(bt, at);
    case GreenRel::H:
      return green_relation(a, b, GreenRel::R) && green_relation(a, b, GreenRel::L);
  }
  throw InternalCheckError("green_relation: unknown relation");
}

std::optional<Rat> is_multiple(const Vec& x, const Vec& y) {
  require_length_match(x.size(), y.size(), "is_multiple");
  Rat lambda(y(0) - x(0));
  for (Index i = 1; i < x.size(); ++i)
    if (Rat(y(i) - x(i)) != lambda) return std::nullopt;
  return lambda;
}

std::vector<Index> extremal_columns(const Mat& a) {
  if (a.cols() == 0) throw DimensionError("extremal_columns: matrix must have columns");
  // Drop exact scalar duplicates, keeping the first column of each class.
  std::vector<Index> kept;
  for (Index j = 0; j < a.cols(); ++j) {
    bool duplicate = false;
    for (Index i : kept)
      if (is_multiple(a.col(i), a.col(j))) {
        duplicate = true;
        break;
      }
    if (!duplicate) kept.push_back(j);
  }
  if (kept.size() == 1) return kept;

  // A kept column is extremal iff the remaining kept columns cannot produce
  // it. Non-extremal columns are redundant in any generating set, so testing
  // against the full deduplicated set is exact.
  std::vector<Index> extremal;
  Mat others(a.rows(), static_cast<Index>(kept.size()) - 1);
  for (Index j : kept) {
    Index c = 0;
    for (Index i : kept)
      if (i != j) others.col(c++) = a.col(i);
    if (!in_span(others, a.col(j))) extremal.push_back(j);
  }
  if (extremal.empty())
    throw InternalCheckError("extremal_columns: empty result contradicts minimal generation");
  return extremal;
}

Vec projectivize(const Vec& x) {
  if (x.size() < 2) throw DimensionError("projectivize: vector length must be >= 2");
  Vec p(x.size() - 1);
  for (Index i = 0; i + 1 < x.size(); ++i) p(i) = x(i) - x(x.size() - 1);
  return p;
}

Vec lift(const Vec& p) {
  Vec x(p.size() + 1);
  for (Index i = 0; i < p.size(); ++i) x(i) = p(i);
  x(p.size()) = Rat(0);
  return x;
}

}  // namespace trop
