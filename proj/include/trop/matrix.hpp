#pragma once

#include <Eigen/Core>
#include <string>
#include <type_traits>

#include "trop/errors.hpp"
#include "trop/rational.hpp"

namespace trop {

using Index = Eigen::Index;

/// Dense matrix over the finite tropical (max-plus) semiring: entries are
/// exact rationals, tropical addition is max, tropical multiplication is +.
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Dense matrix over the extended semiring with bottom = -inf adjoined.
/// Bottom entries arise in identities, monomial matrices and the selector
/// matrices of the full-rank reduction; plain tropical inputs stay finite.
using ExtMat = Eigen::Matrix<ExtRat, Eigen::Dynamic, Eigen::Dynamic>;
using ExtVec = Eigen::Matrix<ExtRat, Eigen::Dynamic, 1>;

namespace detail {

inline Rat trop_times(const Rat& a, const Rat& b) { return Rat(a + b); }
inline ExtRat trop_times(const ExtRat& a, const ExtRat& b) { return a + b; }

template <typename A, typename B>
struct product_scalar {
  using type = ExtRat;
};
template <>
struct product_scalar<Rat, Rat> {
  using type = Rat;
};

}  // namespace detail

/// Tropical matrix sum: entrywise max. Operands must have equal shape.
template <typename DA, typename DB>
auto trop_add(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  static_assert(std::is_same_v<typename DA::Scalar, typename DB::Scalar>);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("tropical sum: shapes " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
  using Scalar = typename DA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      using std::max;
      using trop::max;
      r(i, j) = max(Scalar(a(i, j)), Scalar(b(i, j)));
    }
  return r;
}

/// Tropical matrix product: (A (x) B)_{i,j} = max_k A_{i,k} + B_{k,j}.
/// Finite operands give a finite result; if either operand is extended the
/// result is extended (bottom entries are then legal). Inner dimensions must
/// agree and be at least 1.
template <typename DA, typename DB>
auto trop_mul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.cols() != b.rows() || a.cols() == 0)
    throw DimensionError("tropical product: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " do not match");
  using Scalar =
      typename detail::product_scalar<typename DA::Scalar, typename DB::Scalar>::type;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> r(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Scalar acc = detail::trop_times(Scalar(a(i, 0)), Scalar(b(0, j)));
      for (Index k = 1; k < a.cols(); ++k) {
        Scalar term = detail::trop_times(Scalar(a(i, k)), Scalar(b(k, j)));
        if (acc < term) acc = term;
      }
      r(i, j) = acc;
    }
  return r;
}

/// Tropical scaling: lambda (x) A adds lambda to every entry.
template <typename DA>
auto trop_scale(const Rat& lambda, const Eigen::MatrixBase<DA>& a) {
  typename DA::PlainObject r = a;
  for (Index i = 0; i < r.rows(); ++i)
    for (Index j = 0; j < r.cols(); ++j) r(i, j) = detail::trop_times(r(i, j), lambda);
  return r;
}

/// Tropical k-th power of a square matrix, k >= 1.
inline Mat trop_pow(const Mat& a, Index k) {
  if (a.rows() != a.cols()) throw DimensionError("tropical power: matrix must be square");
  if (k < 1) throw DimensionError("tropical power: exponent must be >= 1");
  Mat r = a;
  for (Index i = 1; i < k; ++i) r = trop_mul(r, a);
  return r;
}

/// Multiplicative identity: zero diagonal, -inf off the diagonal.
inline ExtMat trop_identity(Index n) {
  ExtMat id(n, n);  // default-constructed ExtRat is bottom
  for (Index i = 0; i < n; ++i) id(i, i) = ExtRat(Rat(0));
  return id;
}

template <typename DA, typename DB>
bool equal(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

inline ExtMat to_extended(const Mat& a) {
  ExtMat r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = ExtRat(a(i, j));
  return r;
}

/// Converts back to a finite matrix; bottom entries are a caller bug.
inline Mat to_finite(const ExtMat& a) {
  Mat r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_finite())
        throw InternalCheckError("to_finite: -inf entry at (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ")");
      r(i, j) = a(i, j).value();
    }
  return r;
}

}  // namespace trop
