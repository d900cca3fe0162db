#pragma once

#include <vector>

#include "trop/matrix.hpp"

namespace trop {

/// Spectral theory of a square tropical matrix via its weighted digraph.
///
/// Graph convention used throughout this library: A_{i,j} is the weight of
/// the edge j -> i, so that matrix-vector action A (x) x propagates values
/// along edges. Cycle means and strongly connected components do not depend
/// on this orientation, but all path formulas below follow it:
/// (A^+)_{i,j} is the maximum weight of a nonempty walk from j to i.

/// Maximum cycle mean (the tropical eigenvalue), computed exactly with
/// Karp's dynamic program run from every start vertex.
Rat max_cycle_mean(const Mat& a);

/// Kleene plus A^+ = A (+) A^2 (+) ... (+) A^n, the max-weight-walk closure.
/// Requires max_cycle_mean(a) <= 0; otherwise powers diverge and a
/// DivergenceError reporting the offending cycle mean is thrown.
Mat kleene_plus(const Mat& a);

/// Kleene star entries: S_{i,j} = max((A^+)_{i,j}, 0 if i == j). S is an
/// idempotent with all-zero diagonal whenever it is defined.
Mat kleene_star(const Mat& a);

struct CriticalStructure {
  Rat mcm;                                  ///< maximum cycle mean of A
  std::vector<Index> critical_nodes;        ///< 0-based, ascending
  std::vector<std::vector<Index>> classes;  ///< critical SCCs; each ascending, ordered by minimum
  std::vector<Index> representatives;       ///< smallest node of each class
};

/// Nodes and edges attaining the maximum cycle mean, grouped into the
/// strongly connected components of the critical subgraph. Computed on the
/// normalized matrix A_lambda = (-lambda) (x) A via its Kleene plus: node i
/// is critical iff (A_lambda^+)_{i,i} = 0, and edge j -> i is critical iff
/// A_lambda_{i,j} + (A_lambda^+)_{j,i} = 0.
CriticalStructure critical_structure(const Mat& a);

struct SpectralReport {
  CriticalStructure critical;
  Mat a_lambda_plus;           ///< Kleene plus of the normalized matrix
  std::vector<Vec> eigenbasis; ///< columns of a_lambda_plus at the representatives
};

/// Basis of the eigenspace {x : A (x) x = mcm (x) x}: one column of
/// (A_lambda)^+ per critical class, taken at the class representatives.
SpectralReport eigenspace_basis(const Mat& a);

}  // namespace trop
