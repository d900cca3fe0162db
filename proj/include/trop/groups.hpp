#pragma once

#include <string>
#include <vector>

#include "trop/idempotent.hpp"

namespace trop {

/// Maximal subgroup structure of idempotent tropical matrices: every H_E is
/// isomorphic to R x Sigma for a finite permutation group Sigma, realized
/// through monomial units commuting with E.

/// Permutation on {0, ..., n-1}, stored as the image vector.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Index> image);
  static Perm identity(Index n);

  Index size() const { return static_cast<Index>(image_.size()); }
  Index operator()(Index i) const { return image_[static_cast<size_t>(i)]; }
  const std::vector<Index>& image() const { return image_; }

  Perm inverse() const;
  /// Composition acting left-to-right on points: (a.then(b))(i) = b(a(i)).
  Perm then(const Perm& b) const;
  bool is_identity() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.image_ == b.image_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.image_ < b.image_; }

  /// Cycles sorted by smallest element, each rotated to start at it.
  std::vector<std::vector<Index>> cycles() const;

 private:
  std::vector<Index> image_;
};

/// Monomial unit G = D(lambda) P_sigma: the invertible tropical matrix whose
/// only finite entries are G_{i, sigma(i)} = lambda_i, acting on vectors by
/// (G (x) x)_i = lambda_i + x_{sigma(i)}.
struct MonomialUnit {
  Perm sigma;
  Vec lambda;

  Index size() const { return static_cast<Index>(lambda.size()); }
};

MonomialUnit monomial_identity(Index n);
MonomialUnit monomial_mul(const MonomialUnit& g, const MonomialUnit& h);
MonomialUnit monomial_inv(const MonomialUnit& g);
ExtMat monomial_matrix(const MonomialUnit& g);
Vec monomial_apply(const MonomialUnit& g, const Vec& x);
bool monomial_equal(const MonomialUnit& g, const MonomialUnit& h);

/// Mean weight of each sigma-cycle of G, in the order of Perm::cycles().
/// A monomial unit has an eigenvector iff all cycle means agree, and the
/// common value is then its unique eigenvalue.
std::vector<Rat> cycle_means(const MonomialUnit& g);

/// All monomial units commuting with A, normalized to lambda_1 = 0 (one
/// representative per scaling class; every commuting unit is a tropical
/// scalar times exactly one listed unit). For each permutation sigma the
/// anchor identity A_{sigma(i), sigma(j)} = A_{i,j} + lambda_j - lambda_i
/// forces lambda up to a global constant; candidates failing the identity at
/// any position are discarded. Permutations are enumerated in lexicographic
/// order of their image vectors, so the identity unit always comes first.
/// Throws ResourceLimitError when A is larger than max_n.
std::vector<MonomialUnit> commuting_units(const Mat& a, Index max_n = 10);

struct GroupDecomposition {
  Mat e;
  std::vector<MonomialUnit> sigma;      ///< the finite group Sigma, eigenvalue 0 units
  Index order = 0;                      ///< |Sigma|
  std::vector<Perm> permutation_images; ///< underlying permutations, a subgroup of S_n
  std::string iso_summary;              ///< "R", "R x S2", or "R x Sigma, |Sigma| = N"
  bool closure_sampled = false;         ///< true when the closure check was sampled, not full
};

/// The finite part Sigma of H_E ~ R x Sigma for a full-rank idempotent E:
/// commuting units rescaled to eigenvalue 0. Verifies group closure,
/// inverses and eigenvalue-0 products at runtime (sampled once Sigma grows
/// past a few thousand elements; see assertion names in the CLI report).
GroupDecomposition sigma_group(const Mat& e, Index max_n = 10);

/// gamma(G) = G (x) E = E (x) G, the H-class element realized by a
/// commuting unit. Throws DoesNotCommuteError if G E != E G.
Mat gamma_image(const Mat& e, const MonomialUnit& g);

/// Inverse of gamma on H_E for full-rank idempotent E: recovers the unique
/// commuting unit G with G (x) E = A by matching columns of A to scaled
/// columns of E. Throws MatchFailedError when a column of A is proportional
/// to no column of E, and NotInHClassError when the matched unit fails
/// G E = E G (equivalently, when A is not in H_E).
MonomialUnit factor_hclass_element(const Mat& e, const Mat& a);

struct UnitDecomposition {
  Rat mu;             ///< the unique eigenvalue of the unit
  MonomialUnit unit0; ///< eigenvalue-0 part: g = mu (x) unit0
};

/// Splits a commuting unit along R x Sigma. Requires uniform cycle means.
UnitDecomposition decompose_unit(const MonomialUnit& g);

struct AffineForm {
  Perm sigma;
  Vec lambda;  ///< (A (x) x)_i = lambda_i + x_{sigma(i)} for all x in C(E)
};

/// Every element of H_E acts on the column space of the full-rank idempotent
/// E as a permutation of coordinates composed with a translation.
AffineForm affine_form(const Mat& e, const Mat& a);

/// A point of C(E) fixed projectively by every element of H_E: the exact
/// arithmetic mean, in projective coordinates, of the Sigma-orbit of the
/// first column of E. Postconditions (membership in C(E) and simultaneous
/// eigenvector property) are verified at runtime.
Vec common_eigenvector(const Mat& e, Index max_n = 10);

enum class PointClass { Interior, Boundary, Exterior };

/// Position of y relative to the column space of a full-rank idempotent E:
/// Exterior when y is not in C(E); otherwise Interior exactly when y has a
/// unique solution x with E (x) x = y, i.e. when every column index is
/// forced: for each j some row i attains its maximum only at j.
PointClass classify_point(const Mat& e, const Vec& y);

const char* point_class_name(PointClass c);

struct GroupStructureResult {
  IdempotentProfile profile;        ///< of the input idempotent
  Mat zero_diag_rep;                ///< zero-diagonal representative used (== input if unchanged)
  FullRankReduction reduction;      ///< reduction of the representative
  GroupDecomposition decomposition; ///< Sigma of the reduced full-rank idempotent
  std::vector<std::string> trace;   ///< human-readable pipeline steps
};

/// End-to-end structure of H_E for an arbitrary idempotent E: replace E by
/// its zero-diagonal representative (an isomorphism of maximal subgroups
/// inside the same D-class), reduce to the full-rank k x k core, and
/// enumerate Sigma there. H_E ~ R x Sigma with Sigma embedded in S_k,
/// k = rank(E).
GroupStructureResult group_structure(const Mat& e, Index max_n = 10);

}  // namespace trop
