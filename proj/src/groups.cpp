#include "trop/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace trop {

namespace {

std::string index_list(const std::vector<Index>& v, Index offset = 1) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i] + offset);
  }
  return s + "]";
}

}  // namespace

Perm::Perm(std::vector<Index> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Index v : image_) {
    if (v < 0 || v >= static_cast<Index>(image_.size()) || seen[static_cast<size_t>(v)])
      throw DimensionError("permutation image vector is not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(Index n) {
  std::vector<Index> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), Index{0});
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<Index> img(image_.size());
  for (Index i = 0; i < size(); ++i) img[static_cast<size_t>(image_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& b) const {
  if (size() != b.size()) throw DimensionError("permutation sizes differ");
  std::vector<Index> img(image_.size());
  for (Index i = 0; i < size(); ++i) img[static_cast<size_t>(i)] = b((*this)(i));
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (Index i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<std::vector<Index>> Perm::cycles() const {
  std::vector<std::vector<Index>> out;
  std::vector<bool> seen(image_.size(), false);
  for (Index i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    std::vector<Index> cyc;
    for (Index j = i; !seen[static_cast<size_t>(j)]; j = (*this)(j)) {
      seen[static_cast<size_t>(j)] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

MonomialUnit monomial_identity(Index n) {
  MonomialUnit g;
  g.sigma = Perm::identity(n);
  g.lambda = Vec::Constant(n, Rat(0));
  return g;
}

MonomialUnit monomial_mul(const MonomialUnit& g, const MonomialUnit& h) {
  if (g.size() != h.size()) throw DimensionError("monomial unit sizes differ");
  MonomialUnit r;
  r.sigma = g.sigma.then(h.sigma);  // (GH)_{i, tau(sigma(i))} = lambda_i + mu_{sigma(i)}
  r.lambda = Vec(g.size());
  for (Index i = 0; i < g.size(); ++i) r.lambda(i) = Rat(g.lambda(i) + h.lambda(g.sigma(i)));
  return r;
}

MonomialUnit monomial_inv(const MonomialUnit& g) {
  MonomialUnit r;
  r.sigma = g.sigma.inverse();
  r.lambda = Vec(g.size());
  for (Index i = 0; i < g.size(); ++i) r.lambda(i) = Rat(-g.lambda(r.sigma(i)));
  return r;
}

ExtMat monomial_matrix(const MonomialUnit& g) {
  ExtMat m(g.size(), g.size());  // all bottom
  for (Index i = 0; i < g.size(); ++i) m(i, g.sigma(i)) = ExtRat(g.lambda(i));
  return m;
}

Vec monomial_apply(const MonomialUnit& g, const Vec& x) {
  if (x.size() != g.size()) throw DimensionError("monomial unit and vector sizes differ");
  Vec y(g.size());
  for (Index i = 0; i < g.size(); ++i) y(i) = Rat(g.lambda(i) + x(g.sigma(i)));
  return y;
}

bool monomial_equal(const MonomialUnit& g, const MonomialUnit& h) {
  return g.sigma == h.sigma && equal(g.lambda, h.lambda);
}

std::vector<Rat> cycle_means(const MonomialUnit& g) {
  std::vector<Rat> means;
  for (const auto& cyc : g.sigma.cycles()) {
    Rat sum(0);
    for (Index i : cyc) sum += g.lambda(i);
    means.push_back(Rat(sum / Rat(static_cast<long>(cyc.size()))));
  }
  return means;
}

std::vector<MonomialUnit> commuting_units(const Mat& a, Index max_n) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DimensionError("commuting_units: matrix must be square and nonempty");
  const Index n = a.rows();
  if (n > max_n)
    throw ResourceLimitError("commuting_units: matrix size " + std::to_string(n) +
                             " exceeds the enumeration cap " + std::to_string(max_n) +
                             " (raise the cap to override)");

  std::vector<MonomialUnit> units;
  std::vector<Index> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), Index{0});
  do {
    // Normalize lambda_1 = 0; the anchor identity with j = 1 forces the rest:
    // A_{sigma(i), sigma(1)} = A_{i,1} + lambda_1 - lambda_i.
    Vec lambda(n);
    lambda(0) = Rat(0);
    for (Index i = 1; i < n; ++i)
      lambda(i) = Rat(a(i, 0) - a(img[static_cast<size_t>(i)], img[0]));
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i)
      for (Index j = 0; j < n; ++j)
        if (Rat(a(img[static_cast<size_t>(i)], img[static_cast<size_t>(j)])) !=
            Rat(a(i, j) + lambda(j) - lambda(i))) {
          ok = false;
          break;
        }
    if (ok) {
      MonomialUnit g{Perm(img), lambda};
      // Belt and braces: the entrywise identity above is equivalent to the
      // dense commutation G A = A G; fail loudly if that ever drifts.
      ExtMat ga = trop_mul(monomial_matrix(g), a);
      ExtMat ag = trop_mul(to_extended(a), monomial_matrix(g));
      if (!equal(ga, ag))
        throw InternalCheckError("commuting_units: accepted unit fails dense commutation");
      units.push_back(std::move(g));
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return units;
}

GroupDecomposition sigma_group(const Mat& e, Index max_n) {
  IdempotentProfile prof = idempotent_profile(e);
  const Index n = e.rows();
  if (prof.rank != n)
    throw NotFullRankError("sigma_group: idempotent has rank " + std::to_string(prof.rank) +
                           " < " + std::to_string(n) +
                           "; reduce to the full-rank core first");

  GroupDecomposition gd;
  gd.e = e;
  for (const MonomialUnit& g : commuting_units(e, max_n)) {
    std::vector<Rat> means = cycle_means(g);
    for (const Rat& m : means)
      if (m != means.front())
        throw InternalCheckError(
            "sigma_group: commuting unit with non-uniform cycle means contradicts eigenvalue "
            "uniqueness");
    MonomialUnit g0{g.sigma, Vec((g.lambda.array() - means.front()).matrix())};
    gd.sigma.push_back(std::move(g0));
  }
  gd.order = static_cast<Index>(gd.sigma.size());

  // Index Sigma by underlying permutation; distinctness is forced (two
  // eigenvalue-0 units with equal permutations divide to a scalar, and the
  // scalar must be 0).
  std::map<std::vector<Index>, size_t> by_perm;
  for (size_t i = 0; i < gd.sigma.size(); ++i) {
    gd.permutation_images.push_back(gd.sigma[i].sigma);
    if (!by_perm.emplace(gd.sigma[i].sigma.image(), i).second)
      throw InternalCheckError("sigma_group: two units share a permutation image");
  }
  if (!gd.permutation_images.front().is_identity())
    throw InternalCheckError("sigma_group: enumeration did not start with the identity");
  if (!equal(gd.sigma.front().lambda, Vec::Constant(n, Rat(0))))
    throw InternalCheckError("sigma_group: identity unit has nonzero weights");

  auto check_member = [&](const MonomialUnit& u, const char* ctx) {
    auto it = by_perm.find(u.sigma.image());
    if (it == by_perm.end() || !equal(gd.sigma[it->second].lambda, u.lambda))
      throw InternalCheckError(std::string("sigma_group: ") + ctx +
                               " left Sigma, closure violated");
    for (const Rat& m : cycle_means(u))
      if (m != 0)
        throw InternalCheckError(std::string("sigma_group: ") + ctx +
                                 " has nonzero eigenvalue");
  };
  for (const MonomialUnit& g : gd.sigma) check_member(monomial_inv(g), "inverse of a unit");

  const size_t m = gd.sigma.size();
  const size_t full_limit = 1500;  // full closure check up to 1500^2 products
  if (m <= full_limit) {
    for (const MonomialUnit& g : gd.sigma)
      for (const MonomialUnit& h : gd.sigma) check_member(monomial_mul(g, h), "product of units");
  } else {
    gd.closure_sampled = true;
    uint64_t state = 0x9E3779B97F4A7C15ull;
    auto next = [&state]() {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return state >> 16;
    };
    for (int t = 0; t < 250000; ++t) {
      const MonomialUnit& g = gd.sigma[next() % m];
      const MonomialUnit& h = gd.sigma[next() % m];
      check_member(monomial_mul(g, h), "product of units (sampled)");
    }
  }

  if (gd.order == 1)
    gd.iso_summary = "R";
  else if (gd.order == 2)
    gd.iso_summary = "R x S2";
  else
    gd.iso_summary = "R x Sigma, |Sigma| = " + std::to_string(gd.order);
  return gd;
}

Mat gamma_image(const Mat& e, const MonomialUnit& g) {
  if (e.rows() != e.cols() || e.rows() != g.size())
    throw DimensionError("gamma_image: idempotent and unit sizes differ");
  const Index n = e.rows();
  Perm inv = g.sigma.inverse();
  Mat ge(n, n), eg(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      ge(i, j) = Rat(g.lambda(i) + e(g.sigma(i), j));
      eg(i, j) = Rat(g.lambda(inv(j)) + e(i, inv(j)));
    }
  if (!equal(ge, eg)) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (ge(i, j) != eg(i, j))
          throw DoesNotCommuteError("gamma_image: unit does not commute with the matrix, G*E and "
                                    "E*G differ first at (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  return ge;
}

MonomialUnit factor_hclass_element(const Mat& e, const Mat& a) {
  IdempotentProfile prof = idempotent_profile(e);
  const Index n = e.rows();
  if (prof.rank != n)
    throw NotFullRankError("factor_hclass_element: idempotent has rank " +
                           std::to_string(prof.rank) + " < " + std::to_string(n));
  if (a.rows() != n || a.cols() != n)
    throw DimensionError("factor_hclass_element: matrix size differs from the idempotent");

  // Columns of A = G E must be scaled columns of E: A_j = mu_j (x) E_{pi(j)}.
  std::vector<Index> pi(static_cast<size_t>(n), Index{-1});
  Vec mu(n);
  std::vector<Index> hit(static_cast<size_t>(n), Index{-1});
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i)
      if (auto lam = is_multiple(e.col(i), a.col(j))) {
        if (pi[static_cast<size_t>(j)] != -1)
          throw InternalCheckError(
              "factor_hclass_element: full-rank idempotent has proportional columns");
        pi[static_cast<size_t>(j)] = i;
        mu(j) = *lam;
      }
    if (pi[static_cast<size_t>(j)] == -1)
      throw MatchFailedError("factor_hclass_element: column " + std::to_string(j + 1) +
                             " of the matrix is proportional to no column of the idempotent");
    Index& owner = hit[static_cast<size_t>(pi[static_cast<size_t>(j)])];
    if (owner != -1)
      throw NotInHClassError("factor_hclass_element: columns " + std::to_string(owner + 1) +
                             " and " + std::to_string(j + 1) +
                             " both match column " + std::to_string(pi[static_cast<size_t>(j)] + 1) +
                             " of the idempotent");
    owner = j;
  }

  // G has its finite entry for row pi(j) in column j: sigma = pi^{-1}.
  MonomialUnit g;
  g.sigma = Perm(pi).inverse();
  g.lambda = Vec(n);
  for (Index j = 0; j < n; ++j) g.lambda(pi[static_cast<size_t>(j)]) = mu(j);

  Mat img;
  try {
    img = gamma_image(e, g);
  } catch (const DoesNotCommuteError&) {
    throw NotInHClassError(
        "factor_hclass_element: matched unit does not commute with the idempotent, so the "
        "matrix is not in its H-class");
  }
  if (!equal(img, a))
    throw InternalCheckError("factor_hclass_element: gamma of the matched unit differs from the "
                             "input");
  return g;
}

UnitDecomposition decompose_unit(const MonomialUnit& g) {
  std::vector<Rat> means = cycle_means(g);
  for (const Rat& m : means)
    if (m != means.front())
      throw NonUniformCycleMeansError("decompose_unit: cycle means " +
                                      rat_to_string(means.front()) + " and " + rat_to_string(m) +
                                      " differ; the unit has no eigenvector");
  UnitDecomposition dec;
  dec.mu = means.front();
  dec.unit0.sigma = g.sigma;
  dec.unit0.lambda = Vec((g.lambda.array() - dec.mu).matrix());
  return dec;
}

AffineForm affine_form(const Mat& e, const Mat& a) {
  MonomialUnit g = factor_hclass_element(e, a);
  // On C(E), A acts as its unit: A (x) x = G E x = G x.
  return AffineForm{g.sigma, g.lambda};
}

Vec common_eigenvector(const Mat& e, Index max_n) {
  GroupDecomposition gd = sigma_group(e, max_n);
  const Index n = e.rows();
  Vec x;
  if (n == 1) {
    x = e.col(0);
  } else {
    // Sigma acts on projective coordinates by affine maps, so the exact
    // arithmetic mean of an orbit is fixed by the whole group.
    Vec base = e.col(0);
    Vec sum = Vec::Constant(n - 1, Rat(0));
    for (const MonomialUnit& g : gd.sigma) {
      Vec p = projectivize(monomial_apply(g, base));
      for (Index i = 0; i + 1 < n; ++i) sum(i) += p(i);
    }
    Vec mean(n - 1);
    for (Index i = 0; i + 1 < n; ++i) mean(i) = Rat(sum(i) / Rat(static_cast<long>(gd.order)));
    x = lift(mean);
  }

  if (!in_span(e, x))
    throw InternalCheckError("common_eigenvector: candidate left the column space");
  for (const MonomialUnit& g : gd.sigma) {
    Vec gx = Mat(trop_mul(gamma_image(e, g), x)).col(0);
    auto c = is_multiple(x, gx);
    if (!c || *c != 0)
      throw InternalCheckError("common_eigenvector: candidate is not fixed by Sigma");
  }
  return x;
}

PointClass classify_point(const Mat& e, const Vec& y) {
  IdempotentProfile prof = idempotent_profile(e);
  const Index n = e.rows();
  if (prof.rank != n)
    throw NotFullRankError("classify_point: idempotent has rank " + std::to_string(prof.rank) +
                           " < " + std::to_string(n));
  if (y.size() != n) throw DimensionError("classify_point: vector length differs from the matrix");

  auto witness = in_span(e, y);
  if (!witness) return PointClass::Exterior;
  const Vec& xhat = *witness;

  // y is Interior iff the principal solution is the only one, iff every
  // column index is the unique maximizer in some row.
  std::vector<bool> essential(static_cast<size_t>(n), false);
  for (Index i = 0; i < n; ++i) {
    Index arg = -1;
    bool unique = true;
    for (Index j = 0; j < n; ++j)
      if (Rat(e(i, j) + xhat(j)) == y(i)) {
        if (arg == -1)
          arg = j;
        else
          unique = false;
      }
    if (arg == -1)
      throw InternalCheckError("classify_point: row maximum lost after residuation");
    if (unique) essential[static_cast<size_t>(arg)] = true;
  }
  for (Index j = 0; j < n; ++j)
    if (!essential[static_cast<size_t>(j)]) return PointClass::Boundary;
  return PointClass::Interior;
}

const char* point_class_name(PointClass c) {
  switch (c) {
    case PointClass::Interior:
      return "Interior";
    case PointClass::Boundary:
      return "Boundary";
    case PointClass::Exterior:
      return "Exterior";
  }
  return "?";
}

GroupStructureResult group_structure(const Mat& e, Index max_n) {
  GroupStructureResult res;
  res.profile = idempotent_profile(e);  // rejects non-idempotents before any enumeration
  const Index n = e.rows();
  const Index k = res.profile.rank;
  res.trace.push_back("input: " + std::to_string(n) + "x" + std::to_string(n) +
                      " idempotent, rank " + std::to_string(k) + ", zero diagonal: " +
                      (res.profile.zero_diagonal ? "yes" : "no"));

  res.zero_diag_rep = zero_diag_representative(e);
  if (equal(res.zero_diag_rep, e))
    res.trace.push_back("matrix is its own zero-diagonal representative");
  else
    res.trace.push_back(
        "replaced by its zero-diagonal representative (same D-class, isomorphic maximal "
        "subgroup)");

  res.reduction = full_rank_reduce(res.zero_diag_rep);
  res.trace.push_back("reduced to the full-rank core F at representatives " +
                      index_list(res.reduction.representatives) + ", size " + std::to_string(k) +
                      "x" + std::to_string(k));

  res.decomposition = sigma_group(res.reduction.f, max_n);
  res.trace.push_back("Sigma enumerated inside S_" + std::to_string(k) + ": order " +
                      std::to_string(res.decomposition.order) + "; H_E ~ " +
                      res.decomposition.iso_summary);
  return res;
}

}  // namespace trop
