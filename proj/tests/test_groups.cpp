#include <doctest.h>

#include <set>

#include "support/generators.hpp"
#include "trop/groups.hpp"
#include "trop/io.hpp"

using namespace trop;
using troptest::Rng;

namespace {

Mat m2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

const Mat kE = m2(Rat(0), Rat(-1), Rat(-2), Rat(0));
const Mat kE2 = m2(Rat(0), Rat(-1), Rat(-1), Rat(-2));  // rank-1 idempotent
const Mat kR1 = m2(Rat(0), Rat(-1), Rat(1), Rat(0));    // rank-1, zero diagonal

Perm perm(std::vector<Index> img) { return Perm(std::move(img)); }

}  // namespace

TEST_CASE("permutation basics") {
  Perm p = perm({1, 2, 0});
  CHECK(p(0) == 1);
  CHECK(p.inverse()(1) == 0);
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(Perm::identity(4).is_identity());
  auto cycles = p.cycles();
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0] == std::vector<Index>{0, 1, 2});
  CHECK_THROWS_AS(perm({0, 0, 1}), DimensionError);
}

TEST_CASE("monomial unit algebra agrees with dense tropical products") {
  Rng rng(1616);
  for (int t = 0; t < 80; ++t) {
    Index n = static_cast<Index>(rng.integer(1, 6));
    MonomialUnit g = troptest::random_unit(rng, n);
    MonomialUnit h = troptest::random_unit(rng, n);

    ExtMat dense = trop_mul(monomial_matrix(g), monomial_matrix(h));
    CHECK(equal(dense, monomial_matrix(monomial_mul(g, h))));

    CHECK(equal(monomial_matrix(monomial_mul(g, monomial_inv(g))),
                trop_identity(n)));

    Vec x = troptest::random_vector(rng, n);
    ExtMat via_dense = trop_mul(monomial_matrix(g), x);
    Vec via_apply = monomial_apply(g, x);
    for (Index i = 0; i < n; ++i) CHECK(via_dense(i, 0) == ExtRat(via_apply(i)));
  }
}

TEST_CASE("cycle means and unit decomposition") {
  MonomialUnit swap;
  swap.sigma = perm({1, 0});
  swap.lambda = Vec(2);
  swap.lambda << make_rat(1, 2), make_rat(-1, 2);
  auto means = cycle_means(swap);
  REQUIRE(means.size() == 1);
  CHECK(means[0] == 0);

  MonomialUnit shifted;
  shifted.sigma = perm({1, 0});
  shifted.lambda = Vec(2);
  shifted.lambda << Rat(2), Rat(1);
  UnitDecomposition dec = decompose_unit(shifted);
  CHECK(dec.mu == make_rat(3, 2));
  CHECK(dec.unit0.lambda(0) == make_rat(1, 2));
  CHECK(dec.unit0.lambda(1) == make_rat(-1, 2));

  MonomialUnit bad;
  bad.sigma = Perm::identity(2);
  bad.lambda = Vec(2);
  bad.lambda << Rat(0), Rat(1);
  CHECK_THROWS_AS(decompose_unit(bad), NonUniformCycleMeansError);
}

TEST_CASE("commuting_units worked value and enumeration order") {
  auto units = commuting_units(kE);
  REQUIRE(units.size() == 2);
  CHECK(units[0].sigma.is_identity());
  CHECK(units[0].lambda(0) == 0);
  CHECK(units[0].lambda(1) == 0);
  CHECK(units[1].sigma == perm({1, 0}));
  CHECK(units[1].lambda(0) == 0);
  CHECK(units[1].lambda(1) == -1);  // lambda_2 = E_{2,1} - E_{1,2}

  CHECK_THROWS_AS(commuting_units(Mat::Constant(11, 11, Rat(0))), ResourceLimitError);
  CHECK_THROWS_AS(commuting_units(Mat::Constant(4, 4, Rat(0)), 3), ResourceLimitError);
}

TEST_CASE("sigma_group worked value: H_E ~ R x S2") {
  GroupDecomposition gd = sigma_group(kE);
  CHECK(gd.order == 2);
  CHECK(gd.iso_summary == "R x S2");
  CHECK(gd.sigma[0].sigma.is_identity());
  CHECK(gd.sigma[1].sigma == perm({1, 0}));
  CHECK(gd.sigma[1].lambda(0) == make_rat(1, 2));
  CHECK(gd.sigma[1].lambda(1) == make_rat(-1, 2));
  CHECK(!gd.closure_sampled);
}

TEST_CASE("sigma_group of the flat idempotent is the full symmetric group") {
  GroupDecomposition gd = sigma_group(Mat::Constant(1, 1, Rat(0)));
  CHECK(gd.order == 1);
  CHECK(gd.iso_summary == "R");

  CHECK_THROWS_AS(sigma_group(Mat::Constant(3, 3, Rat(0))), NotFullRankError);

  // Diagonally dominant symmetric idempotent: Sigma = S_3.
  Mat e(3, 3);
  e << Rat(0), Rat(-1), Rat(-1), Rat(-1), Rat(0), Rat(-1), Rat(-1), Rat(-1), Rat(0);
  GroupDecomposition s3 = sigma_group(e);
  CHECK(s3.order == 6);
  CHECK(s3.iso_summary == "R x Sigma, |Sigma| = 6");
  std::set<std::vector<Index>> images;
  for (const Perm& p : s3.permutation_images) images.insert(p.image());
  CHECK(images.size() == 6);
}

TEST_CASE("gamma_image worked value and commutation failure") {
  GroupDecomposition gd = sigma_group(kE);
  Mat img = gamma_image(kE, gd.sigma[1]);
  CHECK(equal(img, m2(make_rat(-3, 2), make_rat(1, 2), make_rat(-1, 2), make_rat(-3, 2))));

  MonomialUnit bare_swap;
  bare_swap.sigma = perm({1, 0});
  bare_swap.lambda = Vec::Constant(2, Rat(0));
  CHECK_THROWS_AS(gamma_image(kE, bare_swap), DoesNotCommuteError);
}

TEST_CASE("factor_hclass_element worked value and error taxonomy") {
  Mat a = m2(make_rat(-3, 2), make_rat(1, 2), make_rat(-1, 2), make_rat(-3, 2));
  MonomialUnit g = factor_hclass_element(kE, a);
  CHECK(g.sigma == perm({1, 0}));
  CHECK(g.lambda(0) == make_rat(1, 2));
  CHECK(g.lambda(1) == make_rat(-1, 2));

  // A column proportional to no column of E.
  Mat bad = m2(Rat(0), Rat(0), Rat(5), Rat(0));
  CHECK_THROWS_AS(factor_hclass_element(kE, bad), MatchFailedError);

  // Two columns matching the same column of E: R-class of E, but not H.
  Mat collapsed(2, 2);
  collapsed.col(0) = kE.col(0);
  collapsed.col(1) = trop_scale(Rat(1), Mat(kE.col(0))).col(0);
  CHECK_THROWS_AS(factor_hclass_element(kE, collapsed), NotInHClassError);

  // Column-permuted E matches columns but fails commutation when the
  // permutation is not a symmetry: E with columns swapped.
  Mat swapped(2, 2);
  swapped.col(0) = kE.col(1);
  swapped.col(1) = kE.col(0);
  // E columns swapped equals gamma of the swap unit when one exists; for kE
  // the swap unit exists only with weights (1/2,-1/2), so the bare swap of
  // columns is NOT an H-class element.
  CHECK_THROWS_AS(factor_hclass_element(kE, swapped), NotInHClassError);

  CHECK_THROWS_AS(factor_hclass_element(kE2, a), NotFullRankError);
}

TEST_CASE("gamma and factor are mutually inverse on Sigma and scalings") {
  Rng rng(1717);
  for (int t = 0; t < 30; ++t) {
    Index n = static_cast<Index>(rng.integer(1, 5));
    Mat e = troptest::random_full_rank_idempotent(rng, n);
    GroupDecomposition gd = sigma_group(e);

    std::set<std::string> images_seen;
    for (const MonomialUnit& g : gd.sigma) {
      Mat img = gamma_image(e, g);
      CHECK(green_relation(img, e, GreenRel::H));
      MonomialUnit back = factor_hclass_element(e, img);
      CHECK(monomial_equal(back, g));
      images_seen.insert(format_matrix(img));
    }
    CHECK(images_seen.size() == gd.sigma.size());  // gamma injective on Sigma

    for (int s = 0; s < 10; ++s) {
      const MonomialUnit& g =
          gd.sigma[static_cast<size_t>(rng.integer(0, static_cast<long>(gd.order) - 1))];
      Rat mu = rng.rational(-5, 5, 2);
      Mat scaled = trop_scale(mu, gamma_image(e, g));
      MonomialUnit back = factor_hclass_element(e, scaled);
      UnitDecomposition dec = decompose_unit(back);
      CHECK(dec.mu == mu);
      CHECK(monomial_equal(dec.unit0, g));
    }
  }
}

TEST_CASE("gamma is multiplicative on Sigma") {
  Rng rng(1818);
  for (int t = 0; t < 20; ++t) {
    Index n = static_cast<Index>(rng.integer(2, 4));
    Mat e = troptest::random_full_rank_idempotent(rng, n);
    GroupDecomposition gd = sigma_group(e);
    for (const MonomialUnit& g : gd.sigma)
      for (const MonomialUnit& h : gd.sigma) {
        Mat lhs = gamma_image(e, monomial_mul(g, h));
        Mat rhs = trop_mul(gamma_image(e, g), gamma_image(e, h));
        CHECK(equal(lhs, rhs));
      }
  }
}

TEST_CASE("affine_form matches the tropical action on the column space") {
  Mat a = m2(make_rat(-3, 2), make_rat(1, 2), make_rat(-1, 2), make_rat(-3, 2));
  AffineForm f = affine_form(kE, a);
  CHECK(f.sigma == perm({1, 0}));
  CHECK(f.lambda(0) == make_rat(1, 2));

  Rng rng(1919);
  for (int t = 0; t < 25; ++t) {
    Index n = static_cast<Index>(rng.integer(1, 5));
    Mat e = troptest::random_full_rank_idempotent(rng, n);
    GroupDecomposition gd = sigma_group(e);
    Mat h = troptest::random_hclass_element(rng, e, gd);
    AffineForm form = affine_form(e, h);
    for (int s = 0; s < 20; ++s) {
      Vec x = troptest::random_span_point(rng, e);
      Vec via_matrix = Mat(trop_mul(h, x)).col(0);
      for (Index i = 0; i < n; ++i)
        CHECK(via_matrix(i) == Rat(form.lambda(i) + x(form.sigma(i))));
    }
  }
}

TEST_CASE("common_eigenvector worked values and invariants") {
  Vec v = common_eigenvector(kE);
  REQUIRE(v.size() == 2);
  CHECK(v(0) == make_rat(1, 2));
  CHECK(v(1) == 0);

  Vec v1 = common_eigenvector(Mat::Constant(1, 1, Rat(0)));
  CHECK(v1(0) == 0);

  Rng rng(2020);
  for (int t = 0; t < 30; ++t) {
    Index n = static_cast<Index>(rng.integer(1, 5));
    Mat e = troptest::random_full_rank_idempotent(rng, n);
    Vec x = common_eigenvector(e);
    REQUIRE(in_span(e, x).has_value());
    GroupDecomposition gd = sigma_group(e);
    for (const MonomialUnit& g : gd.sigma) {
      Vec gx = Mat(trop_mul(gamma_image(e, g), x)).col(0);
      CHECK(equal(gx, x));  // eigenvalue-0 units fix it exactly
    }
  }
}

TEST_CASE("classify_point worked values") {
  Vec boundary(2), interior(2), exterior(2);
  boundary << Rat(0), Rat(-2);
  interior << make_rat(1, 2), Rat(0);
  exterior << Rat(0), Rat(5);
  CHECK(classify_point(kE, boundary) == PointClass::Boundary);
  CHECK(classify_point(kE, interior) == PointClass::Interior);
  CHECK(classify_point(kE, exterior) == PointClass::Exterior);

  CHECK_THROWS_AS(classify_point(kR1, boundary), NotFullRankError);
}

TEST_CASE("classify_point agrees with the perturbation oracle") {
  Rng rng(2121);
  int interior_seen = 0, boundary_seen = 0, exterior_seen = 0;
  for (int t = 0; t < 40; ++t) {
    Index n = static_cast<Index>(rng.integer(2, 5));
    Mat e = troptest::random_full_rank_idempotent(rng, n);
    for (int s = 0; s < 25; ++s) {
      Vec y = s % 2 == 0 ? troptest::random_vector(rng, n)
                         : troptest::random_span_point(rng, e);
      PointClass got = classify_point(e, y);
      CHECK(got == troptest::classify_by_perturbation(e, y));
      if (got == PointClass::Interior) ++interior_seen;
      if (got == PointClass::Boundary) ++boundary_seen;
      if (got == PointClass::Exterior) ++exterior_seen;

      // Scaling invariance.
      Vec scaled = trop_scale(rng.rational(-3, 3, 2), Mat(y)).col(0);
      CHECK(classify_point(e, scaled) == got);
    }
    // Columns of E are never Exterior.
    for (Index j = 0; j < n; ++j)
      CHECK(classify_point(e, e.col(j)) != PointClass::Exterior);
  }
  // The sample must exercise all three classes.
  CHECK(interior_seen > 0);
  CHECK(boundary_seen > 0);
  CHECK(exterior_seen > 0);
}

TEST_CASE("group_structure pipeline and the 2x2 law") {
  GroupStructureResult full = group_structure(kE);
  CHECK(full.decomposition.order == 2);
  CHECK(full.profile.rank == 2);
  CHECK(equal(full.zero_diag_rep, kE));

  GroupStructureResult r1 = group_structure(kE2);
  CHECK(r1.decomposition.order == 1);
  CHECK(r1.decomposition.iso_summary == "R");
  CHECK(r1.profile.rank == 1);

  // Non-idempotent input is rejected before any enumeration, even above the
  // resource cap.
  Mat big = Mat::Constant(12, 12, Rat(0));
  big(0, 1) = Rat(1);  // breaks idempotency: (E^2)_{0,1} would stay 1 but (0,0) becomes 2
  CHECK_THROWS_AS(group_structure(big), NotIdempotentError);

  Rng rng(2222);
  for (int t = 0; t < 60; ++t) {
    Mat e = troptest::random_idempotent_mixed(rng, t, 2);
    if (e.rows() != 2) continue;
    GroupStructureResult gs = group_structure(e);
    CHECK((gs.decomposition.order == 1 || gs.decomposition.order == 2));
    if (gs.decomposition.order == 2) CHECK(gs.decomposition.sigma[1].sigma == perm({1, 0}));
  }
}

TEST_CASE("sigma of reduced matrix equals group of the original H-class") {
  // For rank-k zero-diagonal E, H_E ~ H_F via lift/reduce; the group command
  //'s pipeline must report Sigma computed on F. Spot-check that gamma images
  // of Sigma lift to commuting H_E elements.
  Rng rng(2323);
  for (int t = 0; t < 15; ++t) {
    Index n = static_cast<Index>(rng.integer(2, 5));
    Index k = static_cast<Index>(rng.integer(1, static_cast<long>(n) - 1));
    Mat e = troptest::random_rank_k_zero_diag(rng, n, k);
    GroupStructureResult gs = group_structure(e);
    FullRankReduction red = full_rank_reduce(e);
    for (const MonomialUnit& g : gs.decomposition.sigma) {
      Mat a = lift_hclass_element(red, gamma_image(red.f, g));
      CHECK(green_relation(a, e, GreenRel::H));
      CHECK(equal(trop_mul(a, e), trop_mul(e, a)));
    }
  }
}
