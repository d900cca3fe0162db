#include <doctest.h>

#include "support/generators.hpp"
#include "trop/core.hpp"
#include "trop/io.hpp"

using namespace trop;
using troptest::Rng;

namespace {

Mat m2(long a, long b, long c, long d) {
  Mat m(2, 2);
  m << Rat(a), Rat(b), Rat(c), Rat(d);
  return m;
}

Vec v2(const Rat& a, const Rat& b) {
  Vec v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("tropical add and mul on worked values") {
  Mat a = m2(0, -1, -2, 0);
  Mat b = m2(1, 0, 0, -3);
  Mat sum = trop_add(a, b);
  CHECK(sum(0, 0) == 1);
  CHECK(sum(0, 1) == 0);
  CHECK(sum(1, 0) == 0);
  CHECK(sum(1, 1) == 0);

  Mat prod = trop_mul(a, a);  // E idempotent
  CHECK(equal(prod, a));

  Mat scaled = trop_scale(make_rat(1, 2), a);
  CHECK(scaled(0, 0) == make_rat(1, 2));
  CHECK(scaled(0, 1) == make_rat(-1, 2));

  CHECK_THROWS_AS(trop_add(a, Mat(3, 3)), DimensionError);
  CHECK_THROWS_AS(trop_mul(a, Mat(3, 3)), DimensionError);
}

TEST_CASE("extended arithmetic: bottom is additive identity and multiplicative annihilator") {
  ExtRat bot;
  CHECK(!bot.is_finite());
  CHECK(max(bot, ExtRat(Rat(-100))) == ExtRat(Rat(-100)));
  CHECK((bot + ExtRat(Rat(5))) == bot);

  ExtMat id = trop_identity(2);
  Mat e = m2(0, -1, -2, 0);
  CHECK(equal(trop_mul(id, e), to_extended(e)));
  CHECK(equal(trop_mul(to_extended(e), id), to_extended(e)));
  CHECK_THROWS_AS(to_finite(trop_identity(2)), InternalCheckError);
}

TEST_CASE("scalar_product and residual_solve worked values") {
  Mat e = m2(0, -1, -2, 0);
  Vec y = v2(Rat(0), Rat(5));
  CHECK(scalar_product(e.col(0), y) == 0);
  CHECK(scalar_product(e.col(1), y) == 1);
  Vec xhat = residual_solve(e, y);
  CHECK(xhat(0) == 0);
  CHECK(xhat(1) == 1);
  CHECK(!in_span(e, y).has_value());

  Vec member = v2(Rat(0), Rat(-2));  // first column
  auto w = in_span(e, member);
  REQUIRE(w.has_value());
  CHECK(equal(trop_mul(e, *w), Mat(member)));

  CHECK_THROWS_AS(scalar_product(Vec(2), Vec(3)), DimensionError);
}

TEST_CASE("residuation properties on random instances") {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    Index rows = static_cast<Index>(rng.integer(1, 5));
    Index cols = static_cast<Index>(rng.integer(1, 5));
    Mat a = troptest::random_matrix(rng, rows, cols);
    Vec y = troptest::random_vector(rng, rows);
    Vec xhat = residual_solve(a, y);

    // A (x) xhat <= y componentwise.
    Mat image = trop_mul(a, xhat);
    for (Index i = 0; i < rows; ++i) CHECK(image(i, 0) <= y(i));

    // Maximality: raising any coordinate breaks the inequality.
    for (Index j = 0; j < cols; ++j) {
      Vec up = xhat;
      up(j) = Rat(up(j) + make_rat(1, 64));
      Mat im2 = trop_mul(a, up);
      bool violated = false;
      for (Index i = 0; i < rows; ++i) violated = violated || im2(i, 0) > y(i);
      CHECK(violated);
    }

    // Tropical combinations are members, and the witness reproduces them.
    Vec z = troptest::random_span_point(rng, a);
    auto w = in_span(a, z);
    REQUIRE(w.has_value());
    CHECK(equal(trop_mul(a, *w), Mat(z)));
  }
}

TEST_CASE("is_multiple identifies exact scalings only") {
  Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    Index n = static_cast<Index>(rng.integer(1, 6));
    Vec x = troptest::random_vector(rng, n);
    Rat lam = rng.rational();
    Vec y = trop_scale(lam, Mat(x)).col(0);
    auto found = is_multiple(x, y);
    REQUIRE(found.has_value());
    CHECK(*found == lam);
    if (n >= 2) {
      y(0) = Rat(y(0) + 1);
      auto broken = is_multiple(x, y);
      CHECK(!broken.has_value());
    }
  }
}

TEST_CASE("span_subset and green relations") {
  Mat e = m2(0, -1, -2, 0);
  Mat e2 = m2(0, -1, -1, -2);
  CHECK(green_relation(e, e, GreenRel::H));
  CHECK(!green_relation(e, e2, GreenRel::H));

  // Scaling a matrix preserves both spans.
  Mat scaled = trop_scale(make_rat(-7, 3), e);
  CHECK(green_relation(e, scaled, GreenRel::R));
  CHECK(green_relation(e, scaled, GreenRel::L));
  CHECK(green_relation(e, scaled, GreenRel::H));

  // Dropping to a single column shrinks the column space strictly.
  Mat one_col(2, 2);
  one_col.col(0) = e.col(0);
  one_col.col(1) = e.col(0);
  CHECK(green_relation(one_col, e, GreenRel::LeqR));
  CHECK(!green_relation(e, one_col, GreenRel::LeqR));

  CHECK_THROWS_AS(green_relation(e, Mat(3, 3), GreenRel::R), DimensionError);
}

TEST_CASE("green equivalences are reflexive, symmetric, transitive on H-class samples") {
  Rng rng(303);
  for (int t = 0; t < 20; ++t) {
    Index n = static_cast<Index>(rng.integer(2, 4));
    Mat e = troptest::random_full_rank_idempotent(rng, n);
    GroupDecomposition gd = sigma_group(e);
    Mat a = troptest::random_hclass_element(rng, e, gd);
    Mat b = troptest::random_hclass_element(rng, e, gd);
    CHECK(green_relation(a, a, GreenRel::H));
    CHECK(green_relation(a, e, GreenRel::H));
    CHECK(green_relation(e, a, GreenRel::H));
    CHECK(green_relation(a, b, GreenRel::H));  // transitivity through e
  }
}

TEST_CASE("extremal_columns worked values") {
  Mat e = m2(0, -1, -2, 0);
  auto ext = extremal_columns(e);
  CHECK(ext == std::vector<Index>{0, 1});

  // Second column is a scaling of the first: one proportionality class.
  Mat e2 = m2(0, -1, -1, -2);
  CHECK(extremal_columns(e2) == std::vector<Index>{0});

  Mat flat = Mat::Constant(3, 3, Rat(0));
  CHECK(extremal_columns(flat) == std::vector<Index>{0});

  // Middle column of a segment is redundant.
  Mat seg(2, 3);
  seg << Rat(0), Rat(0), Rat(0), Rat(-2), Rat(-1), Rat(0);
  CHECK(extremal_columns(seg) == std::vector<Index>{0, 2});
}

TEST_CASE("extremal columns generate the span minimally") {
  Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    Index rows = static_cast<Index>(rng.integer(1, 5));
    Index cols = static_cast<Index>(rng.integer(1, 6));
    Mat a = troptest::random_matrix(rng, rows, cols, -4, 4);
    auto ext = extremal_columns(a);
    REQUIRE(!ext.empty());

    Mat gen(rows, static_cast<Index>(ext.size()));
    for (size_t j = 0; j < ext.size(); ++j) gen.col(static_cast<Index>(j)) = a.col(ext[j]);
    CHECK(span_equal(gen, a));

    // Minimality: no extremal column is spanned by the others.
    if (ext.size() >= 2) {
      for (size_t drop = 0; drop < ext.size(); ++drop) {
        Mat rest(rows, static_cast<Index>(ext.size()) - 1);
        Index c = 0;
        for (size_t j = 0; j < ext.size(); ++j)
          if (j != drop) rest.col(c++) = a.col(ext[j]);
        CHECK(!in_span(rest, a.col(ext[drop])).has_value());
      }
    }
  }
}

TEST_CASE("projectivize and lift") {
  Vec x(3);
  x << Rat(3), Rat(1), Rat(2);
  Vec p = projectivize(x);
  REQUIRE(p.size() == 2);
  CHECK(p(0) == 1);
  CHECK(p(1) == -1);
  Vec lifted = lift(p);
  REQUIRE(lifted.size() == 3);
  CHECK(lifted(2) == 0);
  // lift . projectivize is the canonical scaling representative.
  auto lam = is_multiple(lifted, x);
  REQUIRE(lam.has_value());
  CHECK(*lam == 2);

  CHECK_THROWS_AS(projectivize(Vec::Constant(1, Rat(0))), DimensionError);
}
