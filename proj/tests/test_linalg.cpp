#include "support.hpp"
#include "tropical/check/sample.hpp"

using namespace tt;
namespace ck = tropical::check;

namespace {

// Largest grid value l (step 1/6, |l| <= 30) with l x <= y, or nothing when
// even -30 fails. A brute-force stand-in for the definition of the bracket.
std::optional<Scalar> bracket_by_scan(const Vector& x, const Vector& y) {
  std::optional<Scalar> best;
  for (long k = -180; k <= 180; ++k) {
    const Scalar l = Scalar::rational(k, 6);
    if (leq(scale(l, x), y)) best = l;
  }
  return best;
}

}  // namespace

TEST(Matrix, ProductExamples) {
  EXPECT_EQ(mul(M("0 1; -inf 2"), M("0; 0")), M("1; 2"));
  const Matrix a = M("3 -1 -inf; 0 1/2 inf");
  EXPECT_EQ(mul(a, Matrix::identity(3)), a);
  EXPECT_EQ(mul(Matrix::identity(2), a), a);
  EXPECT_EQ(mul(M("-inf"), M("inf")), M("-inf"));
  EXPECT_THROW(mul(M("0 1"), M("0 1")), ShapeError);
}

TEST(Matrix, ProductIsAssociativeOnRandomTriples) {
  ck::Rng rng(11);
  ck::EntryPool pool;
  for (int t = 0; t < 300; ++t) {
    const std::size_t p = ck::sample_dim(rng, 1, 5), q = ck::sample_dim(rng, 1, 5), r = ck::sample_dim(rng, 1, 5),
                      s = ck::sample_dim(rng, 1, 5);
    const Matrix a = ck::sample_matrix(rng, pool, Domain::TBar, p, q);
    const Matrix b = ck::sample_matrix(rng, pool, Domain::TBar, q, r);
    const Matrix c = ck::sample_matrix(rng, pool, Domain::TBar, r, s);
    ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    ASSERT_EQ(transpose(mul(a, b)), mul(transpose(b), transpose(a)));
  }
}

TEST(Matrix, ScalingAndOrder) {
  EXPECT_EQ(scale(Scalar(2), V("0 -1")), V("2 1"));
  EXPECT_EQ(scale(neg_inf(), V("0 5")), V("-inf -inf"));
  EXPECT_EQ(scale(pos_inf(), V("0 -inf")), V("inf -inf"));
  EXPECT_EQ(oplus(V("0 3"), V("1 2")), V("1 3"));
  EXPECT_TRUE(leq(V("-inf 0"), V("0 0")));
  EXPECT_FALSE(leq(V("1 0"), V("0 1")));
  EXPECT_FALSE(leq(V("0 1"), V("1 0")));
  EXPECT_THROW(oplus(V("0"), V("0 0")), ShapeError);
  EXPECT_THROW(oplus(V("0 0"), R("0 0")), ShapeError);
}

TEST(Matrix, Transpose) {
  EXPECT_EQ(transpose(M("0 1; 2 3")), M("0 2; 1 3"));
  const Matrix a = M("1 -inf 2/3");
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(transpose(a).rows(), 3u);
  EXPECT_EQ(transpose(a).cols(), 1u);
}

TEST(Matrix, ShapeValidation) {
  EXPECT_THROW(Matrix(0, 2), ShapeError);
  EXPECT_THROW(Vector(std::vector<Scalar>{}), ShapeError);
  EXPECT_THROW(M("0 1; 2 3").to_vector(), ShapeError);
  EXPECT_EQ(M("0 1").to_vector().orientation(), Orientation::Row);
  EXPECT_EQ(M("0; 1").to_vector().orientation(), Orientation::Column);
  EXPECT_EQ(M("0 -inf; 1 2").domain(), Domain::T);
}

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(V("0 0"), V("1 2")), Scalar(1));
  EXPECT_EQ(bracket_by_scan(V("0 0"), V("1 2")), Scalar(1));
  EXPECT_EQ(bracket(V("0 -inf"), V("-inf 0")), neg_inf());
  EXPECT_FALSE(bracket_by_scan(V("0 -inf"), V("-inf 0")).has_value());
  EXPECT_EQ(bracket(V("-inf -inf"), V("3 -inf")), pos_inf());
  EXPECT_EQ(bracket(V("-inf -inf"), V("-inf -inf")), pos_inf());
  EXPECT_THROW(bracket(V("0"), V("0 0")), ShapeError);
}

TEST(Bracket, MatchesGridScanOnSmallRationals) {
  ck::Rng rng(3);
  ck::EntryPool pool;
  pool.max_num = 4;
  pool.dens = {1, 2, 3};
  for (int t = 0; t < 400; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 4);
    const Vector x = ck::sample_vector(rng, pool, Domain::TBar, n);
    const Vector y = ck::sample_vector(rng, pool, Domain::TBar, n);
    const Scalar b = bracket(x, y);
    const auto scan = bracket_by_scan(x, y);
    if (b.is_finite()) {
      ASSERT_EQ(scan, b) << inline_string(x) << " " << inline_string(y);
    } else if (b.is_neg_inf()) {
      ASSERT_FALSE(scan.has_value()) << inline_string(x) << " " << inline_string(y);
    } else {
      ASSERT_EQ(scan, Scalar(30));  // every scaling fits
      ASSERT_TRUE(leq(scale(pos_inf(), x), y));
    }
  }
}

TEST(Bracket, SignChangeAndOrder) {
  ck::Rng rng(5);
  ck::EntryPool pool;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 6);
    const Vector x = ck::sample_vector(rng, pool, Domain::TBar, n);
    Vector y = ck::sample_vector(rng, pool, Domain::TBar, n);
    if (t % 2) y = oplus(x, y);
    ASSERT_EQ(bracket(x, y), bracket(neg(y), neg(x)));
    ASSERT_EQ(leq(x, y), Scalar(0) <= bracket(x, y));
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert(V("0 0"), V("0 3")), Scalar(3));
  const Vector x = V("1 4");
  EXPECT_EQ(hilbert(x, scale(Scalar(7), x)), Scalar(0));
  EXPECT_EQ(hilbert(V("0 -inf"), V("0 0")), pos_inf());
  EXPECT_EQ(hilbert(V("-inf -inf"), V("-inf -inf")), Scalar(0));
  EXPECT_EQ(hilbert(V("inf 0"), V("inf 1")), Scalar(0));
  EXPECT_EQ(hilbert(V("inf"), V("inf")), Scalar(0));
  EXPECT_EQ(hilbert(V("-inf -inf"), V("0 0")), pos_inf());
}

TEST(Hilbert, ScanOfScalingsAgrees) {
  // d(x, y) for finite x, y is the spread max(y - x) - min(y - x).
  ck::Rng rng(9);
  ck::EntryPool pool;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 6);
    const Vector x = ck::sample_vector(rng, pool, Domain::FT, n);
    const Vector y = ck::sample_vector(rng, pool, Domain::FT, n);
    mpq_class lo = y[0].value() - x[0].value(), hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      const mpq_class d = y[i].value() - x[i].value();
      if (d < lo) lo = d;
      if (d > hi) hi = d;
    }
    ASSERT_EQ(hilbert(x, y), Scalar(mpq_class(hi - lo)));
  }
}

TEST(ProjNormalize, Examples) {
  EXPECT_EQ(proj_normalize(V("3 5")), V("-2 0"));
  EXPECT_EQ(proj_normalize(V("-inf -inf")), V("-inf -inf"));
  EXPECT_EQ(proj_normalize(V("0 inf -1")), V("0 inf -1"));
  EXPECT_EQ(proj_normalize(V("-inf 1/2 -3")), V("-inf 0 -7/2"));
}

TEST(ProjNormalize, IdempotentAndProjectivelyTrivial) {
  ck::Rng rng(13);
  ck::EntryPool pool;
  for (int t = 0; t < 500; ++t) {
    const Vector x = ck::sample_vector(rng, pool, Domain::T, ck::sample_dim(rng, 1, 6));
    const Vector nx = proj_normalize(x);
    ASSERT_EQ(proj_normalize(nx), nx);
    ASSERT_EQ(hilbert(x, nx), Scalar(0));
    ASSERT_EQ(finite_ratio(x, nx).has_value(), true);
  }
}
