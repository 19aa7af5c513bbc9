#include "support.hpp"
#include "tropical/check/sample.hpp"

using namespace tt;
namespace ck = tropical::check;

namespace {

ConvexSpan span_of(std::initializer_list<const char*> gens) {
  std::vector<Vector> vs;
  for (const char* g : gens) vs.push_back(V(g));
  return ConvexSpan(vs);
}

// Equal up to a finite scaling (the same ray).
bool same_ray(const Vector& x, const Vector& y) { return finite_ratio(x, y).has_value(); }

}  // namespace

TEST(PrincipalCoeffs, Examples) {
  EXPECT_EQ(principal_coeffs(span_of({"0 0", "0 1"}), V("1 2")), (std::vector<Scalar>{1, 1}));
  EXPECT_EQ(principal_coeffs(span_of({"0 0"}), V("3 3")), (std::vector<Scalar>{3}));
  EXPECT_EQ(principal_coeffs(span_of({"0 0"}), V("-inf -inf")), (std::vector<Scalar>{neg_inf()}));
  EXPECT_THROW(principal_coeffs(span_of({"0 0"}), V("0 0 0")), ShapeError);
}

TEST(Member, Examples) {
  const ConvexSpan s = span_of({"0 0", "0 1"});
  const auto yes = member(s, V("1 2"));
  ASSERT_TRUE(yes.has_value());
  EXPECT_EQ(*yes, (std::vector<Scalar>{1, 1}));
  EXPECT_FALSE(member(s, V("0 -5")).has_value());
  EXPECT_EQ(combine(s, principal_coeffs(s, V("0 -5"))), V("-5 -5"));
  for (const auto& g : s.generators()) EXPECT_TRUE(contains(s, g));
}

TEST(Member, ZeroSpanHoldsOnlyTheZeroVector) {
  const ConvexSpan z(2, Orientation::Column, Domain::T);
  EXPECT_TRUE(contains(z, V("-inf -inf")));
  EXPECT_FALSE(contains(z, V("0 -inf")));
}

TEST(PrincipalSolution, Examples) {
  EXPECT_EQ(principal_solution(Matrix::identity(2), V("4 7")), V("4 7"));
  const Matrix b = M("0; 0");
  const Vector x = principal_solution(b, V("0 1"));
  EXPECT_EQ(x, V("0"));
  EXPECT_NE(mul(b, x), V("0 1"));
  const Matrix b2 = M("0 0; 0 1");
  EXPECT_EQ(principal_solution(b2, V("1 2")), V("1 1"));
  EXPECT_EQ(mul(b2, V("1 1")), V("1 2"));
}

TEST(PrincipalSolution, GreatestSubsolutionLaw) {
  ck::Rng rng(21);
  ck::EntryPool pool;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 5), k = ck::sample_dim(rng, 1, 5);
    const Matrix b = ck::sample_matrix(rng, pool, Domain::TBar, n, k);
    const Vector c = ck::sample_vector(rng, pool, Domain::TBar, n);
    const Vector x = principal_solution(b, c);
    ASSERT_TRUE(leq(mul(b, x), c));
    // Any other subsolution lies below x.
    const Vector mu = ck::sample_vector(rng, pool, Domain::TBar, k);
    if (leq(mul(b, mu), c)) {
      ASSERT_TRUE(leq(mu, x)) << to_string(b) << inline_string(c) << inline_string(mu);
    }
    // And a scaled-down copy of x is a subsolution.
    ASSERT_TRUE(leq(mul(b, scale(Scalar(-1), x)), c));
  }
}

TEST(Member, InvariantUnderPermutationAndRedundantGenerators) {
  ck::Rng rng(23);
  ck::EntryPool pool;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 4), k = ck::sample_dim(rng, 1, 4);
    const ConvexSpan s = ConvexSpan::columns_of(ck::sample_matrix(rng, pool, Domain::TBar, n, k), Domain::TBar);
    std::vector<Vector> gens = s.generators();
    gens.push_back(ck::sample_member(rng, pool, s, Domain::TBar));
    rng.shuffle(gens);
    const ConvexSpan s2(gens, Domain::TBar);
    ASSERT_TRUE(span_equal(s, s2));
    for (int j = 0; j < 4; ++j) {
      const Vector v = j % 2 ? ck::sample_member(rng, pool, s, Domain::TBar)
                             : ck::sample_vector(rng, pool, Domain::TBar, n);
      ASSERT_EQ(contains(s, v), contains(s2, v));
    }
  }
}

TEST(WeakBasis, Examples) {
  const ConvexSpan s = span_of({"0 0", "0 1", "1 2"});
  EXPECT_EQ(s.weak_basis_indices(), (std::vector<std::size_t>{0, 2}));
  const ConvexSpan b = weak_basis(s);
  ASSERT_EQ(b.size(), 2u);
  // Scanning ascending drops (0,1) = -1 (1,2); the retained pair spans the
  // same rays as {(0,0), (0,1)}.
  EXPECT_TRUE(same_ray(b.generators()[0], V("0 0")));
  EXPECT_TRUE(same_ray(b.generators()[1], V("0 1")));
  EXPECT_TRUE(span_equal(b, span_of({"0 0", "0 1"})));

  EXPECT_TRUE(weak_basis(span_of({"-inf -inf"})).empty());
  EXPECT_EQ(weak_basis(span_of({"0 -inf", "-inf 0"})).size(), 2u);
  EXPECT_EQ(span_of({"1 1", "0 0", "-inf -inf"}).weak_basis_indices(), (std::vector<std::size_t>{1}));
}

TEST(WeakBasis, IdempotentAndSpanning) {
  ck::Rng rng(29);
  ck::EntryPool pool;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 5), k = ck::sample_dim(rng, 1, 6);
    const ConvexSpan s = ConvexSpan::columns_of(ck::sample_matrix(rng, pool, Domain::TBar, n, k), Domain::TBar);
    const ConvexSpan b = weak_basis(s);
    if (b.empty()) {
      for (const auto& g : s.generators()) ASSERT_TRUE(g.is_zero());
      continue;
    }
    ASSERT_TRUE(span_equal(s, b));
    ASSERT_EQ(weak_basis(b).size(), b.size());
    // Minimality: no retained vector lies in the span of the others.
    for (std::size_t i = 0; i < b.size() && b.size() > 1; ++i) {
      std::vector<Vector> others;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (j != i) others.push_back(b.generators()[j]);
      ASSERT_FALSE(contains(ConvexSpan(others, Domain::TBar), b.generators()[i]));
    }
  }
}

TEST(WeakBasis, SizeIsInvariantUnderPermutingAndScalingColumns) {
  ck::Rng rng(31);
  ck::EntryPool pool;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = ck::sample_dim(rng, 2, 5);
    const Matrix a = ck::sample_matrix(rng, pool, Domain::T, n, n);
    const Matrix b = mul(a, ck::sample_monomial(rng, pool, n));
    ASSERT_EQ(weak_basis(ConvexSpan::columns_of(a)).size(), weak_basis(ConvexSpan::columns_of(b)).size());
  }
}

TEST(SpanEqual, Examples) {
  EXPECT_TRUE(span_equal(span_of({"0 0", "0 1"}), span_of({"0 1", "0 0", "1 2"})));
  EXPECT_FALSE(span_equal(span_of({"0 0"}), span_of({"0 1"})));
  const ConvexSpan s = span_of({"3 -inf", "1/2 inf"});
  EXPECT_TRUE(span_equal(s, s));
  EXPECT_THROW(span_equal(span_of({"0 0"}), ConvexSpan::rows_of(M("0 0"))), ShapeError);
}

TEST(ExtendedPair, Examples) {
  const ExtendedPair p1 = extended_pair(V("0 -inf"), V("0 0"));
  EXPECT_EQ(p1.support, (std::vector<bool>{true, false}));
  EXPECT_EQ(p1.b, V("-inf 0"));
  EXPECT_EQ(p1.value(), V("inf 0"));

  const ExtendedPair p2 = extended_pair(V("-inf -inf"), V("4 1"));
  EXPECT_TRUE(p2.support_empty());
  EXPECT_EQ(p2.value(), V("4 1"));

  const ExtendedPair p3 = extended_pair(V("1 -inf"), V("5 0"));
  EXPECT_TRUE(extended_equal(p1, p3));
  EXPECT_FALSE(extended_equal(p1, extended_pair(V("0 0"), V("0 0"))));
  EXPECT_TRUE(extended_equal(p1, p1));
  EXPECT_THROW(extended_pair(V("inf 0"), V("0 0")), DomainError);
}

// Two pairs over T denote the same vector iff d_H(a, a') is finite and
// b (+) l a = b' (+) l a for every sufficiently large l. With entries bounded
// by 3, l = 1000 is already large enough.
TEST(ExtendedPair, CanonicalEqualityMatchesLargeScalingCriterion) {
  ck::Rng rng(37);
  ck::EntryPool pool;
  pool.max_num = 3;
  pool.dens = {1};
  const Scalar big(1000);
  std::size_t equal = 0;
  for (int t = 0; t < 4000; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 3);
    const Vector a = ck::sample_vector(rng, pool, Domain::T, n);
    Vector a2 = ck::sample_vector(rng, pool, Domain::T, n);
    Vector b = ck::sample_vector(rng, pool, Domain::T, n);
    Vector b2 = ck::sample_vector(rng, pool, Domain::T, n);
    // Bias towards equal denotations: share a's support, then b off it.
    if (t % 2)
      for (std::size_t i = 0; i < n; ++i) a2[i] = a[i].is_finite() ? Scalar(rng.between(-3, 3)) : neg_inf();
    if (t % 4 == 1)
      for (std::size_t i = 0; i < n; ++i)
        if (!a[i].is_finite()) b2[i] = b[i];
    const bool by_canon = extended_equal(extended_pair(a, b), extended_pair(a2, b2));
    const bool by_limit = hilbert(a, a2).is_finite() && oplus(b, scale(big, a)) == oplus(b2, scale(big, a));
    equal += by_canon;
    ASSERT_EQ(by_canon, by_limit) << inline_string(a) << inline_string(b) << inline_string(a2) << inline_string(b2);
  }
  EXPECT_GT(equal, 200u);
}

TEST(ExtendedPair, OplusAndScaleAgreeWithDenotation) {
  ck::Rng rng(41);
  ck::EntryPool pool;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = ck::sample_dim(rng, 1, 4);
    const auto pair = [&] {
      return extended_pair(ck::sample_vector(rng, pool, Domain::T, n), ck::sample_vector(rng, pool, Domain::T, n));
    };
    const ExtendedPair p = pair(), q = pair();
    ASSERT_EQ(extended_oplus(p, q).value(), oplus(p.value(), q.value()));
    const Scalar l = ck::sample_scalar(rng, pool, Domain::TBar);
    ASSERT_EQ(extended_scale(l, p).value(), scale(l, p.value())) << to_string(l) << inline_string(p.value());
  }
}
