#include "generators.hpp"

#include "nsk/nsk.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace nsk;

namespace {

/// Rank over GF(3) by counting the distinct vectors in the column span.
std::size_t brute_rank(const DenseMatrix& m) {
  std::set<std::vector<Scalar>> span;
  const std::size_t cols = m.cols();
  std::size_t combos = 1;
  for (std::size_t c = 0; c < cols; ++c)
    combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<Scalar> v(m.rows(), 0);
    std::size_t rest = code;
    for (std::size_t c = 0; c < cols; ++c, rest /= 3)
      for (std::size_t r = 0; r < m.rows(); ++r)
        v[r] = (v[r] + Scalar(rest % 3) * m.at(r, c)) % 3;
    span.insert(v);
  }
  std::size_t rank = 0;
  for (std::size_t size = 1; size < span.size(); size *= 3)
    ++rank;
  return rank;
}

} // namespace

TEST(Linalg, RankAgreesWithSpanCount) {
  gen::Engine rng(31);
  PrimeField k(3);
  for (int trial = 0; trial < 200; ++trial) {
    DenseMatrix m(gen::uniform(rng, 1, 4), gen::uniform(rng, 1, 5));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.at(r, c) = Scalar(gen::uniform(rng, 0, 2));
    EXPECT_EQ(rank(m, k), brute_rank(m));
  }
}

TEST(Betti, TableBasics) {
  BettiTable b{{0, 0, 3}, {1, 1, 2}};
  EXPECT_EQ(b.to_string(), "{(0,0,3),(1,1,2)}");
  EXPECT_TRUE(b.is_diagonal());
  EXPECT_EQ(b.totals(), (std::vector<std::int64_t>{3, 2}));
  EXPECT_THROW(b.add(0, 0, -1), ContractError);
  EXPECT_EQ(convolve_koszul(BettiTable{{0, 0, 1}}, 2),
            (BettiTable{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  EXPECT_EQ(b.restricted(0), (BettiTable{{0, 0, 3}}));
}

TEST(Koszul, IsAcyclicResolutionOfResidueField) {
  for (auto w : std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 3}, {2, 2}}) {
    RingSpec ring = RingSpec::with_weights(w);
    std::vector<std::size_t> vars(w.size());
    std::iota(vars.begin(), vars.end(), 0);
    auto K = koszul_complex(ring, vars);
    ASSERT_TRUE(check_complex(K).ok());
    HomologyTable H = homology_dims(K, 10);
    EXPECT_TRUE(H.acyclic());
    EXPECT_EQ(H.at(0, 0), 1);
    for (int j = 1; j <= 10; ++j)
      EXPECT_EQ(H.at(0, j), 0);
  }
}

TEST(Koszul, RejectsBadVariableSets) {
  RingSpec ring = RingSpec::with_weights({1, 1});
  EXPECT_THROW(koszul_complex(ring, {}), ContractError);
  EXPECT_THROW(koszul_complex(ring, {0, 0}), RangeError);
  EXPECT_THROW(koszul_complex(ring, {2}), RangeError);
}

TEST(Tensor, BettiIsConvolution) {
  RingSpec ring = RingSpec::with_weights({1, 1, 1});
  auto F = koszul_complex(ring, {0});
  auto G = koszul_complex(ring, {1, 2});
  auto T = totalize_tensor(F, G);
  ASSERT_TRUE(check_complex(T).ok());
  EXPECT_EQ(T.betti_table(), convolve_koszul(G.betti_table(), 1));
  EXPECT_TRUE(homology_dims(T, 6).acyclic());
}

TEST(Taylor, MinimizationKeepsHomology) {
  gen::Engine rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    RingSpec ring = RingSpec::with_weights(gen::weights(rng, 3, 2));
    auto gens = gen::monomial_ideal(rng, ring.num_vars(), 5, 2);
    auto T = taylor_complex(ring, gens);
    ASSERT_TRUE(check_complex(T).ok());
    auto M = minimize_complex(T);
    ASSERT_TRUE(check_complex(M).ok());
    HomologyTable a = homology_dims(T, 12), b = homology_dims(M, 12);
    EXPECT_EQ(a.dims, b.dims);
    EXPECT_TRUE(b.acyclic());
  }
}

TEST(CheckComplex, DetectsDefects) {
  RingSpec ring = RingSpec::with_weights({1, 1});
  PolyRing R(ring);
  PolyMatrix d1(1, 1), d2(1, 1);
  d1.at(0, 0) = R.variable(0);
  d2.at(0, 0) = R.variable(1);
  GradedFreeComplex bad(ring, {FreeModuleSpec({0}), FreeModuleSpec({1}), FreeModuleSpec({2})},
                        {d1, d2});
  EXPECT_EQ(check_complex(bad).kind, ComplexCheck::Kind::not_a_complex);

  PolyMatrix e(1, 1);
  e.at(0, 0) = R.add(R.variable(0), R.mul(R.variable(0), R.variable(1)));
  GradedFreeComplex inhom(ring, {FreeModuleSpec({0}), FreeModuleSpec({1})}, {e});
  EXPECT_EQ(check_complex(inhom).kind, ComplexCheck::Kind::inhomogeneous);

  PolyMatrix f(1, 1);
  f.at(0, 0) = R.variable(1);
  GradedFreeComplex wrongMulti(
      ring,
      {FreeModuleSpec({0}, std::vector<Monomial>{{0, 0}}),
       FreeModuleSpec({1}, std::vector<Monomial>{{1, 0}})},
      {f});
  EXPECT_EQ(check_complex(wrongMulti).kind, ComplexCheck::Kind::not_multihomogeneous);
  EXPECT_THROW(GradedFreeComplex(ring, {FreeModuleSpec({0})}, {f}), DimensionError);
}

TEST(Homology, ZeroDifferentialKeepsEverything) {
  RingSpec ring = RingSpec::with_weights({1});
  GradedFreeComplex C(ring, {FreeModuleSpec({0}), FreeModuleSpec({1})}, {PolyMatrix(1, 1)});
  HomologyTable H = homology_dims(C, 3);
  EXPECT_FALSE(H.acyclic());
  EXPECT_EQ(H.at(1, 1), 1);
  EXPECT_EQ(H.at(1, 3), 1);
  EXPECT_EQ(H.at(0, 2), 1);
}

TEST(Minimize, CancelsUnitPairs) {
  RingSpec ring = RingSpec::with_weights({1, 1});
  PolyRing R(ring);
  // Koszul complex on x, y plus a cancellable pair S(−1) → S(−1)
  PolyMatrix d1(2, 3);
  d1.at(0, 0) = R.variable(0);
  d1.at(0, 1) = R.variable(1);
  d1.at(1, 2) = R.constant(1);
  PolyMatrix d2(3, 1);
  d2.at(0, 0) = R.neg(R.variable(1));
  d2.at(1, 0) = R.variable(0);
  GradedFreeComplex C(ring,
                      {FreeModuleSpec({0, 1}), FreeModuleSpec({1, 1, 1}),
                       FreeModuleSpec({2})},
                      {d1, d2});
  ASSERT_TRUE(check_complex(C).ok());
  auto M = minimize_complex(C);
  EXPECT_EQ(M.betti_table(), (BettiTable{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  EXPECT_TRUE(check_complex(M).ok());
}
