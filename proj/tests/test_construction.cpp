#include "generators.hpp"

#include "nsk/nsk.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace nsk;

TEST(Construct, KnownTables) {
  EXPECT_EQ(construct_gr_betti({1, 3}, 5).first, (BettiTable{{0, 0, 3}, {1, 1, 2}}));
  EXPECT_EQ(construct_gr_betti({1, 2}, 1).first, (BettiTable{{0, 0, 2}, {1, 1, 1}}));
  BettiTable big = construct_gr_betti({1, 2, 2}, 7).first;
  EXPECT_EQ(big, (BettiTable{{0, 0, 15}, {1, 1, 24}, {2, 2, 10}}));
  RingSpec ring = RingSpec::with_weights({1, 2, 2});
  EXPECT_EQ(big, gr_betti(OrdContext::ideal(ring, trunc_gens(ring, 7)), 10));
}

TEST(Construct, ExampleTrace) {
  auto [b, trace] = construct_gr_betti({1, 2, 2}, 7);
  EXPECT_EQ(trace.N, 4);
  EXPECT_EQ(trace.d, 2);
  EXPECT_EQ(trace.eliminated_var, std::optional<std::size_t>(2));
  ASSERT_EQ(trace.steps.size(), 4u);
  const ConstructionStep& first = trace.steps.front();
  EXPECT_EQ(first.layer, 3);
  EXPECT_EQ(first.sub_weights, (std::vector<int>{1, 2}));
  EXPECT_EQ(first.sub_threshold, 1);
  EXPECT_EQ(first.sub_table, (BettiTable{{0, 0, 2}, {1, 1, 1}}));
  EXPECT_EQ(first.after_tensor, (BettiTable{{0, 0, 2}, {1, 1, 3}, {2, 2, 1}}));
  EXPECT_EQ(first.running_before, (BettiTable{{0, 0, 1}}));
  EXPECT_EQ(first.after_horseshoe, (BettiTable{{0, 0, 3}, {1, 1, 3}, {2, 2, 1}}));
  EXPECT_EQ(trace.steps.back().after_horseshoe, b);
}

TEST(Construct, BaseCases) {
  for (int e = -3; e <= 10; ++e)
    EXPECT_EQ(construct_gr_betti({3}, e).first, (BettiTable{{0, 0, 1}}));
  auto [b, trace] = construct_gr_betti({2, 5}, 0);
  EXPECT_EQ(b, (BettiTable{{0, 0, 1}}));
  EXPECT_TRUE(trace.base_case);
  EXPECT_TRUE(trace.steps.empty());
  EXPECT_THROW(construct_gr_betti({1, 0}, 3), ContractError);
}

TEST(Construct, TraceInvariantsAndDiagonality) {
  gen::Engine rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = gen::weights(rng, 4, 5);
    int e = gen::uniform(rng, 1, 15);
    auto [b, trace] = construct_gr_betti(w, e);
    EXPECT_TRUE(b.is_diagonal());
    if (trace.base_case)
      continue;
    EXPECT_GE(trace.N * trace.d, e);
    EXPECT_LT((trace.N - 1) * trace.d, e);
    EXPECT_EQ(int(trace.steps.size()), trace.N);
    for (const ConstructionStep& s : trace.steps) {
      EXPECT_TRUE(s.after_horseshoe.is_diagonal());
      EXPECT_EQ(s.sub_weights.size() + 1, w.size());
    }
  }
}

TEST(Construct, MemoMatchesFreshCache) {
  gen::Engine rng(72);
  for (int trial = 0; trial < 50; ++trial) {
    auto w = gen::weights(rng, 3, 4);
    int e = gen::uniform(rng, 1, 12);
    ConstructionCache fresh;
    EXPECT_EQ(construct_gr_betti(w, e, fresh).first, construct_gr_betti(w, e).first);
    auto permuted = w;
    std::reverse(permuted.begin(), permuted.end());
    EXPECT_EQ(construct_gr_betti(permuted, e, fresh).first,
              construct_gr_betti(w, e).first);
  }
}

TEST(TensorKoszul, Examples) {
  BettiTable b{{0, 0, 2}, {1, 1, 1}};
  EXPECT_EQ(tensor_koszul_betti(b, 0), b);
  EXPECT_EQ(tensor_koszul_betti(b, 1), (BettiTable{{0, 0, 2}, {1, 1, 3}, {2, 2, 1}}));
  EXPECT_EQ(tensor_koszul_betti(BettiTable{{0, 0, 1}}, 2),
            (BettiTable{{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  EXPECT_THROW(tensor_koszul_betti(BettiTable{{1, 2, 1}}, 1), ContractError);
}

TEST(TensorKoszul, MatchesRealizedTotalization) {
  // a linear resolution over R: the Koszul complex on the first j variables
  for (int n = 2; n <= 4; ++n)
    for (int j = 1; j < n; ++j) {
      RingSpec ring = RingSpec::with_weights(std::vector<int>(n, 1));
      std::vector<std::size_t> first(j), rest(n - j);
      std::iota(first.begin(), first.end(), 0);
      std::iota(rest.begin(), rest.end(), j);
      auto F = koszul_complex(ring, first);
      auto T = totalize_tensor(F, koszul_complex(ring, rest));
      EXPECT_EQ(T.betti_table(), tensor_koszul_betti(F.betti_table(), n - j));
    }
}

TEST(Horseshoe, SumProperties) {
  EXPECT_EQ(horseshoe_sum(BettiTable{{0, 0, 1}}, BettiTable{{0, 0, 2}, {1, 1, 1}}),
            (BettiTable{{0, 0, 3}, {1, 1, 1}}));
  BettiTable b{{0, 0, 4}, {2, 2, 1}};
  EXPECT_EQ(horseshoe_sum(b, BettiTable{}), b);
  EXPECT_THROW(horseshoe_sum(b, BettiTable{{0, 1, 1}}), ContractError);
  gen::Engine rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    auto x = gen::diagonal_table(rng, 4, 9), y = gen::diagonal_table(rng, 4, 9),
         z = gen::diagonal_table(rng, 4, 9);
    EXPECT_EQ(horseshoe_sum(horseshoe_sum(x, y), z), horseshoe_sum(x, horseshoe_sum(y, z)));
    EXPECT_EQ(horseshoe_sum(x, y), horseshoe_sum(y, x));
    for (int i = 0; i <= 4; ++i)
      EXPECT_EQ(horseshoe_sum(x, y).at(i, i), x.at(i, i) + y.at(i, i));
  }
}

TEST(ConstructFree, SumOfSummands) {
  EXPECT_EQ(construct_free_betti({1, 3}, {0}, 5), construct_gr_betti({1, 3}, 5).first);
  EXPECT_EQ(construct_free_betti({1, 3}, {0, 0}, 5), (BettiTable{{0, 0, 6}, {1, 1, 4}}));
  EXPECT_EQ(construct_free_betti({1, 3}, {0, -7}, 5),
            horseshoe_sum(construct_gr_betti({1, 3}, 5).first, BettiTable{{0, 0, 1}}));
  EXPECT_TRUE(construct_free_betti({1, 3}, {}, 5).empty());
}

TEST(SesHilbert, WeightsOneThreeLayer) {
  RingSpec ring = RingSpec::with_weights({1, 3});
  SesHilbert s = ses_hilbert({1, 3}, 5, 1, 6);
  EXPECT_TRUE(s.additive());
  // M^(2) = <y^2>, principal; A_{>=2} = <x^2> over k[x]
  auto y2 = OrdContext::ideal(ring, {Monomial{0, 2}});
  EXPECT_EQ(s.next, gr_hilbert(y2, 6));
  RingSpec A = ring.subring({0});
  EXPECT_EQ(s.quotient, gr_hilbert(OrdContext::ideal(A, {Monomial{2}}), 6));
  EXPECT_EQ(s.layer, gr_hilbert(OrdContext::ideal(ring, {Monomial{2, 1}, Monomial{0, 2}}), 6));
  EXPECT_THROW(ses_hilbert({1, 3}, 5, 2, 6), RangeError);
}

TEST(SesHilbert, AllLayersAndTelescoping) {
  for (auto [w, e] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 2, 2}, 7}, {{1, 3}, 5}, {{2, 3, 4}, 11}, {{4}, 9}, {{1, 1, 3}, 8}}) {
    RingSpec ring = RingSpec::with_weights(w);
    const std::size_t y = elimination_variable(ring);
    const int N = principal_layer(e, ring.weight(y));
    const int bound = 8;
    std::vector<std::int64_t> sum(bound + 1, 0);
    for (int i = 0; i < N; ++i) {
      EXPECT_TRUE(ses_hilbert_check(w, e, i, bound)) << i;
      SesHilbert s = ses_hilbert(w, e, i, bound);
      for (int t = 0; t <= bound; ++t)
        sum[t] += s.quotient[t];
    }
    auto top = OrdContext::ideal(ring, {Monomial::variable(w.size(), y, N)});
    auto whole = OrdContext::ideal(ring, trunc_gens(ring, e));
    auto topH = gr_hilbert(top, bound), wholeH = gr_hilbert(whole, bound);
    for (int t = 0; t <= bound; ++t)
      EXPECT_EQ(sum[t] + topH[t], wholeH[t]);
  }
}

TEST(SesHilbert, OneVariableQuotientsVanish) {
  for (int i = 0; i < 3; ++i) {
    SesHilbert s = ses_hilbert({4}, 9, i, 5);
    EXPECT_TRUE(s.additive());
    EXPECT_EQ(s.quotient, std::vector<std::int64_t>(6, 0));
  }
}
