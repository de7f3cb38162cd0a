#include "generators.hpp"

#include "nsk/nsk.hpp"

#include <gtest/gtest.h>

using namespace nsk;

namespace {

/// Minimal generators of S_{>=e} by brute force: every monomial of degree
/// >= e in a generous box, minimalized.
std::vector<Monomial> brute_trunc(const std::vector<int>& w, int e) {
  std::vector<Monomial> all;
  const std::size_t n = w.size();
  const int box = std::max(e, 0) + 1;
  std::vector<int> exps(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Monomial m(n);
      int d = 0;
      for (std::size_t t = 0; t < n; ++t) {
        m.set(t, exps[t]);
        d += exps[t] * w[t];
      }
      if (d >= e)
        all.push_back(m);
      return;
    }
    for (exps[i] = 0; exps[i] <= box; ++exps[i])
      self(self, i + 1);
  };
  rec(rec, 0);
  return minimalize(all);
}

std::string render(const std::vector<Monomial>& ms, const RingSpec& ring) {
  std::string out;
  for (const Monomial& m : ms)
    out += (out.empty() ? "" : ", ") + m.to_string(ring.names());
  return out;
}

} // namespace

TEST(TruncGens, KnownGenerators) {
  RingSpec a = RingSpec::with_weights({1, 3});
  EXPECT_EQ(render(trunc_gens(a, 5), a), "x^5, x^2*y, y^2");
  RingSpec b = RingSpec::with_weights({1, 4});
  EXPECT_EQ(render(trunc_gens(b, 5), b), "x^5, x*y, y^2");
  RingSpec c = RingSpec::with_weights({2, 3});
  EXPECT_EQ(render(trunc_gens(c, 7), c), "x^4, x^2*y, x*y^2, y^3");
}

TEST(TruncGens, NonPositiveThresholdIsWholeRing) {
  RingSpec ring = RingSpec::with_weights({2, 5});
  EXPECT_EQ(trunc_gens(ring, 0), std::vector<Monomial>{Monomial::one(2)});
  EXPECT_EQ(trunc_gens(ring, -4), std::vector<Monomial>{Monomial::one(2)});
}

TEST(TruncGens, StandardGradingGivesAllMonomialsOfDegreeE) {
  RingSpec ring = RingSpec::with_weights({1, 1, 1});
  for (int e = 1; e <= 6; ++e)
    EXPECT_EQ(trunc_gens(ring, e).size(), std::size_t((e + 1) * (e + 2) / 2));
}

TEST(TruncGens, AgreesWithBruteForce) {
  gen::Engine rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    auto w = gen::weights(rng, 3, 4);
    int e = gen::uniform(rng, -2, 12);
    RingSpec ring = RingSpec::with_weights(w);
    auto gens = trunc_gens(ring, e);
    EXPECT_EQ(gens, brute_trunc(w, e)) << "e=" << e;
    for (const Monomial& m : gens) {
      int d = weighted_degree(m, ring);
      EXPECT_GE(d, std::max(e, 0));
      EXPECT_LE(d, std::max(e, 0) + ring.max_weight() - 1);
    }
  }
}

TEST(TruncFreeGens, ShiftsThresholdPerComponent) {
  RingSpec ring = RingSpec::with_weights({1, 3});
  auto gens = trunc_free_gens(ring, {0, 2, 9}, 5);
  std::vector<std::pair<std::size_t, Monomial>> expect;
  for (const Monomial& m : trunc_gens(ring, 5))
    expect.push_back({0, m});
  for (const Monomial& m : trunc_gens(ring, 3))
    expect.push_back({1, m});
  expect.push_back({2, Monomial::one(2)});
  EXPECT_EQ(gens, expect);
}

TEST(Filtration, LayersAndMembership) {
  RingSpec ring = RingSpec::with_weights({1, 3});
  auto gens = trunc_gens(ring, 5);
  EXPECT_EQ(filtration_layer(gens, 0, 1), gens);
  EXPECT_EQ(render(filtration_layer(gens, 1, 1), ring), "x^2*y, y^2");
  EXPECT_EQ(render(filtration_layer(gens, 2, 1), ring), "y^2");
  EXPECT_THROW(filtration_layer(gens, -1, 1), RangeError);

  gen::Engine rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = gen::weights(rng, 3, 3);
    RingSpec s = RingSpec::with_weights(w);
    const std::size_t y = elimination_variable(s);
    int e = gen::uniform(rng, 1, 9);
    int i = gen::uniform(rng, 0, 4);
    auto layer = filtration_layer(trunc_gens(s, e), i, y);
    // v ∈ M ∩ <y^i> iff some generator divides v and y^i divides v
    for (int trial2 = 0; trial2 < 30; ++trial2) {
      Monomial v = gen::monomial(rng, w.size(), 6);
      bool inM = weighted_degree(v, s) >= e;
      bool inLayer = inM && v[y] >= i;
      bool byGens = std::any_of(layer.begin(), layer.end(),
                                [&](const Monomial& u) { return u.divides(v); });
      EXPECT_EQ(byGens, inLayer);
    }
  }
}

TEST(Filtration, EliminationVariableAndPrincipalLayer) {
  EXPECT_EQ(elimination_variable(RingSpec::with_weights({1, 2, 2})), 2u);
  EXPECT_EQ(elimination_variable(RingSpec::with_weights({3, 2, 1})), 0u);
  EXPECT_EQ(elimination_variable(RingSpec::with_weights({4, 4, 4})), 2u);
  EXPECT_EQ(principal_layer(7, 2), 4);
  EXPECT_EQ(principal_layer(8, 2), 4);
  EXPECT_EQ(principal_layer(0, 3), 0);
  RingSpec ring = RingSpec::with_weights({1, 2, 2});
  auto top = filtration_layer(trunc_gens(ring, 7), 4, 2);
  EXPECT_EQ(top, (std::vector<Monomial>{Monomial{0, 0, 4}}));
}
