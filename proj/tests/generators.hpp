#pragma once

// Random inputs for property tests, drawn from a caller-owned engine.

#include "nsk/nsk.hpp"

#include <random>
#include <vector>

namespace gen {

using Engine = std::mt19937_64;

inline int uniform(Engine& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<int> weights(Engine& rng, int maxVars, int maxWeight) {
  std::vector<int> w(uniform(rng, 1, maxVars));
  for (int& x : w)
    x = uniform(rng, 1, maxWeight);
  return w;
}

inline nsk::Monomial monomial(Engine& rng, std::size_t n, int maxExp) {
  nsk::Monomial m(n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, uniform(rng, 0, maxExp));
  return m;
}

/// Monomial ideal generators, not necessarily minimal, never containing 1.
inline std::vector<nsk::Monomial> monomial_ideal(Engine& rng, std::size_t n,
                                                 int maxGens, int maxExp) {
  std::vector<nsk::Monomial> gens;
  int count = uniform(rng, 1, maxGens);
  while (int(gens.size()) < count) {
    nsk::Monomial m = monomial(rng, n, maxExp);
    if (!m.is_one())
      gens.push_back(m);
  }
  return gens;
}

inline nsk::Polynomial polynomial(Engine& rng, const nsk::PolyRing& R, int maxTerms,
                                  int maxExp) {
  std::vector<nsk::Term> terms;
  int count = uniform(rng, 0, maxTerms);
  for (int t = 0; t < count; ++t)
    terms.push_back({nsk::Scalar(uniform(rng, 1, 1000)),
                     monomial(rng, R.num_vars(), maxExp)});
  return R.from_terms(std::move(terms));
}

/// Homogeneous polynomial of the given weighted degree with random support.
inline nsk::Polynomial homogeneous(Engine& rng, const nsk::PolyRing& R, int degree,
                                   int maxTerms) {
  auto monos = nsk::monomials_of_degree(R.spec().weights(), degree);
  std::vector<nsk::Term> terms;
  if (monos.empty())
    return R.zero();
  int count = uniform(rng, 1, maxTerms);
  for (int t = 0; t < count; ++t)
    terms.push_back({nsk::Scalar(uniform(rng, 1, 30000)),
                     monos[uniform(rng, 0, int(monos.size()) - 1)]});
  return R.from_terms(std::move(terms));
}

inline nsk::BettiTable diagonal_table(Engine& rng, int maxLen, int maxRank) {
  nsk::BettiTable b;
  int len = uniform(rng, 0, maxLen);
  for (int i = 0; i <= len; ++i)
    if (int r = uniform(rng, 0, maxRank))
      b.add(i, i, r);
  return b;
}

} // namespace gen
