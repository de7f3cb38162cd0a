#pragma once

#include "errors.hpp"
#include "graded_module.hpp"
#include "monomial.hpp"
#include "ring.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nsk {

/// The monomial submodule ⊕_c I_c·e_c of ⊕_c S(−g_c) as an explicit graded
/// S-module in degrees minDegree..maxDegree: the basis in degree d is every
/// v·e_c in the submodule with deg(v) + g_c = d, sorted by component then
/// lexicographically descending.
inline ExplicitGradedModule
monomial_submodule(const RingSpec& ring, const std::vector<int>& generatorDegrees,
                   const std::vector<std::pair<std::size_t, Monomial>>& gens,
                   int minDegree, int maxDegree) {
  const std::size_t n = ring.num_vars();
  std::vector<std::vector<Monomial>> perComp(generatorDegrees.size());
  for (const auto& [c, m] : gens) {
    if (c >= perComp.size())
      throw DimensionError("monomial_submodule: component out of range");
    perComp[c].push_back(m);
  }
  ExplicitGradedModule M(ring, minDegree, maxDegree, true);
  std::map<BasisLabel, std::size_t> index;
  for (int d = minDegree; d <= maxDegree; ++d) {
    std::vector<BasisLabel> labels;
    for (std::size_t c = 0; c < perComp.size(); ++c) {
      std::vector<Monomial> monos =
          monomials_of_degree(ring.weights(), d - generatorDegrees[c]);
      for (Monomial& v : monos) {
        bool member = false;
        for (const Monomial& u : perComp[c])
          if ((member = u.divides(v)))
            break;
        if (member)
          labels.push_back({c, std::move(v)});
      }
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      index.emplace(labels[i], i);
    M.set_basis(d, std::move(labels));
  }
  for (int d = minDegree; d <= maxDegree; ++d)
    for (std::size_t k = 0; k < n; ++k) {
      if (d + ring.weight(k) > maxDegree)
        continue;
      const auto& src = M.basis(d);
      SparseMatrix a;
      a.rows = M.dim(d + ring.weight(k));
      a.columns.resize(src.size());
      for (std::size_t col = 0; col < src.size(); ++col)
        a.columns[col].push_back(
            {index.at({src[col].component,
                       src[col].mono * Monomial::variable(n, k)}),
             1});
      M.set_action(k, d, std::move(a));
    }
  return M;
}

/// An ideal as an explicit graded module, degrees minDegree..maxDegree.
inline ExplicitGradedModule monomial_ideal_module(const RingSpec& ring,
                                                  const std::vector<Monomial>& gens,
                                                  int minDegree, int maxDegree) {
  std::vector<std::pair<std::size_t, Monomial>> tagged;
  for (const Monomial& m : gens)
    tagged.push_back({0, m});
  return monomial_submodule(ring, {0}, tagged, minDegree, maxDegree);
}

} // namespace nsk
