#pragma once

#include "errors.hpp"
#include "monomial.hpp"
#include "ring.hpp"

#include <utility>
#include <vector>

namespace nsk {

/// Minimal monomial generators of the truncation S_{>=e}: the monomials v
/// with deg(v) >= e such that dividing by any variable present drops the
/// degree below e. All of them have degree in [e, e + max weight − 1]. For
/// e <= 0 the truncation is S itself, generated by 1. Sorted
/// lexicographically descending.
inline std::vector<Monomial> trunc_gens(const RingSpec& ring, int e) {
  const std::size_t n = ring.num_vars();
  if (e <= 0)
    return {Monomial::one(n)};
  std::vector<Monomial> out;
  for (int d = e; d <= e + ring.max_weight() - 1; ++d)
    for (Monomial& v : monomials_of_degree(ring.weights(), d)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        minimal = v[i] == 0 || d - ring.weight(i) < e;
      if (minimal)
        out.push_back(std::move(v));
    }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Generators of (⊕_c S(−t_c))_{>=e} for generator degrees t_c: component c
/// contributes the generators of S_{>=e−t_c}.
inline std::vector<std::pair<std::size_t, Monomial>>
trunc_free_gens(const RingSpec& ring, const std::vector<int>& generatorDegrees,
                int e) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (std::size_t c = 0; c < generatorDegrees.size(); ++c)
    for (Monomial& m : trunc_gens(ring, e - generatorDegrees[c]))
      out.push_back({c, std::move(m)});
  return out;
}

/// The variable eliminated by the inductive construction: one of maximal
/// weight, ties broken towards the largest index.
inline std::size_t elimination_variable(const RingSpec& ring) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < ring.num_vars(); ++i)
    if (ring.weight(i) >= ring.weight(best))
      best = i;
  return best;
}

/// ceil(e / d) for d > 0, the index from which the filtration layers of
/// S_{>=e} become principal.
inline int principal_layer(int e, int d) {
  if (d <= 0)
    throw ContractError("principal_layer: weight must be positive");
  if (e <= 0)
    return 0;
  return (e + d - 1) / d;
}

/// Minimal generators of M ∩ <y^i> for the monomial ideal M with minimal
/// generators `gens` and y = x_{lastVar}: the minimalization of
/// {lcm(u, y^i)}.
inline std::vector<Monomial> filtration_layer(const std::vector<Monomial>& gens,
                                              int i, std::size_t lastVar) {
  if (i < 0)
    throw RangeError("filtration_layer: negative layer index");
  std::vector<Monomial> lcms;
  for (const Monomial& u : gens) {
    if (lastVar >= u.size())
      throw DimensionError("filtration_layer: variable index out of range");
    lcms.push_back(lcm(u, Monomial::variable(u.size(), lastVar, i)));
  }
  return minimalize(std::move(lcms));
}

} // namespace nsk
