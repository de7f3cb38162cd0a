#pragma once

#include "complex.hpp"
#include "groebner.hpp"

#include <utility>
#include <vector>

namespace nsk {

namespace detail {

inline FreeModuleSpec spec_of(const FreeModule& F,
                              const std::vector<FreeElement>& elems) {
  FreeModuleSpec spec;
  if (F.spec().multidegrees)
    spec.multidegrees.emplace();
  for (const FreeElement& v : elems) {
    spec.degrees.push_back(*F.homogeneous_degree(v));
    if (spec.multidegrees) {
      auto md = F.multidegree(v);
      if (md)
        spec.multidegrees->push_back(*md);
      else
        spec.multidegrees.reset();
    }
  }
  return spec;
}

} // namespace detail

/// Free resolution of the submodule of `ambient` generated by `gens`:
/// F_0 is free on a Gröbner basis of the submodule and each further step
/// adds the Schreyer syzygies of the previous one, until none remain. With
/// `minimize` the unit entries are then cancelled, giving the minimal
/// resolution. Multidegrees on `ambient` propagate through every step as
/// long as all elements stay multihomogeneous.
inline GradedFreeComplex resolve_module(const FreeModule& ambient,
                                        const std::vector<FreeElement>& gens,
                                        bool minimize = true) {
  const RingSpec& ring = ambient.ring().spec();
  GroebnerBasis G = buchberger(ambient, gens);
  if (G.generators.empty())
    return GradedFreeComplex(ring);
  std::vector<FreeModuleSpec> modules{detail::spec_of(ambient, G.generators)};
  std::vector<PolyMatrix> maps;
  // a Schreyer frame with lexicographically sorted leads has length <= n
  const std::size_t maxSteps = ring.num_vars() + 1;
  for (std::size_t step = 0;; ++step) {
    if (step > maxSteps)
      throw ContractError("resolve_module: Schreyer frame did not terminate");
    SyzygyModule syz = schreyer_syzygies(G);
    if (syz.generators.empty())
      break;
    GroebnerBasis next = syz.as_groebner_basis();
    PolyMatrix d(syz.source.rank(), next.generators.size());
    for (std::size_t c = 0; c < next.generators.size(); ++c) {
      std::vector<Polynomial> column = syz.source.to_column(next.generators[c]);
      for (std::size_t r = 0; r < column.size(); ++r)
        d.at(r, c) = std::move(column[r]);
    }
    modules.push_back(detail::spec_of(syz.source, next.generators));
    maps.push_back(std::move(d));
    G = std::move(next);
  }
  GradedFreeComplex C(ring, std::move(modules), std::move(maps));
  return minimize ? minimize_complex(C) : C;
}

/// Resolution of the monomial submodule ⊕_c (ideal in component c) of the
/// free module with the given generator degrees. Elements carry
/// multidegrees, so the whole resolution is multigraded.
inline GradedFreeComplex resolve_monomial_module(
    const RingSpec& ring, const std::vector<int>& generatorDegrees,
    const std::vector<std::pair<std::size_t, Monomial>>& gens,
    bool minimize = true) {
  std::vector<Monomial> zero(generatorDegrees.size(),
                             Monomial::one(ring.num_vars()));
  FreeModule ambient(PolyRing(ring), FreeModuleSpec(generatorDegrees, zero));
  std::vector<FreeElement> elems;
  for (const auto& [comp, m] : gens)
    elems.push_back(ambient.from_terms({{comp, 1, m}}));
  return resolve_module(ambient, elems, minimize);
}

/// Resolution of a monomial ideal, as a module generated in the degrees of
/// its generators.
inline GradedFreeComplex resolve_monomial_ideal(const RingSpec& ring,
                                                const std::vector<Monomial>& gens,
                                                bool minimize = true) {
  std::vector<std::pair<std::size_t, Monomial>> tagged;
  for (const Monomial& m : gens)
    tagged.push_back({0, m});
  return resolve_monomial_module(ring, {0}, tagged, minimize);
}

} // namespace nsk
