#pragma once

#include "errors.hpp"
#include "free_module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace nsk {

/// Generators of a submodule forming a Gröbner basis with respect to the
/// order of `module`. Elements are sorted by lead component, then lead
/// monomial lexicographically descending; this ordering is what keeps
/// iterated Schreyer frames finite.
struct GroebnerBasis {
  FreeModule module;
  std::vector<FreeElement> generators;
};

/// Result of dividing v by a list: v = Σ quotients[k]·G[k] + remainder.
struct Division {
  std::vector<Polynomial> quotients;
  FreeElement remainder;
};

namespace detail {

inline bool lead_divides(const ModuleTerm& g, const ModuleTerm& t) {
  return g.comp == t.comp && g.mono.divides(t.mono);
}

inline void sort_for_schreyer(std::vector<FreeElement>& gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [](const FreeElement& a, const FreeElement& b) {
                     const ModuleTerm& la = a.lead();
                     const ModuleTerm& lb = b.lead();
                     if (la.comp != lb.comp)
                       return la.comp < lb.comp;
                     return la.mono > lb.mono;
                   });
}

inline FreeElement make_monic(const FreeModule& F, const FreeElement& v) {
  if (v.is_zero() || v.lead().coeff == 1)
    return v;
  return F.scale(v, F.field().inv(v.lead().coeff));
}

} // namespace detail

/// Full division of v by G. At every step the largest remaining term that is
/// divisible by some lead term is cancelled using the lowest-index such
/// element, so the result is deterministic.
inline Division divide(const FreeModule& F, FreeElement v,
                       const std::vector<FreeElement>& G) {
  const PrimeField& k = F.field();
  std::vector<std::vector<Term>> q(G.size());
  FreeElement rem;
  while (!v.is_zero()) {
    const ModuleTerm lt = v.lead();
    std::size_t hit = G.size();
    for (std::size_t i = 0; i < G.size(); ++i)
      if (!G[i].is_zero() && detail::lead_divides(G[i].lead(), lt)) {
        hit = i;
        break;
      }
    if (hit == G.size()) {
      rem.terms.push_back(lt);
      v.terms.erase(v.terms.begin());
      continue;
    }
    const ModuleTerm& lg = G[hit].lead();
    Scalar c = k.div(lt.coeff, lg.coeff);
    Monomial m = lt.mono / lg.mono;
    q[hit].push_back({c, m});
    v = F.sub(v, F.mul_term(G[hit], c, m));
  }
  Division d;
  for (auto& terms : q)
    d.quotients.push_back(F.ring().from_terms(std::move(terms)));
  d.remainder = std::move(rem);
  return d;
}

inline FreeElement normal_form(const FreeModule& F, const FreeElement& v,
                               const std::vector<FreeElement>& G) {
  return divide(F, v, G).remainder;
}

/// Buchberger's algorithm for homogeneous submodules of a graded free
/// module. Pairs are processed by the normal strategy (smallest degree of the
/// lcm term, then pair index); the chain criterion is always applied and the
/// product criterion for ideals (rank-one ambient). Returns the reduced
/// monic basis.
inline GroebnerBasis buchberger(const FreeModule& F,
                                std::vector<FreeElement> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gens[i] = F.from_terms(gens[i].terms);
    if (!gens[i].is_zero() && !F.homogeneous_degree(gens[i])) {
      std::ostringstream msg;
      msg << "buchberger: generator " << i << " (" << F.to_string(gens[i])
          << ") is not homogeneous; term degrees:";
      for (int d : F.term_degrees(gens[i]))
        msg << ' ' << d;
      throw ContractError(msg.str());
    }
  }
  std::erase_if(gens, [](const FreeElement& g) { return g.is_zero(); });
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const FreeElement& a, const FreeElement& b) {
                     return *F.homogeneous_degree(a) < *F.homogeneous_degree(b);
                   });

  std::vector<FreeElement> G;
  // pending pairs keyed by (lcm degree, i, j)
  std::set<std::tuple<int, std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> pendingIndex;
  const bool ideal = F.rank() == 1;

  auto lcmDegree = [&](std::size_t i, std::size_t j) {
    const ModuleTerm& a = G[i].lead();
    const ModuleTerm& b = G[j].lead();
    return weighted_degree(lcm(a.mono, b.mono), F.ring().spec()) +
           F.spec().degrees[a.comp];
  };
  auto addElement = [&](FreeElement g) {
    G.push_back(detail::make_monic(F, g));
    std::size_t j = G.size() - 1;
    for (std::size_t i = 0; i < j; ++i)
      if (G[i].lead().comp == G[j].lead().comp) {
        pending.insert({lcmDegree(i, j), i, j});
        pendingIndex.insert({i, j});
      }
  };
  auto isPending = [&](std::size_t a, std::size_t b) {
    return pendingIndex.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  for (FreeElement& g : gens) {
    FreeElement r = normal_form(F, g, G);
    if (!r.is_zero())
      addElement(std::move(r));
  }

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    pendingIndex.erase({i, j});
    const ModuleTerm& li = G[i].lead();
    const ModuleTerm& lj = G[j].lead();
    if (ideal && coprime(li.mono, lj.mono))
      continue;
    Monomial L = lcm(li.mono, lj.mono);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k)
      chain = k != i && k != j && G[k].lead().comp == li.comp &&
              G[k].lead().mono.divides(L) && !isPending(i, k) &&
              !isPending(j, k);
    if (chain)
      continue;
    FreeElement s = F.sub(F.mul_term(G[i], 1, L / li.mono),
                          F.mul_term(G[j], 1, L / lj.mono));
    FreeElement r = normal_form(F, s, G);
    if (!r.is_zero())
      addElement(std::move(r));
  }

  // minimal: drop elements whose lead is divisible by another lead
  std::vector<FreeElement> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (j == i || !detail::lead_divides(G[j].lead(), G[i].lead()))
        continue;
      redundant = G[j].lead().mono != G[i].lead().mono || j < i;
    }
    if (!redundant)
      minimal.push_back(G[i]);
  }
  // tail-reduce each element against the others
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FreeElement> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i)
        others.push_back(minimal[j]);
    FreeElement tail = minimal[i];
    ModuleTerm lead = tail.lead();
    tail.terms.erase(tail.terms.begin());
    FreeElement reduced = normal_form(F, tail, others);
    reduced.terms.insert(reduced.terms.begin(), lead);
    minimal[i] = detail::make_monic(F, reduced);
  }
  detail::sort_for_schreyer(minimal);
  return {F, std::move(minimal)};
}

/// Generators of the syzygy module of a Gröbner basis, living in the free
/// module on the basis elements (generator degrees = degrees of the basis
/// elements) under the induced Schreyer order.
struct SyzygyModule {
  FreeModule source;
  std::vector<FreeElement> generators;

  /// The syzygies form a Gröbner basis of the syzygy module under the
  /// Schreyer order (Schreyer's theorem).
  GroebnerBasis as_groebner_basis() const {
    std::vector<FreeElement> gens = generators;
    detail::sort_for_schreyer(gens);
    return {source, std::move(gens)};
  }
};

/// Schreyer syzygies of a Gröbner basis G: one syzygy per S-pair whose lead
/// term (lcm/lead_i)·e_i is minimal among the leads in component e_i, which
/// still generates the whole syzygy module and is a Gröbner basis for the
/// Schreyer order. Throws ContractError if G is not a Gröbner basis.
inline SyzygyModule schreyer_syzygies(const GroebnerBasis& basis) {
  const FreeModule& F = basis.module;
  const std::vector<FreeElement>& G = basis.generators;
  for (const FreeElement& g : G)
    if (g.is_zero() || !F.homogeneous_degree(g))
      throw ContractError("schreyer_syzygies: basis elements must be nonzero "
                          "and homogeneous");

  std::vector<int> degrees;
  std::vector<Monomial> leadMonos;
  std::vector<std::size_t> leadComps;
  std::optional<std::vector<Monomial>> multi;
  if (F.spec().multidegrees)
    multi.emplace();
  for (const FreeElement& g : G) {
    degrees.push_back(*F.homogeneous_degree(g));
    leadMonos.push_back(g.lead().mono);
    leadComps.push_back(g.lead().comp);
    if (multi) {
      auto md = F.multidegree(g);
      if (md)
        multi->push_back(*md);
      else
        multi.reset();
    }
  }
  FreeModule source(F.ring(), FreeModuleSpec(std::move(degrees), std::move(multi)),
                    ModuleOrder::schreyer(F.order(), leadMonos, leadComps));
  const PrimeField& k = F.field();

  std::vector<FreeElement> syz;
  for (std::size_t i = 0; i < G.size(); ++i) {
    std::vector<std::size_t> partners;
    std::vector<Monomial> quots;
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (leadComps[j] == leadComps[i]) {
        partners.push_back(j);
        quots.push_back(lcm(leadMonos[i], leadMonos[j]) / leadMonos[i]);
      }
    for (std::size_t a = 0; a < partners.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < partners.size() && !redundant; ++b)
        redundant = b != a && quots[b].divides(quots[a]) &&
                    (quots[b] != quots[a] || b < a);
      if (redundant)
        continue;
      std::size_t j = partners[a];
      Monomial L = lcm(leadMonos[i], leadMonos[j]);
      Monomial mi = L / leadMonos[i];
      Monomial mj = L / leadMonos[j];
      Scalar ci = k.inv(G[i].lead().coeff);
      Scalar cj = k.inv(G[j].lead().coeff);
      FreeElement s = F.sub(F.mul_term(G[i], ci, mi), F.mul_term(G[j], cj, mj));
      Division d = divide(F, s, G);
      if (!d.remainder.is_zero())
        throw ContractError("schreyer_syzygies: input is not a Gröbner basis");
      std::vector<ModuleTerm> terms{{i, ci, mi}, {j, k.neg(cj), mj}};
      for (std::size_t q = 0; q < d.quotients.size(); ++q)
        for (const Term& t : d.quotients[q].terms)
          terms.push_back({q, k.neg(t.coeff), t.mono});
      FreeElement v = source.from_terms(std::move(terms));
      if (v.lead().comp != i || v.lead().mono != mi)
        throw ContractError("schreyer_syzygies: unexpected syzygy lead term");
      syz.push_back(detail::make_monic(source, v));
    }
  }
  return {std::move(source), std::move(syz)};
}

} // namespace nsk
