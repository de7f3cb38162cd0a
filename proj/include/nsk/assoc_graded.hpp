#pragma once

#include "betti.hpp"
#include "errors.hpp"
#include "graded_module.hpp"
#include "koszul_homology.hpp"
#include "monomial.hpp"
#include "ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace nsk {

/// A monomial submodule M = ⊕_c I_c·e_c of a free S-module, described by
/// monomial generators per component. Provides the order function of M
/// with respect to the maximal ideal.
class OrdContext {
public:
  OrdContext(RingSpec ring, std::vector<std::pair<std::size_t, Monomial>> gens)
      : mRing(std::move(ring)) {
    std::size_t comps = 0;
    for (const auto& [c, m] : gens) {
      if (m.size() != mRing.num_vars())
        throw DimensionError("ord context: generator has wrong number of variables");
      comps = std::max(comps, c + 1);
    }
    mGens.resize(comps);
    for (auto& [c, m] : gens)
      mGens[c].push_back(std::move(m));
    for (auto& g : mGens)
      g = minimalize(std::move(g));
  }

  static OrdContext ideal(RingSpec ring, const std::vector<Monomial>& gens) {
    std::vector<std::pair<std::size_t, Monomial>> tagged;
    for (const Monomial& m : gens)
      tagged.push_back({0, m});
    return OrdContext(std::move(ring), std::move(tagged));
  }

  const RingSpec& ring() const { return mRing; }
  std::size_t num_components() const { return mGens.size(); }

  /// Minimal generators of component c, lexicographically descending.
  const std::vector<Monomial>& generators(std::size_t c) const {
    return mGens.at(c);
  }

  /// Largest standard degree of a generator in component c (−1 if none).
  int max_generator_degree(std::size_t c) const {
    int d = -1;
    for (const Monomial& u : mGens.at(c))
      d = std::max(d, u.standard_degree());
    return d;
  }

  /// ord(v·e_c) = deg(v) − min{deg(u) : u | v generator}, standard degrees,
  /// or nullopt when v·e_c is not in M.
  std::optional<int> try_ord(std::size_t c, const Monomial& v) const {
    if (c >= mGens.size())
      return std::nullopt;
    int best = std::numeric_limits<int>::max();
    for (const Monomial& u : mGens[c])
      if (u.divides(v))
        best = std::min(best, u.standard_degree());
    if (best == std::numeric_limits<int>::max())
      return std::nullopt;
    return v.standard_degree() - best;
  }

  int ord(std::size_t c, const Monomial& v) const {
    if (v.size() != mRing.num_vars())
      throw DimensionError("ord: monomial has wrong number of variables");
    auto o = try_ord(c, v);
    if (!o)
      throw MembershipError("ord: " + v.to_string(mRing.names()) +
                            " is not in the module");
    return *o;
  }

  int ord(const Monomial& v) const { return ord(0, v); }

private:
  RingSpec mRing;
  std::vector<std::vector<Monomial>> mGens;
};

namespace detail {

/// Labels of gr(M) in degrees 0..bound, grouped by degree and sorted by
/// component, then weighted degrevlex descending.
inline std::vector<std::vector<BasisLabel>> gr_labels(const OrdContext& ctx,
                                                      int bound) {
  const RingSpec& ring = ctx.ring();
  std::vector<std::vector<BasisLabel>> byDegree(std::max(bound + 1, 0));
  const std::vector<int> ones(ring.num_vars(), 1);
  for (std::size_t c = 0; c < ctx.num_components(); ++c) {
    int top = bound + ctx.max_generator_degree(c);
    for (int D = 0; D <= top; ++D)
      for (Monomial& v : monomials_of_degree(ones, D)) {
        auto o = ctx.try_ord(c, v);
        if (o && *o <= bound)
          byDegree[*o].push_back({c, std::move(v)});
      }
  }
  for (auto& labels : byDegree)
    std::sort(labels.begin(), labels.end(),
              [&](const BasisLabel& a, const BasisLabel& b) {
                if (a.component != b.component)
                  return a.component < b.component;
                return monomial_compare(a.mono, b.mono, ring) > 0;
              });
  return byDegree;
}

} // namespace detail

/// The associated graded module gr_m(M) = ⊕_i m^i M / m^{i+1} M over the
/// standard graded companion ring, in degrees 0..bound. The class of v·e_c
/// (ord i) sits in degree i; x_k sends it to the class of x_k·v·e_c when
/// that has ord i + 1 and to zero otherwise.
inline ExplicitGradedModule gr_module(const OrdContext& ctx, int bound) {
  if (bound < 0)
    throw RangeError("gr_module: negative bound");
  RingSpec R = ctx.ring().companion();
  const std::size_t n = R.num_vars();
  ExplicitGradedModule M(R, 0, bound, true);
  auto labels = detail::gr_labels(ctx, bound);
  std::map<BasisLabel, std::size_t> index;
  for (int d = 0; d <= bound; ++d) {
    for (std::size_t i = 0; i < labels[d].size(); ++i)
      index.emplace(labels[d][i], i);
    M.set_basis(d, labels[d]);
  }
  for (int d = 0; d < bound; ++d) {
    const auto& src = M.basis(d);
    for (std::size_t k = 0; k < n; ++k) {
      SparseMatrix a;
      a.rows = M.dim(d + 1);
      a.columns.resize(src.size());
      bool any = false;
      for (std::size_t col = 0; col < src.size(); ++col) {
        BasisLabel w{src[col].component,
                     src[col].mono * Monomial::variable(n, k)};
        auto o = ctx.try_ord(w.component, w.mono);
        if (o && *o == d + 1) {
          a.columns[col].push_back({index.at(w), 1});
          any = true;
        }
      }
      if (any)
        M.set_action(k, d, std::move(a));
    }
  }
  return M;
}

/// dim gr_m(M)_i for i = 0..bound.
inline std::vector<std::int64_t> gr_hilbert(const OrdContext& ctx, int bound) {
  if (bound < 0)
    throw RangeError("gr_hilbert: negative bound");
  std::vector<std::int64_t> h;
  for (const auto& labels : detail::gr_labels(ctx, bound))
    h.push_back(std::int64_t(labels.size()));
  return h;
}

/// Graded Betti numbers of gr_m(M) over the companion ring, j <= bound.
inline BettiTable gr_betti(const OrdContext& ctx, int bound) {
  ExplicitGradedModule M = gr_module(ctx, bound);
  return betti_via_koszul(M, M.ring(), bound);
}

/// Extension of scalars of a module over a subring: variable t of M's ring
/// becomes variable embedding[t] of `full`, the remaining variables act by
/// zero. Over a standard graded M the result lives over the companion of
/// `full`; otherwise the weights must agree along the embedding.
inline ExplicitGradedModule extend_gr(const ExplicitGradedModule& M,
                                      const RingSpec& full,
                                      const std::vector<std::size_t>& embedding) {
  const RingSpec& sub = M.ring();
  if (embedding.size() != sub.num_vars())
    throw DimensionError("extend_gr: embedding size differs from subring");
  RingSpec target = sub.is_standard() ? full.companion() : full;
  if (target.characteristic() != sub.characteristic())
    throw ContractError("extend_gr: characteristics differ");
  std::vector<bool> used(target.num_vars(), false);
  for (std::size_t t = 0; t < embedding.size(); ++t) {
    if (embedding[t] >= target.num_vars() || used[embedding[t]])
      throw ContractError("extend_gr: embedding is not injective");
    used[embedding[t]] = true;
    if (target.weight(embedding[t]) != sub.weight(t))
      throw ContractError("extend_gr: weights differ along the embedding");
  }
  auto lift = [&](const Monomial& m) {
    Monomial out(target.num_vars());
    for (std::size_t t = 0; t < m.size(); ++t)
      out.set(embedding[t], m[t]);
    return out;
  };
  ExplicitGradedModule E(target, M.min_degree(), M.max_degree(), M.fine_graded());
  for (int d = M.min_degree(); d <= M.max_degree(); ++d) {
    std::vector<BasisLabel> labels;
    for (const BasisLabel& l : M.basis(d))
      labels.push_back({l.component, lift(l.mono)});
    E.set_basis(d, std::move(labels));
  }
  for (std::size_t t = 0; t < sub.num_vars(); ++t)
    for (int d = M.min_degree(); d <= M.max_degree(); ++d)
      if (const SparseMatrix* a = M.action(t, d))
        E.set_action(embedding[t], d, *a);
  return E;
}

/// extend_gr along the prefix embedding: the subring's variables must be
/// the first variables of `full`, with the same names.
inline ExplicitGradedModule extend_gr(const ExplicitGradedModule& M,
                                      const RingSpec& full) {
  const RingSpec& sub = M.ring();
  if (sub.num_vars() > full.num_vars())
    throw ContractError("extend_gr: subring has more variables than the ring");
  std::vector<std::size_t> embedding(sub.num_vars());
  for (std::size_t t = 0; t < sub.num_vars(); ++t) {
    if (sub.name(t) != full.name(t))
      throw ContractError("extend_gr: variable " + sub.name(t) +
                          " is not a prefix variable of the ring");
    embedding[t] = t;
  }
  return extend_gr(M, full, embedding);
}

} // namespace nsk
