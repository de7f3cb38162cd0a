#pragma once

#include "assoc_graded.hpp"
#include "betti.hpp"
#include "errors.hpp"
#include "ring.hpp"
#include "truncation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace nsk {

/// One layer of the recursion: the quotient M^(i)/M^(i+1) is resolved via
/// the truncation of the subring at the lower threshold.
struct ConstructionStep {
  std::size_t eliminated_var = 0;
  int layer = 0;
  int N = 0;
  std::vector<int> sub_weights;
  int sub_threshold = 0;
  BettiTable sub_table;
  BettiTable after_tensor;
  BettiTable running_before;
  BettiTable after_horseshoe;
};

struct ConstructionTrace {
  std::vector<int> weights;
  int e = 0;
  /// Set when the input is a base case (e <= 0 or one variable).
  bool base_case = false;
  std::optional<std::size_t> eliminated_var;
  int d = 0;
  int N = 0;
  std::vector<ConstructionStep> steps;
};

/// Betti table of the totalization with a Koszul complex on k linear forms.
/// Requires a linear (diagonal) table.
inline BettiTable tensor_koszul_betti(const BettiTable& b, int extraVars) {
  if (!b.is_diagonal())
    throw ContractError("tensor_koszul_betti: table is not linear");
  return convolve_koszul(b, extraVars);
}

/// Entrywise sum of two linear tables.
inline BettiTable horseshoe_sum(const BettiTable& left, const BettiTable& right) {
  if (!left.is_diagonal() || !right.is_diagonal())
    throw ContractError("horseshoe_sum: table is not linear");
  BettiTable out = left;
  out += right;
  return out;
}

/// Thread-safe memo of construction results keyed by the sorted weights and
/// the threshold. Racing writers store identical values.
class ConstructionCache {
public:
  std::optional<BettiTable> find(const std::vector<int>& weights, int e) const {
    std::lock_guard lock(mMutex);
    auto it = mTables.find({sorted(weights), e});
    if (it == mTables.end())
      return std::nullopt;
    return it->second;
  }

  void store(const std::vector<int>& weights, int e, const BettiTable& b) {
    std::lock_guard lock(mMutex);
    mTables.emplace(std::pair{sorted(weights), e}, b);
  }

  std::size_t size() const {
    std::lock_guard lock(mMutex);
    return mTables.size();
  }

  static ConstructionCache& shared() {
    static ConstructionCache cache;
    return cache;
  }

private:
  static std::vector<int> sorted(std::vector<int> w) {
    std::sort(w.begin(), w.end());
    return w;
  }

  mutable std::mutex mMutex;
  std::map<std::pair<std::vector<int>, int>, BettiTable> mTables;
};

namespace detail {

inline BettiTable construct_table(const std::vector<int>& weights, int e,
                                  ConstructionCache& cache,
                                  ConstructionTrace* trace) {
  if (trace) {
    trace->weights = weights;
    trace->e = e;
  }
  if (e <= 0 || weights.size() <= 1) {
    if (trace)
      trace->base_case = true;
    return BettiTable{{0, 0, 1}};
  }
  if (!trace)
    if (auto hit = cache.find(weights, e))
      return *hit;
  RingSpec ring = RingSpec::with_weights(weights);
  const std::size_t y = elimination_variable(ring);
  const int d = ring.weight(y);
  const int N = principal_layer(e, d);
  std::vector<int> sub;
  for (std::size_t t = 0; t < weights.size(); ++t)
    if (t != y)
      sub.push_back(weights[t]);
  if (trace) {
    trace->eliminated_var = y;
    trace->d = d;
    trace->N = N;
  }
  BettiTable running{{0, 0, 1}};
  for (int i = N - 1; i >= 0; --i) {
    const int threshold = e - d * i;
    BettiTable subTable = construct_table(sub, threshold, cache, nullptr);
    BettiTable extended = tensor_koszul_betti(subTable, 1);
    BettiTable next = horseshoe_sum(running, extended);
    if (!next.is_diagonal())
      throw ContractError("construction produced a non-linear table");
    if (trace)
      trace->steps.push_back({y, i, N, sub, threshold, subTable, extended,
                              running, next});
    running = std::move(next);
  }
  cache.store(weights, e, running);
  return running;
}

} // namespace detail

/// Predicted (linear) Betti table of gr_m(S_{>=e}) over the companion ring,
/// built by peeling off the filtration M^(i) = M ∩ <y^i> for the variable y
/// of maximal weight d: M^(N) is principal for N = ceil(e/d), and each
/// quotient M^(i)/M^(i+1) has gr equal to gr(A_{>=e−d·i}) ⊗ R/(y), A the
/// subring without y.
inline std::pair<BettiTable, ConstructionTrace>
construct_gr_betti(const std::vector<int>& weights, int e,
                   ConstructionCache& cache = ConstructionCache::shared()) {
  for (int w : weights)
    if (w < 1)
      throw ContractError("construct_gr_betti: weights must be positive");
  ConstructionTrace trace;
  BettiTable b = detail::construct_table(weights, e, cache, &trace);
  return {std::move(b), std::move(trace)};
}

/// Predicted table for the truncation at e of the free module
/// ⊕_j S(a_j): the sum of the tables for S_{>=e+a_j}.
inline BettiTable construct_free_betti(const std::vector<int>& weights,
                                       const std::vector<int>& twists, int e,
                                       ConstructionCache& cache =
                                           ConstructionCache::shared()) {
  BettiTable out;
  for (int a : twists)
    out = horseshoe_sum(out, construct_gr_betti(weights, e + a, cache).first);
  return out;
}

/// Hilbert functions of the three terms of the layer sequence
/// 0 → gr(M^(i+1)) → gr(M^(i)) → gr(A^(i)) → 0 up to a degree bound.
struct SesHilbert {
  std::vector<std::int64_t> layer;
  std::vector<std::int64_t> next;
  std::vector<std::int64_t> quotient;

  bool additive() const {
    for (std::size_t t = 0; t < layer.size(); ++t)
      if (layer[t] != next[t] + quotient[t])
        return false;
    return true;
  }
};

inline SesHilbert ses_hilbert(const std::vector<int>& weights, int e, int i,
                              int bound) {
  RingSpec ring = RingSpec::with_weights(weights);
  const std::size_t y = elimination_variable(ring);
  const int d = ring.weight(y);
  const int N = principal_layer(e, d);
  if (i < 0 || i >= N)
    throw RangeError("ses_hilbert: layer " + std::to_string(i) +
                     " outside 0.." + std::to_string(N - 1));
  const auto gens = trunc_gens(ring, e);
  SesHilbert out;
  out.layer = gr_hilbert(OrdContext::ideal(ring, filtration_layer(gens, i, y)), bound);
  out.next = gr_hilbert(OrdContext::ideal(ring, filtration_layer(gens, i + 1, y)), bound);
  out.quotient.assign(bound + 1, 0);
  const int threshold = e - d * i;
  if (ring.num_vars() == 1) {
    if (threshold <= 0)
      out.quotient[0] = 1;
    return out;
  }
  std::vector<std::size_t> others;
  for (std::size_t t = 0; t < ring.num_vars(); ++t)
    if (t != y)
      others.push_back(t);
  RingSpec A = ring.subring(others);
  ExplicitGradedModule grA =
      gr_module(OrdContext::ideal(A, trunc_gens(A, threshold)), bound);
  ExplicitGradedModule ext = extend_gr(grA, ring, others);
  for (int t = 0; t <= bound; ++t)
    out.quotient[t] = std::int64_t(ext.dim(t));
  return out;
}

/// Degreewise Hilbert additivity of the layer sequence at layer i.
inline bool ses_hilbert_check(const std::vector<int>& weights, int e, int i,
                              int bound) {
  return ses_hilbert(weights, e, i, bound).additive();
}

} // namespace nsk
