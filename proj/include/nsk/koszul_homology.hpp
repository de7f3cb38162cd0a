#pragma once

#include "betti.hpp"
#include "errors.hpp"
#include "graded_module.hpp"
#include "homology.hpp"
#include "linalg.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <vector>

namespace nsk {

namespace detail {

struct FineKey {
  std::size_t component;
  Monomial mono;
  bool operator==(const FineKey&) const = default;
};

struct FineKeyHash {
  std::size_t operator()(const FineKey& k) const {
    return MonomialHash{}(k.mono) * 31 + k.component;
  }
};

} // namespace detail

/// Graded Betti numbers of M over the polynomial ring `ring`, read off the
/// Koszul homology: β_{i,j} = dim H_i(K(x_1..x_n) ⊗ M)_j, for all internal
/// degrees j <= bound. Every strand is a finite matrix over the field, so the
/// result is exact in that range.
inline BettiTable betti_via_koszul(const ExplicitGradedModule& M,
                                   const RingSpec& ring, int bound) {
  if (M.ring().weights() != ring.weights() ||
      M.ring().characteristic() != ring.characteristic())
    throw ContractError("betti_via_koszul: module is over a different ring");
  if (bound > M.max_degree())
    throw RangeError("betti_via_koszul: bound " + std::to_string(bound) +
                     " exceeds stored range (max degree " +
                     std::to_string(M.max_degree()) + ")");
  const std::size_t n = ring.num_vars();
  const PrimeField& k = ring.field();

  // subsets of variables by size; masks within a size are increasing
  std::vector<std::vector<unsigned>> subsets(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    subsets[std::popcount(mask)].push_back(mask);
  std::vector<int> maskWeight(1u << n, 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v))
        maskWeight[mask] += ring.weight(v);
  auto subsetIndex = [&](unsigned mask) {
    const auto& level = subsets[std::popcount(mask)];
    return std::size_t(std::lower_bound(level.begin(), level.end(), mask) -
                       level.begin());
  };

  BettiTable out;
  for (int j = M.min_degree(); j <= bound; ++j) {
    // strand[i]: elements e_T ⊗ b, grouped by T with offsets
    std::vector<std::vector<std::size_t>> offsets(n + 1);
    std::vector<std::size_t> sizes(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i)
      for (unsigned mask : subsets[i]) {
        offsets[i].push_back(sizes[i]);
        sizes[i] += M.dim(j - maskWeight[mask]);
      }

    // block ids per element
    std::vector<std::vector<std::size_t>> blockOf(n + 1), localIdx(n + 1);
    std::size_t numBlocks = 1;
    std::unordered_map<detail::FineKey, std::size_t, detail::FineKeyHash> keys;
    for (std::size_t i = 0; i <= n; ++i) {
      blockOf[i].assign(sizes[i], 0);
      localIdx[i].assign(sizes[i], 0);
      if (!M.fine_graded())
        continue;
      for (std::size_t s = 0; s < subsets[i].size(); ++s) {
        unsigned mask = subsets[i][s];
        Monomial eT(n);
        for (std::size_t v = 0; v < n; ++v)
          if (mask & (1u << v))
            eT.set(v, 1);
        const auto& b = M.basis(j - maskWeight[mask]);
        for (std::size_t p = 0; p < b.size(); ++p) {
          detail::FineKey key{b[p].component, b[p].mono * eT};
          auto [it, inserted] = keys.emplace(std::move(key), keys.size());
          blockOf[i][offsets[i][s] + p] = it->second;
        }
      }
      numBlocks = keys.size();
    }
    std::vector<std::vector<std::vector<std::size_t>>> members(
        n + 1, std::vector<std::vector<std::size_t>>(numBlocks));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t p = 0; p < sizes[i]; ++p) {
        auto& m = members[i][blockOf[i][p]];
        localIdx[i][p] = m.size();
        m.push_back(p);
      }

    std::vector<std::int64_t> ranks(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t blk = 0; blk < numBlocks; ++blk) {
        const auto& cols = members[i][blk];
        const auto& rows = members[i - 1][blk];
        if (cols.empty() || rows.empty())
          continue;
        DenseMatrix D(rows.size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::size_t pos = cols[c];
          std::size_t s = std::size_t(
              std::upper_bound(offsets[i].begin(), offsets[i].end(), pos) -
              offsets[i].begin() - 1);
          unsigned mask = subsets[i][s];
          std::size_t bidx = pos - offsets[i][s];
          int srcDeg = j - maskWeight[mask];
          int sign = 1;
          for (std::size_t v = 0; v < n; ++v) {
            if (!(mask & (1u << v)))
              continue;
            unsigned face = mask & ~(1u << v);
            const SparseMatrix* A = M.action(v, srcDeg);
            if (A) {
              std::size_t base = offsets[i - 1][subsetIndex(face)];
              for (auto [r, val] : A->columns[bidx]) {
                std::size_t tpos = base + r;
                Scalar x = sign > 0 ? val : k.neg(val);
                std::size_t lr = localIdx[i - 1][tpos];
                D.at(lr, c) = k.add(D.at(lr, c), x);
              }
            }
            sign = -sign;
          }
        }
        ranks[i] += std::int64_t(rank(std::move(D), k));
      }
    for (std::size_t i = 0; i <= n; ++i) {
      std::int64_t h = std::int64_t(sizes[i]) - ranks[i] - ranks[i + 1];
      out.add(int(i), j, h);
    }
  }
  return out;
}

} // namespace nsk
