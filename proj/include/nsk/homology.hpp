#pragma once

#include "complex.hpp"
#include "linalg.hpp"
#include "monomial.hpp"

#include <map>
#include <unordered_map>
#include <vector>

namespace nsk {

/// dim H_i(C)_j for every homological degree i and every internal degree j
/// up to `bound`. Only nonzero dimensions are stored.
struct HomologyTable {
  int bound = 0;
  std::map<std::pair<int, int>, std::int64_t> dims;

  std::int64_t at(int i, int j) const {
    auto it = dims.find({i, j});
    return it == dims.end() ? 0 : it->second;
  }

  /// True iff H_i vanishes in every degree <= bound for all i >= 1.
  bool acyclic() const {
    for (const auto& [key, d] : dims)
      if (key.first >= 1 && d != 0)
        return false;
    return true;
  }
};

namespace detail {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : m.exponents())
      h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

// Cache of monomial lists by weighted degree for one ring.
class MonomialCache {
public:
  explicit MonomialCache(std::vector<int> weights) : mWeights(std::move(weights)) {}

  const std::vector<Monomial>& of_degree(int d) {
    static const std::vector<Monomial> kEmpty;
    if (d < 0)
      return kEmpty;
    auto it = mCache.find(d);
    if (it == mCache.end())
      it = mCache.emplace(d, monomials_of_degree(mWeights, d)).first;
    return it->second;
  }

private:
  std::vector<int> mWeights;
  std::map<int, std::vector<Monomial>> mCache;
};

inline bool entries_multihomogeneous(const GradedFreeComplex& C) {
  if (!C.has_multidegrees())
    return false;
  return check_entries(C).ok();
}

} // namespace detail

/// Expands every free module into graded pieces and computes the homology
/// of each strand by rank computations over the field. When all modules
/// carry multidegrees the strands split further into multigraded blocks.
inline HomologyTable homology_dims(const GradedFreeComplex& C, int bound) {
  HomologyTable out;
  out.bound = bound;
  if (C.length() < 0)
    return out;
  const RingSpec& ring = C.ring();
  const PrimeField& k = ring.field();
  const int len = C.length();
  detail::MonomialCache monos(ring.weights());
  int lowest = bound + 1;
  for (const auto& m : C.modules())
    for (int d : m.degrees)
      lowest = std::min(lowest, d);
  const bool fine = detail::entries_multihomogeneous(C);

  // basis element of (F_i)_j: generator g times monomial
  struct Elem {
    std::size_t gen;
    const Monomial* mono;
  };

  for (int j = lowest; j <= bound; ++j) {
    std::vector<std::vector<Elem>> basis(len + 1);
    for (int i = 0; i <= len; ++i) {
      const FreeModuleSpec& F = C.module(i);
      for (std::size_t g = 0; g < F.rank(); ++g)
        for (const Monomial& m : monos.of_degree(j - F.degrees[g]))
          basis[i].push_back({g, &m});
    }
    // ranks[i] = rank of d_i in degree j
    std::vector<std::int64_t> ranks(len + 2, 0);
    if (fine) {
      // block key: multidegree of the basis element
      std::vector<std::unordered_map<Monomial, std::vector<std::size_t>,
                                     detail::MonomialHash>>
          blocks(len + 1);
      for (int i = 0; i <= len; ++i)
        for (std::size_t p = 0; p < basis[i].size(); ++p) {
          const Elem& e = basis[i][p];
          blocks[i][*e.mono * (*C.module(i).multidegrees)[e.gen]].push_back(p);
        }
      for (int i = 1; i <= len; ++i) {
        const PolyMatrix& d = C.differential(i);
        for (const auto& [key, cols] : blocks[i]) {
          auto rowsIt = blocks[i - 1].find(key);
          if (rowsIt == blocks[i - 1].end())
            continue;
          const auto& rows = rowsIt->second;
          // within a block, a target generator determines the monomial
          std::unordered_map<std::size_t, std::size_t> rowOfGen;
          for (std::size_t r = 0; r < rows.size(); ++r)
            rowOfGen[basis[i - 1][rows[r]].gen] = r;
          DenseMatrix M(rows.size(), cols.size());
          for (std::size_t c = 0; c < cols.size(); ++c) {
            std::size_t g = basis[i][cols[c]].gen;
            for (std::size_t r = 0; r < d.rows(); ++r) {
              const Polynomial& p = d.at(r, g);
              if (p.is_zero())
                continue;
              auto it = rowOfGen.find(r);
              if (it != rowOfGen.end())
                M.at(it->second, c) = k.add(M.at(it->second, c), p.terms.front().coeff);
            }
          }
          ranks[i] += std::int64_t(rank(std::move(M), k));
        }
      }
    } else {
      PolyRing R(ring);
      for (int i = 1; i <= len; ++i) {
        std::map<std::pair<std::size_t, Monomial>, std::size_t> rowIndex;
        for (std::size_t p = 0; p < basis[i - 1].size(); ++p)
          rowIndex[{basis[i - 1][p].gen, *basis[i - 1][p].mono}] = p;
        const PolyMatrix& d = C.differential(i);
        DenseMatrix M(basis[i - 1].size(), basis[i].size());
        for (std::size_t c = 0; c < basis[i].size(); ++c) {
          const Elem& e = basis[i][c];
          for (std::size_t r = 0; r < d.rows(); ++r)
            for (const Term& t : d.at(r, e.gen).terms) {
              auto it = rowIndex.find({r, t.mono * *e.mono});
              if (it == rowIndex.end())
                throw ContractError("homology_dims: differential is not homogeneous");
              M.at(it->second, c) = k.add(M.at(it->second, c), t.coeff);
            }
        }
        ranks[i] = std::int64_t(rank(std::move(M), k));
      }
    }
    for (int i = 0; i <= len; ++i) {
      std::int64_t h = std::int64_t(basis[i].size()) - ranks[i] - ranks[i + 1];
      if (h != 0)
        out.dims[{i, j}] = h;
    }
  }
  return out;
}

} // namespace nsk
