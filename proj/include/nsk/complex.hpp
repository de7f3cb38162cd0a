#pragma once

#include "betti.hpp"
#include "errors.hpp"
#include "free_module.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nsk {

/// Dense matrix of polynomials.
class PolyMatrix {
public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : mRows(rows), mCols(cols), mData(rows * cols) {}

  std::size_t rows() const { return mRows; }
  std::size_t cols() const { return mCols; }

  Polynomial& at(std::size_t r, std::size_t c) { return mData.at(r * mCols + c); }
  const Polynomial& at(std::size_t r, std::size_t c) const {
    return mData.at(r * mCols + c);
  }

  bool operator==(const PolyMatrix&) const = default;

private:
  std::size_t mRows = 0;
  std::size_t mCols = 0;
  std::vector<Polynomial> mData;
};

/// F_ℓ → ... → F_1 → F_0 over a graded polynomial ring. Entry (r, c) of d_i
/// is the coefficient of target generator r in the image of source
/// generator c.
class GradedFreeComplex {
public:
  GradedFreeComplex(RingSpec ring, std::vector<FreeModuleSpec> modules = {},
                    std::vector<PolyMatrix> differentials = {})
      : mRing(std::move(ring)), mModules(std::move(modules)),
        mMaps(std::move(differentials)) {
    if (mModules.empty() ? !mMaps.empty() : mMaps.size() + 1 != mModules.size())
      throw DimensionError("complex: need exactly one differential per "
                           "consecutive pair of modules");
    for (std::size_t i = 0; i < mMaps.size(); ++i)
      if (mMaps[i].rows() != mModules[i].rank() ||
          mMaps[i].cols() != mModules[i + 1].rank())
        throw DimensionError("complex: d_" + std::to_string(i + 1) +
                             " has the wrong shape");
  }

  const RingSpec& ring() const { return mRing; }

  /// Highest homological index (−1 for the zero complex).
  int length() const { return int(mModules.size()) - 1; }

  const FreeModuleSpec& module(int i) const { return mModules.at(i); }
  const std::vector<FreeModuleSpec>& modules() const { return mModules; }

  /// d_i : F_i → F_{i-1}, 1 <= i <= length().
  const PolyMatrix& differential(int i) const { return mMaps.at(i - 1); }
  const std::vector<PolyMatrix>& differentials() const { return mMaps; }

  bool has_multidegrees() const {
    return !mModules.empty() &&
           std::all_of(mModules.begin(), mModules.end(),
                       [](const FreeModuleSpec& m) { return m.multidegrees.has_value(); });
  }

  /// β_{i,j} = number of generators of degree j in F_i.
  BettiTable betti_table() const {
    BettiTable b;
    for (std::size_t i = 0; i < mModules.size(); ++i)
      for (int d : mModules[i].degrees)
        b.add(int(i), d, 1);
    return b;
  }

  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    for (const auto& m : mModules)
      r.push_back(m.rank());
    return r;
  }

  std::string to_string() const {
    PolyRing R(mRing);
    std::ostringstream out;
    for (std::size_t i = 0; i < mModules.size(); ++i) {
      out << "F_" << i << " degrees:";
      for (int d : mModules[i].degrees)
        out << ' ' << d;
      out << '\n';
      if (i == 0)
        continue;
      const PolyMatrix& d = mMaps[i - 1];
      out << "d_" << i << " =\n";
      for (std::size_t r = 0; r < d.rows(); ++r) {
        out << "  [";
        for (std::size_t c = 0; c < d.cols(); ++c)
          out << (c ? ", " : "") << R.to_string(d.at(r, c));
        out << "]\n";
      }
    }
    return out.str();
  }

  bool operator==(const GradedFreeComplex&) const = default;

private:
  RingSpec mRing;
  std::vector<FreeModuleSpec> mModules;
  std::vector<PolyMatrix> mMaps;
};

struct ComplexCheck {
  enum class Kind { ok, inhomogeneous, not_multihomogeneous, not_a_complex };

  Kind kind = Kind::ok;
  int i = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string message;

  bool ok() const { return kind == Kind::ok; }
};

namespace detail {

inline ComplexCheck check_entries(const GradedFreeComplex& C) {
  PolyRing R(C.ring());
  for (int i = 1; i <= C.length(); ++i) {
    const PolyMatrix& d = C.differential(i);
    const FreeModuleSpec& src = C.module(i);
    const FreeModuleSpec& tgt = C.module(i - 1);
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const Polynomial& p = d.at(r, c);
        if (p.is_zero())
          continue;
        auto deg = R.homogeneous_degree(p);
        if (!deg || *deg != src.degrees[c] - tgt.degrees[r])
          return {ComplexCheck::Kind::inhomogeneous, i, r, c,
                  "entry " + R.to_string(p) + " of d_" + std::to_string(i) +
                      " should have degree " +
                      std::to_string(src.degrees[c] - tgt.degrees[r])};
        if (src.multidegrees && tgt.multidegrees) {
          const Monomial& a = (*src.multidegrees)[c];
          const Monomial& b = (*tgt.multidegrees)[r];
          bool okMulti = p.terms.size() == 1 && b.divides(a) &&
                         p.terms.front().mono == a / b;
          if (!okMulti)
            return {ComplexCheck::Kind::not_multihomogeneous, i, r, c,
                    "entry " + R.to_string(p) + " of d_" + std::to_string(i) +
                        " is not multihomogeneous"};
        }
      }
  }
  return {};
}

} // namespace detail

/// Verifies that every entry of every differential is homogeneous of degree
/// (source degree − target degree), multihomogeneous when multidegrees are
/// attached, and that d_{i-1}∘d_i = 0. Reports the first violation.
inline ComplexCheck check_complex(const GradedFreeComplex& C) {
  if (ComplexCheck entries = detail::check_entries(C); !entries.ok())
    return entries;
  PolyRing R(C.ring());
  for (int i = 2; i <= C.length(); ++i) {
    const PolyMatrix& a = C.differential(i - 1);
    const PolyMatrix& b = C.differential(i);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) {
        Polynomial s;
        for (std::size_t k = 0; k < a.cols(); ++k)
          if (!a.at(r, k).is_zero() && !b.at(k, c).is_zero())
            s = R.add(s, R.mul(a.at(r, k), b.at(k, c)));
        if (!s.is_zero())
          return {ComplexCheck::Kind::not_a_complex, i, r, c,
                  "d_" + std::to_string(i - 1) + "*d_" + std::to_string(i) +
                      " has nonzero entry " + R.to_string(s)};
      }
  }
  return {};
}

/// Cancels unit entries (nonzero constants) by Gaussian elimination on the
/// complex until none remain. Units are taken in lexicographic order of
/// (i, row, col); the result is homotopy equivalent to the input.
inline GradedFreeComplex minimize_complex(const GradedFreeComplex& C) {
  if (C.length() < 1)
    return C;
  PolyRing R(C.ring());
  const PrimeField& k = R.field();
  const int len = C.length();
  std::vector<PolyMatrix> maps = C.differentials();
  std::vector<std::vector<bool>> alive;
  for (int i = 0; i <= len; ++i)
    alive.emplace_back(C.module(i).rank(), true);

  for (int i = 1; i <= len; ++i) {
    PolyMatrix& d = maps[i - 1];
    std::vector<bool>& rowAlive = alive[i - 1];
    std::vector<bool>& colAlive = alive[i];
    std::size_t startRow = 0;
    while (true) {
      std::size_t ur = d.rows(), uc = d.cols();
      for (std::size_t r = startRow; r < d.rows() && ur == d.rows(); ++r) {
        if (!rowAlive[r])
          continue;
        for (std::size_t c = 0; c < d.cols(); ++c)
          if (colAlive[c] && R.is_unit(d.at(r, c))) {
            ur = r;
            uc = c;
            break;
          }
      }
      if (ur == d.rows())
        break;
      // new units can only appear below the pivot row
      startRow = ur;
      Scalar uinv = k.inv(d.at(ur, uc).terms.front().coeff);
      std::vector<std::size_t> rowsInCol, colsInRow;
      for (std::size_t r = 0; r < d.rows(); ++r)
        if (r != ur && rowAlive[r] && !d.at(r, uc).is_zero())
          rowsInCol.push_back(r);
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (c != uc && colAlive[c] && !d.at(ur, c).is_zero())
          colsInRow.push_back(c);
      for (std::size_t r : rowsInCol) {
        Polynomial a = R.scale(d.at(r, uc), uinv);
        for (std::size_t c : colsInRow)
          d.at(r, c) = R.sub(d.at(r, c), R.mul(a, d.at(ur, c)));
      }
      rowAlive[ur] = false;
      colAlive[uc] = false;
    }
  }

  std::vector<FreeModuleSpec> modules;
  std::vector<std::vector<std::size_t>> keep(len + 1);
  for (int i = 0; i <= len; ++i) {
    const FreeModuleSpec& m = C.module(i);
    FreeModuleSpec out;
    if (m.multidegrees)
      out.multidegrees.emplace();
    for (std::size_t g = 0; g < m.rank(); ++g)
      if (alive[i][g]) {
        keep[i].push_back(g);
        out.degrees.push_back(m.degrees[g]);
        if (m.multidegrees)
          out.multidegrees->push_back((*m.multidegrees)[g]);
      }
    modules.push_back(std::move(out));
  }
  // drop trailing modules emptied by cancellation
  while (modules.size() > 1 && modules.back().rank() == 0 &&
         C.module(int(modules.size()) - 1).rank() > 0)
    modules.pop_back();
  std::vector<PolyMatrix> outMaps;
  for (std::size_t i = 1; i < modules.size(); ++i) {
    PolyMatrix m(keep[i - 1].size(), keep[i].size());
    for (std::size_t r = 0; r < keep[i - 1].size(); ++r)
      for (std::size_t c = 0; c < keep[i].size(); ++c)
        m.at(r, c) = maps[i - 1].at(keep[i - 1][r], keep[i][c]);
    outMaps.push_back(std::move(m));
  }
  return GradedFreeComplex(C.ring(), std::move(modules), std::move(outMaps));
}

/// Koszul complex on the chosen variables: F_i has one generator per
/// i-subset T (lexicographic), of degree Σ_{k∈T} weight(k) and multidegree
/// Π_{k∈T} x_k, with d(e_T) = Σ_{t} (−1)^t x_{T_t} e_{T∖T_t}.
inline GradedFreeComplex koszul_complex(const RingSpec& ring,
                                        std::vector<std::size_t> vars) {
  if (vars.empty())
    throw ContractError("koszul_complex: empty variable set");
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end() ||
      vars.back() >= ring.num_vars())
    throw RangeError("koszul_complex: invalid variable subset");
  PolyRing R(ring);
  const std::size_t n = ring.num_vars();
  const std::size_t k = vars.size();
  // subsets of positions 0..k-1 as bitmasks, grouped by size, lexicographic
  std::vector<std::vector<std::vector<std::size_t>>> subsets(k + 1);
  auto rec = [&](auto&& self, std::size_t start, std::vector<std::size_t>& cur) -> void {
    subsets[cur.size()].push_back(cur);
    for (std::size_t p = start; p < k; ++p) {
      cur.push_back(p);
      self(self, p + 1, cur);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> cur;
  rec(rec, 0, cur);
  for (auto& level : subsets)
    std::sort(level.begin(), level.end());

  std::vector<FreeModuleSpec> modules;
  for (std::size_t i = 0; i <= k; ++i) {
    FreeModuleSpec m;
    m.multidegrees.emplace();
    for (const auto& T : subsets[i]) {
      Monomial md(n);
      int deg = 0;
      for (std::size_t p : T) {
        md.set(vars[p], 1);
        deg += ring.weight(vars[p]);
      }
      m.degrees.push_back(deg);
      m.multidegrees->push_back(md);
    }
    modules.push_back(std::move(m));
  }
  std::vector<PolyMatrix> maps;
  for (std::size_t i = 1; i <= k; ++i) {
    PolyMatrix d(subsets[i - 1].size(), subsets[i].size());
    for (std::size_t c = 0; c < subsets[i].size(); ++c) {
      const auto& T = subsets[i][c];
      for (std::size_t t = 0; t < T.size(); ++t) {
        std::vector<std::size_t> face = T;
        face.erase(face.begin() + t);
        auto it = std::lower_bound(subsets[i - 1].begin(), subsets[i - 1].end(), face);
        std::size_t r = std::size_t(it - subsets[i - 1].begin());
        d.at(r, c) = R.monomial(t % 2 == 0 ? 1 : -1,
                                Monomial::variable(n, vars[T[t]]));
      }
    }
    maps.push_back(std::move(d));
  }
  return GradedFreeComplex(ring, std::move(modules), std::move(maps));
}

/// Total complex of F ⊗ G: Tot_k = ⊕_{i+j=k} F_i ⊗ G_j with basis ordered by
/// i, then F-generator, then G-generator, and differential
/// d(f⊗g) = d_F(f)⊗g + (−1)^i f⊗d_G(g).
inline GradedFreeComplex totalize_tensor(const GradedFreeComplex& F,
                                         const GradedFreeComplex& G) {
  if (!(F.ring() == G.ring()))
    throw ContractError("totalize_tensor: complexes over different rings");
  if (F.length() < 0 || G.length() < 0)
    return GradedFreeComplex(F.ring());
  PolyRing R(F.ring());
  const int len = F.length() + G.length();
  struct Slot {
    int i;
    std::size_t f;
    std::size_t g;
  };
  std::vector<std::vector<Slot>> basis(len + 1);
  std::vector<FreeModuleSpec> modules(len + 1);
  const bool multi = F.has_multidegrees() && G.has_multidegrees();
  for (int t = 0; t <= len; ++t) {
    if (multi)
      modules[t].multidegrees.emplace();
    for (int i = std::max(0, t - G.length()); i <= std::min(t, F.length()); ++i) {
      const FreeModuleSpec& Fi = F.module(i);
      const FreeModuleSpec& Gj = G.module(t - i);
      for (std::size_t f = 0; f < Fi.rank(); ++f)
        for (std::size_t g = 0; g < Gj.rank(); ++g) {
          basis[t].push_back({i, f, g});
          modules[t].degrees.push_back(Fi.degrees[f] + Gj.degrees[g]);
          if (multi)
            modules[t].multidegrees->push_back((*Fi.multidegrees)[f] *
                                               (*Gj.multidegrees)[g]);
        }
    }
  }
  auto indexOf = [&](int t, int i, std::size_t f, std::size_t g) {
    for (std::size_t p = 0; p < basis[t].size(); ++p)
      if (basis[t][p].i == i && basis[t][p].f == f && basis[t][p].g == g)
        return p;
    throw ContractError("totalize_tensor: missing basis element");
  };
  std::vector<PolyMatrix> maps;
  for (int t = 1; t <= len; ++t) {
    PolyMatrix d(basis[t - 1].size(), basis[t].size());
    for (std::size_t c = 0; c < basis[t].size(); ++c) {
      const auto [i, f, g] = basis[t][c];
      const int j = t - i;
      if (i >= 1) {
        const PolyMatrix& dF = F.differential(i);
        for (std::size_t r = 0; r < dF.rows(); ++r)
          if (!dF.at(r, f).is_zero()) {
            std::size_t row = indexOf(t - 1, i - 1, r, g);
            d.at(row, c) = R.add(d.at(row, c), dF.at(r, f));
          }
      }
      if (j >= 1) {
        const PolyMatrix& dG = G.differential(j);
        for (std::size_t r = 0; r < dG.rows(); ++r)
          if (!dG.at(r, g).is_zero()) {
            std::size_t row = indexOf(t - 1, i, f, r);
            Polynomial e = i % 2 == 0 ? dG.at(r, g) : R.neg(dG.at(r, g));
            d.at(row, c) = R.add(d.at(row, c), e);
          }
      }
    }
    maps.push_back(std::move(d));
  }
  return GradedFreeComplex(F.ring(), std::move(modules), std::move(maps));
}

/// Taylor resolution of the monomial ideal generated by `gens` (at most 12):
/// F_i has one generator per i+1-subset I of generators, of multidegree
/// lcm(m_I), with d(e_I) = Σ_t (−1)^t (m_I / m_{I∖t}) e_{I∖t}.
inline GradedFreeComplex taylor_complex(const RingSpec& ring,
                                        const std::vector<Monomial>& gens) {
  if (gens.size() > 12)
    throw RangeError("taylor_complex: at most 12 generators");
  if (gens.empty())
    return GradedFreeComplex(ring);
  PolyRing R(ring);
  const std::size_t n = ring.num_vars();
  const std::size_t g = gens.size();
  std::vector<std::vector<unsigned>> levels(g);
  for (unsigned mask = 1; mask < (1u << g); ++mask)
    levels[std::popcount(mask) - 1].push_back(mask);
  auto lcmOf = [&](unsigned mask) {
    Monomial m(n);
    for (std::size_t t = 0; t < g; ++t)
      if (mask & (1u << t))
        m = lcm(m, gens[t]);
    return m;
  };
  std::vector<FreeModuleSpec> modules;
  for (const auto& level : levels) {
    FreeModuleSpec m;
    m.multidegrees.emplace();
    for (unsigned mask : level) {
      Monomial l = lcmOf(mask);
      m.degrees.push_back(weighted_degree(l, ring));
      m.multidegrees->push_back(l);
    }
    modules.push_back(std::move(m));
  }
  std::vector<PolyMatrix> maps;
  for (std::size_t i = 1; i < g; ++i) {
    PolyMatrix d(levels[i - 1].size(), levels[i].size());
    for (std::size_t c = 0; c < levels[i].size(); ++c) {
      unsigned mask = levels[i][c];
      Monomial top = lcmOf(mask);
      int sign = 1;
      for (std::size_t t = 0; t < g; ++t) {
        if (!(mask & (1u << t)))
          continue;
        unsigned face = mask & ~(1u << t);
        auto it = std::lower_bound(levels[i - 1].begin(), levels[i - 1].end(), face);
        std::size_t r = std::size_t(it - levels[i - 1].begin());
        d.at(r, c) = R.monomial(sign, top / lcmOf(face));
        sign = -sign;
      }
    }
    maps.push_back(std::move(d));
  }
  return GradedFreeComplex(ring, std::move(modules), std::move(maps));
}

} // namespace nsk
