#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsk {

/// Label of a basis vector: a monomial in a given component.
struct BasisLabel {
  std::size_t component = 0;
  Monomial mono;

  auto operator<=>(const BasisLabel&) const = default;
  bool operator==(const BasisLabel&) const = default;
};

/// A graded module given as finite-dimensional graded pieces (degrees
/// min_degree..max_degree) together with, for each variable x_k and each
/// degree d, the matrix of multiplication by x_k from degree d to degree
/// d + weight(k). Degrees below min_degree are zero; actions leaving the
/// stored range are not recorded.
///
/// A fine-graded module promises that x_k sends the basis vector labelled
/// (c, m) to a multiple of the one labelled (c, x_k·m); such modules are
/// multigraded and their Koszul homology splits into tiny blocks.
class ExplicitGradedModule {
public:
  ExplicitGradedModule(RingSpec ring, int minDegree, int maxDegree,
                       bool fineGraded)
      : mRing(std::move(ring)), mMin(minDegree), mMax(maxDegree),
        mFine(fineGraded), mActions(mRing.num_vars()) {
    if (maxDegree < minDegree - 1)
      throw RangeError("graded module: empty degree range is inverted");
  }

  const RingSpec& ring() const { return mRing; }
  int min_degree() const { return mMin; }
  int max_degree() const { return mMax; }
  bool fine_graded() const { return mFine; }

  void set_basis(int degree, std::vector<BasisLabel> labels) {
    check_degree(degree);
    for (const BasisLabel& l : labels)
      if (l.mono.size() != mRing.num_vars())
        throw DimensionError("graded module: label has wrong number of variables");
    mBasis[degree] = std::move(labels);
  }

  const std::vector<BasisLabel>& basis(int degree) const {
    static const std::vector<BasisLabel> kEmpty;
    auto it = mBasis.find(degree);
    return it == mBasis.end() ? kEmpty : it->second;
  }

  std::size_t dim(int degree) const { return basis(degree).size(); }

  /// Position of a label within its degree, or nullopt.
  std::optional<std::size_t> index_of(int degree, const BasisLabel& label) const {
    const auto& b = basis(degree);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] == label)
        return i;
    return std::nullopt;
  }

  /// Records multiplication by x_var from `degree`; the target degree must
  /// lie in the stored range.
  void set_action(std::size_t var, int degree, SparseMatrix m) {
    check_degree(degree);
    int target = degree + mRing.weight(var);
    check_degree(target);
    if (m.cols() != dim(degree) || m.rows != dim(target))
      throw DimensionError("graded module: action matrix for variable " +
                           std::to_string(var) + " in degree " +
                           std::to_string(degree) + " has the wrong shape");
    if (mFine) {
      const auto& src = basis(degree);
      const auto& tgt = basis(target);
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (auto [r, v] : m.columns[c]) {
          (void)v;
          BasisLabel expect{src[c].component,
                            src[c].mono * Monomial::variable(mRing.num_vars(), var)};
          if (!(tgt[r] == expect))
            throw ContractError("graded module: action breaks the fine grading");
        }
    }
    mActions[var][degree] = std::move(m);
  }

  /// Multiplication by x_var out of `degree`; nullptr means the zero map.
  const SparseMatrix* action(std::size_t var, int degree) const {
    const auto& perVar = mActions.at(var);
    auto it = perVar.find(degree);
    return it == perVar.end() ? nullptr : &it->second;
  }

  /// Dense copy of an action (zero matrix when not recorded).
  SparseMatrix action_matrix(std::size_t var, int degree) const {
    if (const SparseMatrix* a = action(var, degree))
      return *a;
    SparseMatrix z;
    z.rows = dim(degree + mRing.weight(var));
    z.columns.resize(dim(degree));
    return z;
  }

  /// Checks x_s·x_t = x_t·x_s on every stored degree where both composites
  /// land in range. Returns a description of the first failure.
  std::optional<std::string> check_commuting() const {
    const PrimeField& k = mRing.field();
    const std::size_t n = mRing.num_vars();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t)
        for (int d = mMin; d <= mMax; ++d) {
          if (d + mRing.weight(s) + mRing.weight(t) > mMax)
            continue;
          SparseMatrix st = compose(action_matrix(s, d + mRing.weight(t)),
                                    action_matrix(t, d), k);
          SparseMatrix ts = compose(action_matrix(t, d + mRing.weight(s)),
                                    action_matrix(s, d), k);
          if (!(st == ts))
            return "variables " + mRing.name(s) + " and " + mRing.name(t) +
                   " do not commute in degree " + std::to_string(d);
        }
    return std::nullopt;
  }

  bool operator==(const ExplicitGradedModule& other) const {
    if (!(mRing == other.mRing) || mMin != other.mMin || mMax != other.mMax)
      return false;
    for (int d = mMin; d <= mMax; ++d)
      if (basis(d) != other.basis(d))
        return false;
    for (std::size_t v = 0; v < mRing.num_vars(); ++v)
      for (int d = mMin; d <= mMax; ++d)
        if (d + mRing.weight(v) <= mMax &&
            !(action_matrix(v, d) == other.action_matrix(v, d)))
          return false;
    return true;
  }

private:
  void check_degree(int d) const {
    if (d < mMin || d > mMax)
      throw RangeError("graded module: degree " + std::to_string(d) +
                       " outside stored range [" + std::to_string(mMin) +
                       ", " + std::to_string(mMax) + "]");
  }

  RingSpec mRing;
  int mMin;
  int mMax;
  bool mFine;
  std::map<int, std::vector<BasisLabel>> mBasis;
  std::vector<std::map<int, SparseMatrix>> mActions;
};

} // namespace nsk
