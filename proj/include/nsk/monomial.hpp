#pragma once

#include "errors.hpp"
#include "ring.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace nsk {

using Exponent = std::uint16_t;

/// A monic monomial, stored as its exponent vector. Arithmetic fails loudly
/// on exponent overflow instead of wrapping.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t numVars) : mExps(numVars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : mExps(std::move(exps)) {}
  Monomial(std::initializer_list<int> exps) {
    for (int e : exps)
      mExps.push_back(checked(e));
  }

  static Monomial one(std::size_t numVars) { return Monomial(numVars); }
  static Monomial variable(std::size_t numVars, std::size_t var,
                           int power = 1) {
    Monomial m(numVars);
    m.mExps.at(var) = checked(power);
    return m;
  }

  std::size_t size() const { return mExps.size(); }
  Exponent operator[](std::size_t i) const { return mExps[i]; }
  const std::vector<Exponent>& exponents() const { return mExps; }

  void set(std::size_t i, int e) { mExps.at(i) = checked(e); }

  int standard_degree() const {
    int d = 0;
    for (Exponent e : mExps)
      d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(mExps.begin(), mExps.end(),
                       [](Exponent e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    same_size(other);
    for (std::size_t i = 0; i < mExps.size(); ++i)
      if (mExps[i] > other.mExps[i])
        return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    same_size(other);
    Monomial r(mExps.size());
    for (std::size_t i = 0; i < mExps.size(); ++i)
      r.mExps[i] = checked(int(mExps[i]) + int(other.mExps[i]));
    return r;
  }

  /// this / other; requires other | this.
  Monomial operator/(const Monomial& other) const {
    same_size(other);
    Monomial r(mExps.size());
    for (std::size_t i = 0; i < mExps.size(); ++i) {
      if (other.mExps[i] > mExps[i])
        throw ContractError("monomial quotient: divisor does not divide");
      r.mExps[i] = mExps[i] - other.mExps[i];
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.same_size(b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.mExps[i] = std::max(a.mExps[i], b.mExps[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.same_size(b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r.mExps[i] = std::min(a.mExps[i], b.mExps[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    a.same_size(b);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.mExps[i] != 0 && b.mExps[i] != 0)
        return false;
    return true;
  }

  /// Container ordering (lexicographic on exponents). This is NOT a monomial
  /// order in the algebraic sense; use monomial_compare for that.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  /// Renders with caret exponents, e.g. x^2*y; the unit monomial is "1".
  std::string to_string(const std::vector<std::string>& names) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < mExps.size(); ++i) {
      if (mExps[i] == 0)
        continue;
      if (!first)
        out << '*';
      first = false;
      out << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      if (mExps[i] > 1)
        out << '^' << mExps[i];
    }
    return first ? "1" : out.str();
  }

private:
  static Exponent checked(int e) {
    if (e < 0 || e > std::numeric_limits<Exponent>::max())
      throw OverflowError("exponent " + std::to_string(e) +
                          " outside the representable range");
    return static_cast<Exponent>(e);
  }

  void same_size(const Monomial& other) const {
    if (other.mExps.size() != mExps.size())
      throw DimensionError("monomials over " + std::to_string(mExps.size()) +
                           " and " + std::to_string(other.mExps.size()) +
                           " variables");
  }

  std::vector<Exponent> mExps;
};

inline int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  if (m.size() != weights.size())
    throw DimensionError("monomial has " + std::to_string(m.size()) +
                         " exponents, ring has " +
                         std::to_string(weights.size()) + " variables");
  int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    d += int(m[i]) * weights[i];
  return d;
}

inline int weighted_degree(const Monomial& m, const RingSpec& ring) {
  return weighted_degree(m, ring.weights());
}

inline int standard_degree(const Monomial& m, const RingSpec& ring) {
  if (m.size() != ring.num_vars())
    throw DimensionError("monomial/ring size mismatch");
  return m.standard_degree();
}

enum class OrderTag {
  /// Weighted degree first, ties broken reverse-lexicographically from the
  /// last variable.
  weighted_degrevlex,
  /// Pure lexicographic with x_1 > x_2 > ... > x_n.
  lex
};

/// Three-way comparison of monomials in the given order; returns
/// std::strong_ordering::greater when a is the larger monomial.
inline std::strong_ordering monomial_compare(const Monomial& a,
                                             const Monomial& b,
                                             const std::vector<int>& weights,
                                             OrderTag order =
                                                 OrderTag::weighted_degrevlex) {
  if (a.size() != b.size() || a.size() != weights.size())
    throw DimensionError("monomial_compare: size mismatch");
  if (order == OrderTag::lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i])
        return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  int da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    da += int(a[i]) * weights[i];
    db += int(b[i]) * weights[i];
  }
  if (da != db)
    return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i])
      return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

inline std::strong_ordering monomial_compare(const Monomial& a,
                                             const Monomial& b,
                                             const RingSpec& ring,
                                             OrderTag order =
                                                 OrderTag::weighted_degrevlex) {
  return monomial_compare(a, b, ring.weights(), order);
}

/// Drops every monomial divisible by another one in the list; duplicates are
/// collapsed. Output is sorted lexicographically descending (x_1-exponent
/// first), the order used for generator lists throughout.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && gens[j].divides(gens[i]);
    if (!redundant)
      out.push_back(gens[i]);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

} // namespace nsk

namespace nsk {

/// All monomials of the given weighted degree, in lexicographically
/// descending order.
inline std::vector<Monomial> monomials_of_degree(const std::vector<int>& weights,
                                                 int degree) {
  std::vector<Monomial> out;
  if (degree < 0)
    return out;
  const std::size_t n = weights.size();
  std::vector<Exponent> exps(n, 0);
  // depth-first over variables, largest exponent of x_1 first
  auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == n) {
      if (remaining % weights[var] == 0) {
        exps[var] = static_cast<Exponent>(remaining / weights[var]);
        out.emplace_back(exps);
      }
      return;
    }
    for (int e = remaining / weights[var]; e >= 0; --e) {
      exps[var] = static_cast<Exponent>(e);
      self(self, var + 1, remaining - e * weights[var]);
    }
    exps[var] = 0;
  };
  if (n == 0) {
    if (degree == 0)
      out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

} // namespace nsk
