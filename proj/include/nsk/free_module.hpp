#pragma once

#include "errors.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nsk {

/// Graded free module ⊕ S·e_j. Twists are stored as generator degrees, so
/// S(-5)^2 ⊕ S(-6) has degrees {5, 5, 6}. For monomial data each generator
/// may also carry a multidegree (an exponent vector); when present every
/// element handled by the library is multihomogeneous with respect to it.
struct FreeModuleSpec {
  std::vector<int> degrees;
  std::optional<std::vector<Monomial>> multidegrees;

  FreeModuleSpec() = default;
  explicit FreeModuleSpec(std::vector<int> degs,
                          std::optional<std::vector<Monomial>> multi = {})
      : degrees(std::move(degs)), multidegrees(std::move(multi)) {
    if (multidegrees && multidegrees->size() != degrees.size())
      throw DimensionError("free module: multidegree count differs from rank");
  }

  std::size_t rank() const { return degrees.size(); }
  bool operator==(const FreeModuleSpec&) const = default;
};

struct ModuleTerm {
  std::size_t comp;
  Scalar coeff;
  Monomial mono;

  bool operator==(const ModuleTerm&) const = default;
};

/// Element of a free module: terms sorted strictly descending in the module
/// order of the FreeModule context that produced it.
struct FreeElement {
  std::vector<ModuleTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const ModuleTerm& lead() const { return terms.front(); }
  bool operator==(const FreeElement&) const = default;
};

/// Module order: position-over-term (e_0 > e_1 > ..., then weighted
/// degrevlex) unless a Schreyer frame is attached. Under a Schreyer frame
/// built from elements g_i of a lower module, m·e_i > n·e_j iff
/// m·lead(g_i) > n·lead(g_j) in the lower order, ties broken by i < j.
class ModuleOrder {
public:
  ModuleOrder() = default;

  /// Frame induced by lead terms (leadMonos[i]·e_{leadComps[i]}) in a module
  /// ordered by `lower`.
  static ModuleOrder schreyer(const ModuleOrder& lower,
                              const std::vector<Monomial>& leadMonos,
                              const std::vector<std::size_t>& leadComps) {
    if (leadMonos.size() != leadComps.size())
      throw DimensionError("schreyer frame: lead data size mismatch");
    auto frame = std::make_shared<Frame>();
    for (std::size_t i = 0; i < leadMonos.size(); ++i) {
      Entry entry;
      if (lower.mFrame) {
        const Entry& below = lower.mFrame->entries.at(leadComps[i]);
        entry.total = leadMonos[i] * below.total;
        entry.path = below.path;
      } else {
        entry.total = leadMonos[i];
        entry.path = {leadComps[i]};
      }
      entry.path.push_back(i);
      frame->entries.push_back(std::move(entry));
    }
    ModuleOrder order;
    order.mFrame = std::move(frame);
    return order;
  }

  bool is_schreyer() const { return mFrame != nullptr; }

  std::strong_ordering compare(const std::vector<int>& weights,
                               const Monomial& a, std::size_t ca,
                               const Monomial& b, std::size_t cb) const {
    if (!mFrame) {
      if (ca != cb)
        return cb <=> ca;
      return monomial_compare(a, b, weights);
    }
    const Entry& ea = mFrame->entries.at(ca);
    const Entry& eb = mFrame->entries.at(cb);
    if (ea.path[0] != eb.path[0])
      return eb.path[0] <=> ea.path[0];
    std::strong_ordering c = compare_products(weights, a, ea.total, b, eb.total);
    if (c != 0)
      return c;
    for (std::size_t k = 1; k < ea.path.size(); ++k)
      if (ea.path[k] != eb.path[k])
        return eb.path[k] <=> ea.path[k];
    return std::strong_ordering::equal;
  }

private:
  struct Entry {
    Monomial total;
    std::vector<std::size_t> path;
  };
  struct Frame {
    std::vector<Entry> entries;
  };

  // weighted degrevlex comparison of a1*a2 against b1*b2 without forming
  // the products
  static std::strong_ordering compare_products(const std::vector<int>& w,
                                               const Monomial& a1,
                                               const Monomial& a2,
                                               const Monomial& b1,
                                               const Monomial& b2) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      da += (int(a1[i]) + a2[i]) * w[i];
      db += (int(b1[i]) + b2[i]) * w[i];
    }
    if (da != db)
      return da <=> db;
    for (std::size_t i = w.size(); i-- > 0;) {
      int ea = int(a1[i]) + a2[i], eb = int(b1[i]) + b2[i];
      if (ea != eb)
        return eb <=> ea;
    }
    return std::strong_ordering::equal;
  }

  std::shared_ptr<const Frame> mFrame;
};

/// Arithmetic context for elements of one graded free module under one
/// module order.
class FreeModule {
public:
  FreeModule(PolyRing ring, FreeModuleSpec spec, ModuleOrder order = {})
      : mRing(std::move(ring)), mSpec(std::move(spec)),
        mOrder(std::move(order)) {}

  const PolyRing& ring() const { return mRing; }
  const FreeModuleSpec& spec() const { return mSpec; }
  const ModuleOrder& order() const { return mOrder; }
  const PrimeField& field() const { return mRing.field(); }
  std::size_t rank() const { return mSpec.rank(); }

  std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return mOrder.compare(mRing.spec().weights(), a.mono, a.comp, b.mono,
                          b.comp);
  }

  FreeElement basis(std::size_t comp) const {
    check_comp(comp);
    return {{{comp, 1, Monomial::one(mRing.num_vars())}}};
  }

  /// Sorts, merges and drops zero terms.
  FreeElement from_terms(std::vector<ModuleTerm> terms) const {
    for (const ModuleTerm& t : terms) {
      check_comp(t.comp);
      if (t.mono.size() != mRing.num_vars())
        throw DimensionError("free element term has wrong number of variables");
    }
    std::sort(terms.begin(), terms.end(),
              [&](const ModuleTerm& a, const ModuleTerm& b) {
                return compare(a, b) > 0;
              });
    FreeElement v;
    for (ModuleTerm& t : terms) {
      Scalar c = field().from_int(t.coeff);
      if (!v.terms.empty() && v.terms.back().comp == t.comp &&
          v.terms.back().mono == t.mono)
        v.terms.back().coeff = field().add(v.terms.back().coeff, c);
      else
        v.terms.push_back({t.comp, c, std::move(t.mono)});
    }
    std::erase_if(v.terms, [](const ModuleTerm& t) { return t.coeff == 0; });
    return v;
  }

  /// Column vector of polynomials (one per component) to element.
  FreeElement from_column(const std::vector<Polynomial>& column) const {
    if (column.size() != rank())
      throw DimensionError("column length differs from module rank");
    std::vector<ModuleTerm> terms;
    for (std::size_t c = 0; c < column.size(); ++c)
      for (const Term& t : column[c].terms)
        terms.push_back({c, t.coeff, t.mono});
    return from_terms(std::move(terms));
  }

  std::vector<Polynomial> to_column(const FreeElement& v) const {
    std::vector<std::vector<Term>> parts(rank());
    for (const ModuleTerm& t : v.terms)
      parts.at(t.comp).push_back({t.coeff, t.mono});
    std::vector<Polynomial> column;
    for (auto& p : parts)
      column.push_back(mRing.from_terms(std::move(p)));
    return column;
  }

  FreeElement add(const FreeElement& f, const FreeElement& g) const {
    return combine(f, g, 0, false);
  }
  FreeElement sub(const FreeElement& f, const FreeElement& g) const {
    return combine(f, g, 0, true);
  }

  /// f - c*g in one merge pass.
  FreeElement sub_scaled(const FreeElement& f, Scalar c,
                         const FreeElement& g) const {
    return combine(f, g, c, true);
  }

  FreeElement scale(const FreeElement& f, Scalar c) const {
    if (c == 0)
      return {};
    FreeElement r = f;
    for (ModuleTerm& t : r.terms)
      t.coeff = field().mul(t.coeff, c);
    return r;
  }

  FreeElement mul_term(const FreeElement& f, Scalar c, const Monomial& m) const {
    if (c == 0)
      return {};
    FreeElement r;
    r.terms.reserve(f.terms.size());
    for (const ModuleTerm& t : f.terms)
      r.terms.push_back({t.comp, field().mul(t.coeff, c), t.mono * m});
    return r;
  }

  int term_degree(const ModuleTerm& t) const {
    return weighted_degree(t.mono, mRing.spec()) + mSpec.degrees.at(t.comp);
  }

  /// Degree of every term, in term order.
  std::vector<int> term_degrees(const FreeElement& v) const {
    std::vector<int> out;
    for (const ModuleTerm& t : v.terms)
      out.push_back(term_degree(t));
    return out;
  }

  std::optional<int> homogeneous_degree(const FreeElement& v) const {
    if (v.is_zero())
      return std::nullopt;
    int d = term_degree(v.terms.front());
    for (const ModuleTerm& t : v.terms)
      if (term_degree(t) != d)
        return std::nullopt;
    return d;
  }

  /// Common multidegree of all terms, when the module carries multidegrees
  /// and the element is multihomogeneous.
  std::optional<Monomial> multidegree(const FreeElement& v) const {
    if (!mSpec.multidegrees || v.is_zero())
      return std::nullopt;
    Monomial m = v.terms.front().mono * (*mSpec.multidegrees)[v.terms.front().comp];
    for (const ModuleTerm& t : v.terms)
      if (t.mono * (*mSpec.multidegrees)[t.comp] != m)
        return std::nullopt;
    return m;
  }

  std::string to_string(const FreeElement& v) const {
    if (v.is_zero())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < v.terms.size(); ++i) {
      const ModuleTerm& t = v.terms[i];
      std::int64_t c = field().to_signed(t.coeff);
      out += i == 0 ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      std::int64_t a = c < 0 ? -c : c;
      if (a != 1)
        out += std::to_string(a) + "*";
      if (!t.mono.is_one())
        out += t.mono.to_string(mRing.spec().names()) + "*";
      out += "e" + std::to_string(t.comp);
    }
    return out;
  }

private:
  void check_comp(std::size_t comp) const {
    if (comp >= rank())
      throw DimensionError("component index " + std::to_string(comp) +
                           " out of range for rank " + std::to_string(rank()));
  }

  // f + g, f - g, or f - c*g when c != 0
  FreeElement combine(const FreeElement& f, const FreeElement& g, Scalar c,
                      bool subtract) const {
    const PrimeField& k = field();
    auto coeffOf = [&](Scalar a) {
      Scalar s = c == 0 ? a : k.mul(a, c);
      return subtract ? k.neg(s) : s;
    };
    FreeElement r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
      std::strong_ordering cmp =
          i == f.terms.size()   ? std::strong_ordering::less
          : j == g.terms.size() ? std::strong_ordering::greater
                                : compare(f.terms[i], g.terms[j]);
      if (cmp > 0) {
        r.terms.push_back(f.terms[i++]);
      } else if (cmp < 0) {
        ModuleTerm t = g.terms[j++];
        t.coeff = coeffOf(t.coeff);
        r.terms.push_back(std::move(t));
      } else {
        Scalar s = k.add(f.terms[i].coeff, coeffOf(g.terms[j].coeff));
        if (s != 0)
          r.terms.push_back({f.terms[i].comp, s, f.terms[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  PolyRing mRing;
  FreeModuleSpec mSpec;
  ModuleOrder mOrder;
};

} // namespace nsk
