#pragma once

#include "field.hpp"
#include "monomial.hpp"
#include "ring.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace nsk {

struct Term {
  Scalar coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

/// A polynomial in canonical form: terms strictly descending in weighted
/// degrevlex, no zero coefficients. Only PolyRing produces canonical
/// polynomials; `terms` is public for read access.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool operator==(const Polynomial&) const = default;
};

/// Arithmetic context for polynomials over a RingSpec: coefficient field and
/// monomial order live here, polynomials themselves are plain values.
class PolyRing {
public:
  explicit PolyRing(RingSpec spec) : mSpec(std::move(spec)) {}

  const RingSpec& spec() const { return mSpec; }
  const PrimeField& field() const { return mSpec.field(); }
  std::size_t num_vars() const { return mSpec.num_vars(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return monomial_compare(a, b, mSpec.weights());
  }

  Polynomial zero() const { return {}; }

  Polynomial constant(std::int64_t c) const {
    return monomial(c, Monomial::one(num_vars()));
  }

  Polynomial monomial(std::int64_t c, Monomial m) const {
    Scalar s = field().from_int(c);
    Polynomial p;
    if (s != 0)
      p.terms.push_back({s, std::move(m)});
    return p;
  }

  Polynomial variable(std::size_t i) const {
    return monomial(1, Monomial::variable(num_vars(), i));
  }

  /// Builds a canonical polynomial from arbitrary terms: sorts, merges equal
  /// monomials and drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const {
    for (const Term& t : terms)
      if (t.mono.size() != num_vars())
        throw DimensionError("polynomial term has wrong number of variables");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return compare(a.mono, b.mono) > 0;
    });
    Polynomial p;
    for (Term& t : terms) {
      Scalar c = field().from_int(t.coeff);
      if (!p.terms.empty() && p.terms.back().mono == t.mono)
        p.terms.back().coeff = field().add(p.terms.back().coeff, c);
      else
        p.terms.push_back({c, std::move(t.mono)});
    }
    std::erase_if(p.terms, [](const Term& t) { return t.coeff == 0; });
    return p;
  }

  bool is_canonical(const Polynomial& f) const {
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      if (f.terms[i].coeff == 0 || f.terms[i].coeff >= mSpec.characteristic())
        return false;
      if (i > 0 && compare(f.terms[i - 1].mono, f.terms[i].mono) <= 0)
        return false;
    }
    return true;
  }

  Polynomial add(const Polynomial& f, const Polynomial& g) const {
    return combine(f, g, false);
  }
  Polynomial sub(const Polynomial& f, const Polynomial& g) const {
    return combine(f, g, true);
  }

  Polynomial neg(const Polynomial& f) const { return scale(f, field().neg(1)); }

  Polynomial scale(const Polynomial& f, Scalar c) const {
    if (c == 0)
      return {};
    Polynomial r = f;
    for (Term& t : r.terms)
      t.coeff = field().mul(t.coeff, c);
    return r;
  }

  /// c * m * f; order-preserving since the monomial order is multiplicative.
  Polynomial mul_term(const Polynomial& f, Scalar c, const Monomial& m) const {
    if (c == 0)
      return {};
    Polynomial r;
    r.terms.reserve(f.terms.size());
    for (const Term& t : f.terms)
      r.terms.push_back({field().mul(t.coeff, c), t.mono * m});
    return r;
  }

  Polynomial mul(const Polynomial& f, const Polynomial& g) const {
    Polynomial r;
    for (const Term& t : g.terms)
      r = add(r, mul_term(f, t.coeff, t.mono));
    return r;
  }

  /// Weighted degree of a homogeneous polynomial; nullopt for zero or
  /// inhomogeneous input.
  std::optional<int> homogeneous_degree(const Polynomial& f) const {
    if (f.is_zero())
      return std::nullopt;
    int d = weighted_degree(f.terms.front().mono, mSpec);
    for (const Term& t : f.terms)
      if (weighted_degree(t.mono, mSpec) != d)
        return std::nullopt;
    return d;
  }

  /// Nonzero constant (a unit of the polynomial ring).
  bool is_unit(const Polynomial& f) const {
    return f.terms.size() == 1 && f.terms.front().mono.is_one();
  }

  std::string to_string(const Polynomial& f) const {
    if (f.is_zero())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
      std::int64_t c = field().to_signed(f.terms[i].coeff);
      const Monomial& m = f.terms[i].mono;
      if (i > 0)
        out += c < 0 ? " - " : " + ";
      else if (c < 0)
        out += "-";
      std::int64_t a = c < 0 ? -c : c;
      if (m.is_one())
        out += std::to_string(a);
      else {
        if (a != 1)
          out += std::to_string(a) + "*";
        out += m.to_string(mSpec.names());
      }
    }
    return out;
  }

private:
  Polynomial combine(const Polynomial& f, const Polynomial& g,
                     bool subtract) const {
    Polynomial r;
    r.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() || j < g.terms.size()) {
      std::strong_ordering c =
          i == f.terms.size()   ? std::strong_ordering::less
          : j == g.terms.size() ? std::strong_ordering::greater
                                : compare(f.terms[i].mono, g.terms[j].mono);
      if (c > 0) {
        r.terms.push_back(f.terms[i++]);
      } else if (c < 0) {
        Term t = g.terms[j++];
        if (subtract)
          t.coeff = field().neg(t.coeff);
        r.terms.push_back(std::move(t));
      } else {
        Scalar s = subtract ? field().sub(f.terms[i].coeff, g.terms[j].coeff)
                            : field().add(f.terms[i].coeff, g.terms[j].coeff);
        if (s != 0)
          r.terms.push_back({s, f.terms[i].mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingSpec mSpec;
};

} // namespace nsk
