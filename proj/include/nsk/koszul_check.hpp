#pragma once

#include "assoc_graded.hpp"
#include "betti.hpp"
#include "complex.hpp"
#include "construction.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "resolution.hpp"
#include "truncation.hpp"

#include <string>
#include <vector>

namespace nsk {

/// lin(F): the same ranks over the companion ring R, module i generated in
/// degree i, each entry replaced by its terms of standard degree 1.
/// Multidegrees are kept. F must be minimal.
inline GradedFreeComplex linear_part(const GradedFreeComplex& F) {
  PolyRing S(F.ring());
  RingSpec R = F.ring().companion();
  std::vector<FreeModuleSpec> modules;
  for (int i = 0; i <= F.length(); ++i) {
    const FreeModuleSpec& m = F.module(i);
    modules.emplace_back(std::vector<int>(m.rank(), i), m.multidegrees);
  }
  std::vector<PolyMatrix> maps;
  for (int i = 1; i <= F.length(); ++i) {
    const PolyMatrix& d = F.differential(i);
    PolyMatrix out(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        for (const Term& t : d.at(r, c).terms) {
          if (t.mono.is_one())
            throw ContractError("linear_part: complex is not minimal (unit in d_" +
                                std::to_string(i) + ")");
          if (t.mono.standard_degree() == 1)
            out.at(r, c).terms.push_back(t);
        }
      }
    maps.push_back(std::move(out));
  }
  return GradedFreeComplex(R, std::move(modules), std::move(maps));
}

enum class Verdict { holds, fails, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::holds:
    return "true";
  case Verdict::fails:
    return "false";
  case Verdict::inconclusive:
    return "inconclusive";
  }
  return "?";
}

struct LinAcyclicity {
  HomologyTable homology;
  /// H_i(L)_j = 0 for all i >= 1, j <= bound.
  bool acyclic = false;
  /// The bound covers the generator degree of every module of L.
  bool conclusive = false;
};

/// Homology of a linear complex up to the bound.
inline LinAcyclicity lin_acyclicity(const GradedFreeComplex& L, int bound) {
  LinAcyclicity r;
  r.homology = homology_dims(L, bound);
  r.acyclic = r.homology.acyclic();
  r.conclusive = bound >= L.length();
  return r;
}

/// Default degree bound for verdicts on S_{>=e}: e + n·max weight + n.
inline int default_bound(const RingSpec& ring, int e) {
  const int n = int(ring.num_vars());
  return std::max(e, 0) + n * ring.max_weight() + n;
}

/// Evidence and verdicts of the three pipelines on S_{>=e}, all restricted
/// to internal degrees <= bound.
struct KoszulReport {
  explicit KoszulReport(RingSpec r) : ring(std::move(r)) {}

  RingSpec ring;
  int e = 0;
  int bound = 0;
  std::vector<Monomial> generators;
  GradedFreeComplex resolution{ring};
  GradedFreeComplex lin{ring};
  BettiTable weighted_betti;
  BettiTable lin_betti;
  HomologyTable lin_homology;
  BettiTable gr_betti;
  BettiTable constructed;
  ConstructionTrace trace;
  Verdict lin_acyclic = Verdict::inconclusive;
  Verdict gr_linear = Verdict::inconclusive;
  Verdict construction_match = Verdict::inconclusive;
  std::vector<std::string> notes;

  bool all_hold() const {
    return lin_acyclic == Verdict::holds && gr_linear == Verdict::holds &&
           construction_match == Verdict::holds;
  }
  bool any_fails() const {
    return lin_acyclic == Verdict::fails || gr_linear == Verdict::fails ||
           construction_match == Verdict::fails;
  }
};

inline KoszulReport koszul_verdict(const RingSpec& ring, int e, int bound) {
  if (bound < 0)
    throw RangeError("koszul_verdict: negative bound");
  KoszulReport rep(ring);
  rep.e = e;
  rep.bound = bound;
  rep.generators = trunc_gens(ring, e);

  rep.resolution = resolve_monomial_ideal(ring, rep.generators);
  rep.weighted_betti = rep.resolution.betti_table();
  rep.lin = linear_part(rep.resolution);
  if (ComplexCheck c = check_complex(rep.lin); !c.ok())
    rep.notes.push_back("lin(F) is not a complex: " + c.message);
  LinAcyclicity la = lin_acyclicity(rep.lin, bound);
  rep.lin_homology = la.homology;
  rep.lin_betti = rep.lin.betti_table();
  if (!la.acyclic || !check_complex(rep.lin).ok())
    rep.lin_acyclic = Verdict::fails;
  else
    rep.lin_acyclic = la.conclusive ? Verdict::holds : Verdict::inconclusive;

  OrdContext ctx = OrdContext::ideal(ring, rep.generators);
  rep.gr_betti = gr_betti(ctx, bound);
  bool offDiagonal = !rep.gr_betti.is_diagonal();
  if (offDiagonal)
    rep.gr_linear = Verdict::fails;
  else
    rep.gr_linear = bound >= int(ring.num_vars()) ? Verdict::holds
                                                   : Verdict::inconclusive;

  auto [constructed, trace] = construct_gr_betti(ring.weights(), e);
  rep.constructed = std::move(constructed);
  rep.trace = std::move(trace);
  if (rep.constructed.restricted(bound) != rep.gr_betti)
    rep.construction_match = Verdict::fails;
  else
    rep.construction_match = rep.constructed.max_internal() <= bound
                                 ? Verdict::holds
                                 : Verdict::inconclusive;

  // cross-pipeline consistency
  if (rep.lin_acyclic == Verdict::holds &&
      rep.lin_betti.restricted(bound) != rep.gr_betti) {
    rep.lin_acyclic = Verdict::fails;
    rep.notes.push_back("lin(F) is acyclic but its Betti table " +
                        rep.lin_betti.to_string() + " differs from gr Betti " +
                        rep.gr_betti.to_string());
  }
  const std::int64_t rank0 =
      rep.resolution.length() >= 0 ? std::int64_t(rep.resolution.module(0).rank()) : 0;
  if (rank0 != std::int64_t(rep.generators.size()) ||
      rank0 != rep.gr_betti.at(0, 0)) {
    rep.lin_acyclic = Verdict::fails;
    rep.notes.push_back("rank F_0, generator count and dim gr_0 disagree");
  }
  return rep;
}

inline KoszulReport koszul_verdict(const RingSpec& ring, int e) {
  return koszul_verdict(ring, e, default_bound(ring, e));
}

} // namespace nsk
