#pragma once

#include "koszul_check.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace nsk {

struct SweepRange {
  int max_vars = 0;
  int max_weight = 0;
  int min_e = 1;
  int max_e = 0;
  /// Overrides the per-case default bound when set.
  std::optional<int> bound;
};

struct SweepRow {
  std::vector<int> weights;
  int e = 0;
  int bound = 0;
  Verdict lin_acyclic = Verdict::inconclusive;
  Verdict gr_linear = Verdict::inconclusive;
  Verdict construction_match = Verdict::inconclusive;
  std::vector<std::int64_t> totals;
  double seconds = 0;

  bool all_hold() const {
    return lin_acyclic == Verdict::holds && gr_linear == Verdict::holds &&
           construction_match == Verdict::holds;
  }
  bool any_fails() const {
    return lin_acyclic == Verdict::fails || gr_linear == Verdict::fails ||
           construction_match == Verdict::fails;
  }
};

/// All weight multisets (non-decreasing tuples) with 1..maxVars entries in
/// 1..maxWeight, lexicographically ordered.
inline std::vector<std::vector<int>> weight_multisets(int maxVars, int maxWeight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int lo) -> void {
    if (!cur.empty())
      out.push_back(cur);
    if (int(cur.size()) == maxVars)
      return;
    for (int w = lo; w <= maxWeight; ++w) {
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
    }
  };
  if (maxVars > 0 && maxWeight > 0)
    rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<std::vector<int>, int>> sweep_cases(const SweepRange& r) {
  std::vector<std::pair<std::vector<int>, int>> cases;
  for (const auto& w : weight_multisets(r.max_vars, r.max_weight))
    for (int e = r.min_e; e <= r.max_e; ++e)
      cases.push_back({w, e});
  return cases;
}

inline SweepRow sweep_case(const std::vector<int>& weights, int e,
                           std::optional<int> bound,
                           std::uint32_t characteristic =
                               PrimeField::kDefaultCharacteristic) {
  auto start = std::chrono::steady_clock::now();
  RingSpec ring = RingSpec::with_weights(weights, characteristic);
  KoszulReport rep = bound ? koszul_verdict(ring, e, *bound) : koszul_verdict(ring, e);
  SweepRow row;
  row.weights = weights;
  row.e = e;
  row.bound = rep.bound;
  row.lin_acyclic = rep.lin_acyclic;
  row.gr_linear = rep.gr_linear;
  row.construction_match = rep.construction_match;
  row.totals = rep.gr_betti.totals();
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

/// Failures first, then lexicographic in weights and e.
inline void sort_rows(std::vector<SweepRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.all_hold() != b.all_hold())
      return !a.all_hold();
    if (a.weights != b.weights)
      return a.weights < b.weights;
    return a.e < b.e;
  });
}

inline std::vector<SweepRow> run_sweep(const SweepRange& r, unsigned workers = 1,
                                       std::uint32_t characteristic =
                                           PrimeField::kDefaultCharacteristic) {
  auto cases = sweep_cases(r);
  std::vector<SweepRow> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < cases.size();)
      rows[i] = sweep_case(cases[i].first, cases[i].second, r.bound, characteristic);
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back(work);
  }
  sort_rows(rows);
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::size_t width = 0;
  for (const SweepRow& r : rows)
    width = std::max(width, r.totals.size());
  std::ostringstream out;
  out << "vars,weights,e,bound,lin_acyclic,gr_linear,construction_match";
  for (std::size_t i = 0; i < width; ++i)
    out << ",beta_total_" << i;
  out << '\n';
  for (const SweepRow& r : rows) {
    out << r.weights.size() << ',';
    for (std::size_t t = 0; t < r.weights.size(); ++t)
      out << (t ? ";" : "") << r.weights[t];
    out << ',' << r.e << ',' << r.bound << ',' << to_string(r.lin_acyclic) << ','
        << to_string(r.gr_linear) << ',' << to_string(r.construction_match);
    for (std::size_t i = 0; i < width; ++i)
      out << ',' << (i < r.totals.size() ? r.totals[i] : 0);
    out << '\n';
  }
  return out.str();
}

} // namespace nsk
