#pragma once

#include "errors.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace nsk {

/// Graded Betti numbers β_{i,j}: homological degree i, internal degree j.
/// Only positive ranks are stored.
class BettiTable {
public:
  struct Entry {
    int i;
    int j;
    std::int64_t rank;
    bool operator==(const Entry&) const = default;
  };

  BettiTable() = default;
  BettiTable(std::initializer_list<Entry> entries) {
    for (const Entry& e : entries)
      add(e.i, e.j, e.rank);
  }

  void add(int i, int j, std::int64_t rank) {
    if (rank < 0)
      throw ContractError("betti table: negative rank");
    if (rank == 0)
      return;
    mRanks[{i, j}] += rank;
  }

  std::int64_t at(int i, int j) const {
    auto it = mRanks.find({i, j});
    return it == mRanks.end() ? 0 : it->second;
  }

  bool empty() const { return mRanks.empty(); }

  /// Entries sorted by (i, j).
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    for (const auto& [key, r] : mRanks)
      out.push_back({key.first, key.second, r});
    return out;
  }

  int max_homological() const {
    int m = -1;
    for (const auto& [key, r] : mRanks)
      m = std::max(m, key.first);
    return m;
  }

  int max_internal() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& [key, r] : mRanks)
      m = std::max(m, key.second);
    return m;
  }

  /// Σ_j β_{i,j} for i = 0..max_homological.
  std::vector<std::int64_t> totals() const {
    std::vector<std::int64_t> t(max_homological() + 1, 0);
    for (const auto& [key, r] : mRanks)
      if (key.first >= 0)
        t[key.first] += r;
    return t;
  }

  /// Linear: every entry sits at j = i (relative to generation in degree 0).
  bool is_diagonal() const {
    return std::all_of(mRanks.begin(), mRanks.end(),
                       [](const auto& kv) { return kv.first.first == kv.first.second; });
  }

  /// Entries with internal degree <= bound.
  BettiTable restricted(int bound) const {
    BettiTable out;
    for (const auto& [key, r] : mRanks)
      if (key.second <= bound)
        out.add(key.first, key.second, r);
    return out;
  }

  BettiTable& operator+=(const BettiTable& other) {
    for (const auto& [key, r] : other.mRanks)
      add(key.first, key.second, r);
    return *this;
  }

  bool operator==(const BettiTable&) const = default;

  /// Compact form "{(0,0,3),(1,1,2)}".
  std::string to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [key, r] : mRanks) {
      out << (first ? "" : ",") << '(' << key.first << ',' << key.second << ','
          << r << ')';
      first = false;
    }
    out << '}';
    return out.str();
  }

  /// Grid with one column per homological degree and one row per j - i.
  std::string to_grid() const {
    if (mRanks.empty())
      return "(zero)\n";
    int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
    for (const auto& [key, r] : mRanks) {
      lo = std::min(lo, key.second - key.first);
      hi = std::max(hi, key.second - key.first);
    }
    std::ostringstream out;
    const int width = 6;
    out << "       ";
    for (int i = 0; i <= max_homological(); ++i)
      out << pad(std::to_string(i), width);
    out << '\n';
    out << "total: ";
    for (std::int64_t t : totals())
      out << pad(std::to_string(t), width);
    out << '\n';
    for (int row = lo; row <= hi; ++row) {
      out << pad(std::to_string(row), 5) << ": ";
      for (int i = 0; i <= max_homological(); ++i) {
        std::int64_t r = at(i, i + row);
        out << pad(r == 0 ? "." : std::to_string(r), width);
      }
      out << '\n';
    }
    return out.str();
  }

private:
  static std::string pad(const std::string& s, int width) {
    return std::string(std::max<int>(0, width - int(s.size())), ' ') + s;
  }

  std::map<std::pair<int, int>, std::int64_t> mRanks;
};

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

/// Betti table of a totalization with the Koszul complex on `extraVars`
/// standard-degree variables: β'_{i,j} = Σ_t C(k,t)·β_{i-t,j-t}.
inline BettiTable convolve_koszul(const BettiTable& b, int extraVars) {
  if (extraVars < 0)
    throw RangeError("convolve_koszul: negative variable count");
  BettiTable out;
  for (const auto& e : b.entries())
    for (int t = 0; t <= extraVars; ++t)
      out.add(e.i + t, e.j + t, e.rank * binomial(extraVars, t));
  return out;
}

} // namespace nsk
