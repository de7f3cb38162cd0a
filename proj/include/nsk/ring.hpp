#pragma once

#include "errors.hpp"
#include "field.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace nsk {

/// A positively graded polynomial ring k[x_1..x_n] over a prime field.
/// Variable i has degree weight(i) >= 1. The standard-graded companion
/// (all weights 1) is the ring gr_m(S) over which associated graded modules
/// live.
class RingSpec {
public:
  RingSpec(std::vector<std::string> names, std::vector<int> weights,
           std::uint32_t characteristic = PrimeField::kDefaultCharacteristic)
      : mNames(std::move(names)), mWeights(std::move(weights)),
        mField(characteristic) {
    if (mNames.size() != mWeights.size())
      throw DimensionError("ring: " + std::to_string(mNames.size()) +
                           " names but " + std::to_string(mWeights.size()) +
                           " weights");
    if (mWeights.empty())
      throw ContractError("ring: at least one variable is required");
    for (int w : mWeights)
      if (w < 1)
        throw ContractError("ring: variable weights must be positive, got " +
                            std::to_string(w));
    std::set<std::string> seen;
    for (const auto& name : mNames) {
      if (name.empty())
        throw ContractError("ring: empty variable name");
      if (!seen.insert(name).second)
        throw ContractError("ring: duplicate variable name '" + name + "'");
    }
  }

  /// Ring with the given weights and default names: x,y,z for up to three
  /// variables, x1..xn beyond.
  static RingSpec with_weights(
      std::vector<int> weights,
      std::uint32_t characteristic = PrimeField::kDefaultCharacteristic) {
    auto names = default_names(weights.size());
    return RingSpec(std::move(names), std::move(weights), characteristic);
  }

  static std::vector<std::string> default_names(std::size_t n) {
    static const char* kShort[] = {"x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
      names.push_back(n <= 3 ? std::string(kShort[i])
                             : "x" + std::to_string(i + 1));
    return names;
  }

  std::size_t num_vars() const { return mWeights.size(); }
  int weight(std::size_t i) const { return mWeights.at(i); }
  const std::vector<int>& weights() const { return mWeights; }
  const std::vector<std::string>& names() const { return mNames; }
  const std::string& name(std::size_t i) const { return mNames.at(i); }
  const PrimeField& field() const { return mField; }
  std::uint32_t characteristic() const { return mField.characteristic(); }

  int max_weight() const {
    return *std::max_element(mWeights.begin(), mWeights.end());
  }

  bool is_standard() const {
    return std::all_of(mWeights.begin(), mWeights.end(),
                       [](int w) { return w == 1; });
  }

  /// Same variables and field, every weight replaced by 1.
  RingSpec companion() const {
    return RingSpec(mNames, std::vector<int>(mWeights.size(), 1),
                    characteristic());
  }

  /// The subring on the listed variables, in the listed order.
  RingSpec subring(const std::vector<std::size_t>& vars) const {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (std::size_t v : vars) {
      names.push_back(name(v));
      weights.push_back(weight(v));
    }
    return RingSpec(std::move(names), std::move(weights), characteristic());
  }

  bool operator==(const RingSpec&) const = default;

private:
  std::vector<std::string> mNames;
  std::vector<int> mWeights;
  PrimeField mField;
};

} // namespace nsk
