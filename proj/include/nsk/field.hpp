#pragma once

#include "errors.hpp"

#include <cstdint>
#include <string>

namespace nsk {

/// Elements of a prime field are stored as their canonical representative
/// in [0, p).
using Scalar = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  if (n % 2 == 0)
    return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0)
      return false;
  return true;
}

/// The prime field Z/p for a prime p < 2^31.
class PrimeField {
public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic) : mP(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw ContractError("characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const { return mP; }

  Scalar from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(mP);
    if (r < 0)
      r += mP;
    return static_cast<Scalar>(r);
  }

  /// Symmetric representative in (-p/2, p/2], for display.
  std::int64_t to_signed(Scalar a) const {
    return a > mP / 2 ? static_cast<std::int64_t>(a) - mP
                      : static_cast<std::int64_t>(a);
  }

  Scalar add(Scalar a, Scalar b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Scalar>(s >= mP ? s - mP : s);
  }
  Scalar sub(Scalar a, Scalar b) const {
    return a >= b ? a - b : static_cast<Scalar>(std::uint64_t(a) + mP - b);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : mP - a; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t(a) * b) % mP);
  }

  Scalar inv(Scalar a) const {
    if (a == 0)
      throw ContractError("division by zero in prime field");
    std::int64_t t = 0, newT = 1;
    std::int64_t r = mP, newR = a;
    while (newR != 0) {
      std::int64_t q = r / newR;
      std::int64_t tmp = t - q * newT;
      t = newT;
      newT = tmp;
      tmp = r - q * newR;
      r = newR;
      newR = tmp;
    }
    return from_int(t);
  }

  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t mP;
};

} // namespace nsk
