#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tiltcat::engine {

using Elem = std::uint32_t;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Arithmetic modulo a prime p < 2^31. Elements are residues 0..p-1.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 101) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw std::invalid_argument("modulus is not a prime below 2^31: " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Elem reduce(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    v %= p;
    return static_cast<Elem>(v < 0 ? v + p : v);
  }
  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

}  // namespace tiltcat::engine
