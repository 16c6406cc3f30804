#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pact {

/// A residue modulo the active prime, always kept in [0, p).
using Residue = std::uint32_t;

/// Coefficient vector over F_p. Elements of an algebra are stored this way.
using Vector = std::vector<Residue>;

/// A prime modulus 2 <= p < 2^31. Primality is checked on construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  Residue value() const { return p_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue a, std::uint64_t e) const;
  /// Multiplicative inverse; a must be nonzero.
  Residue inv(Residue a) const;
  /// Reduces an arbitrary signed integer into [0, p).
  Residue reduce(std::int64_t v) const;

  /// Shoup precomputation floor(a * 2^32 / p) used by the vector kernels.
  std::uint32_t shoup(Residue a) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) << 32) / p_);
  }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) { return a.p_ == b.p_; }

 private:
  Residue p_;
};

bool is_prime(std::uint64_t n);

std::string to_string(const Vector& v);

}  // namespace pact
