#include "pact/modular.hpp"

#include <sstream>

#include "pact/error.hpp"

namespace pact {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  p_ = static_cast<Residue>(p);
}

Residue PrimeModulus::pow(Residue a, std::uint64_t e) const {
  Residue result = 1 % p_;
  Residue base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeModulus::inv(Residue a) const {
  if (a % p_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

Residue PrimeModulus::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace pact
