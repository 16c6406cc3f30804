#include "pact/kernels.hpp"

namespace pact::kernels::scalar {

void axpy_mod(std::span<Residue> y, std::span<const Residue> x, Residue a, const PrimeModulus& p) {
  const std::uint64_t m = p.value();
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = static_cast<Residue>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % m);
  }
}

void scale_mod(std::span<Residue> y, Residue a, const PrimeModulus& p) {
  const std::uint64_t m = p.value();
  for (auto& v : y) v = static_cast<Residue>(static_cast<std::uint64_t>(a) * v % m);
}

std::size_t first_nonzero(std::span<const Residue> y, std::size_t from) {
  for (std::size_t i = from; i < y.size(); ++i) {
    if (y[i] != 0) return i;
  }
  return y.size();
}

}  // namespace pact::kernels::scalar
