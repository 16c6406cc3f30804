#include "pact/kernels.hpp"

#include <atomic>

namespace pact::kernels {

namespace {

Isa detect() {
#if defined(PACT_HAVE_AVX2_KERNELS)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = detect();
  return isa;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  selected().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<Residue> y, std::span<const Residue> x, Residue a, const PrimeModulus& p) {
  if (a == 0) return;
#if defined(PACT_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::axpy_mod(y, x, a, p);
#endif
  scalar::axpy_mod(y, x, a, p);
}

void scale_mod(std::span<Residue> y, Residue a, const PrimeModulus& p) {
#if defined(PACT_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::scale_mod(y, a, p);
#endif
  scalar::scale_mod(y, a, p);
}

std::size_t first_nonzero(std::span<const Residue> y, std::size_t from) {
#if defined(PACT_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::first_nonzero(y, from);
#endif
  return scalar::first_nonzero(y, from);
}

}  // namespace pact::kernels
