#pragma once

// Vectorised F_p row kernels. Every routine has a portable scalar reference
// and, on x86-64, an AVX2 variant; the dispatcher picks one at first use
// based on the running CPU. Both variants are bit-identical by contract and
// the test suite checks that directly.

#include <span>
#include <string_view>

#include "pact/modular.hpp"

namespace pact::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// y[i] <- (y[i] + a * x[i]) mod p. Inputs must already be reduced.
void axpy_mod(std::span<Residue> y, std::span<const Residue> x, Residue a, const PrimeModulus& p);

/// y[i] <- (a * y[i]) mod p.
void scale_mod(std::span<Residue> y, Residue a, const PrimeModulus& p);

/// Index of the first nonzero entry at or after `from`, or y.size().
std::size_t first_nonzero(std::span<const Residue> y, std::size_t from = 0);

/// ISA the dispatcher currently routes to.
Isa active_isa();
/// Best ISA the running CPU supports.
Isa detected_isa();
/// Pins dispatch to `isa` (clamped to what the CPU supports). Test hook.
void force_isa(Isa isa);

namespace scalar {
void axpy_mod(std::span<Residue> y, std::span<const Residue> x, Residue a, const PrimeModulus& p);
void scale_mod(std::span<Residue> y, Residue a, const PrimeModulus& p);
std::size_t first_nonzero(std::span<const Residue> y, std::size_t from);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PACT_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::span<Residue> y, std::span<const Residue> x, Residue a, const PrimeModulus& p);
void scale_mod(std::span<Residue> y, Residue a, const PrimeModulus& p);
std::size_t first_nonzero(std::span<const Residue> y, std::size_t from);
}  // namespace avx2
#endif

}  // namespace pact::kernels
