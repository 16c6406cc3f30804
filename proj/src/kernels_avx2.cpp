#include "pact/kernels.hpp"

#if defined(PACT_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace pact::kernels::avx2 {

namespace {

// Shoup modular multiply on eight 32-bit lanes: returns a*x mod p given
// ap = floor(a*2^32/p). Valid for p < 2^31 and x < p.
__attribute__((target("avx2"))) inline __m256i mulmod(__m256i x, __m256i va, __m256i vap, __m256i vp) {
  const __m256i prod_even = _mm256_mul_epu32(x, vap);
  const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), vap);
  const __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(prod_even, 32), prod_odd, 0xAA);
  __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(x, va), _mm256_mullo_epi32(q, vp));
  // r in [0, 2p)
  return _mm256_min_epu32(r, _mm256_sub_epi32(r, vp));
}

}  // namespace

__attribute__((target("avx2"))) void axpy_mod(std::span<Residue> y, std::span<const Residue> x, Residue a,
                                              const PrimeModulus& p) {
  const std::size_t n = y.size();
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vap = _mm256_set1_epi32(static_cast<int>(p.shoup(a)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p.value()));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i s = _mm256_add_epi32(mulmod(vx, va, vap, vp), vy);
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), s);
  }
  if (i < n) scalar::axpy_mod(y.subspan(i), x.subspan(i), a, p);
}

__attribute__((target("avx2"))) void scale_mod(std::span<Residue> y, Residue a, const PrimeModulus& p) {
  const std::size_t n = y.size();
  const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
  const __m256i vap = _mm256_set1_epi32(static_cast<int>(p.shoup(a)));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p.value()));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), mulmod(vy, va, vap, vp));
  }
  if (i < n) scalar::scale_mod(y.subspan(i), a, p);
}

__attribute__((target("avx2"))) std::size_t first_nonzero(std::span<const Residue> y, std::size_t from) {
  const std::size_t n = y.size();
  std::size_t i = from;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    const int eq = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, zero)));
    if (eq != 0xFF) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xFF));
  }
  return scalar::first_nonzero(y, i);
}

}  // namespace pact::kernels::avx2

#endif
