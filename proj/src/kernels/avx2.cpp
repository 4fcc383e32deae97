// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "octarep/kernels.hpp"

namespace octarep::kernels::avx2 {

namespace {

// Low 64 bits of a 64x64 product per lane. AVX2 has no vpmullq, so build it
// from three 32x32->64 multiplies: lo*lo + ((lo*hi + hi*lo) << 32).
inline __m256i mullo_epi64(__m256i a, __m256i b) {
  __m256i a_hi = _mm256_srli_epi64(a, 32);
  __m256i b_hi = _mm256_srli_epi64(b, 32);
  __m256i lo = _mm256_mul_epu32(a, b);
  __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(a, b_hi), _mm256_mul_epu32(a_hi, b));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline std::uint64_t hsum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  const std::size_t n = a.size();
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i + 4));
    __m256i y1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i + 4));
    acc0 = _mm256_add_epi64(acc0, mullo_epi64(x0, y0));
    acc1 = _mm256_add_epi64(acc1, mullo_epi64(x1, y1));
  }
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    acc0 = _mm256_add_epi64(acc0, mullo_epi64(x, y));
  }
  std::uint64_t acc = hsum(_mm256_add_epi64(acc0, acc1));
  for (; i < n; ++i) acc += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[i]);
  return static_cast<std::int64_t>(acc);
}

void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    _mm256_storeu_si256(d, _mm256_add_epi64(_mm256_loadu_si256(d), s));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       static_cast<std::uint64_t>(src[i]));
}

}  // namespace octarep::kernels::avx2
