#pragma once

// Integer inner loops behind the exact code paths.
//
// All arithmetic wraps modulo 2^64 so that every variant is bit-identical;
// callers bound their inputs so that wrapping never actually happens.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace octarep::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

// Best variant this CPU supports (and this build contains).
Isa detected_isa();
// Variant currently routed to by the dispatching entry points.
Isa active_isa();
// Force a variant; returns false (and changes nothing) if unsupported.
bool set_active_isa(Isa isa);

// sum_i a[i] * b[i], a.size() == b.size().
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
// dst[i] += src[i], dst.size() == src.size().
void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src);
// out[n] = sum_{i<=n} a[i] * b[n-i] for n < out.size(); missing entries read as 0.
void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out);

namespace scalar {
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src);
}  // namespace scalar

#ifdef OCTAREP_HAVE_AVX2
namespace avx2 {
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src);
}  // namespace avx2
#endif

// Convolution built on an explicit dot kernel, so both variants can be
// exercised regardless of the active one.
using DotFn = std::int64_t (*)(std::span<const std::int64_t>, std::span<const std::int64_t>);
void convolve_with(DotFn dot_fn, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                   std::span<std::int64_t> out);

}  // namespace octarep::kernels
