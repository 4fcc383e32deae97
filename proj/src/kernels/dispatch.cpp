#include <algorithm>
#include <atomic>
#include <vector>

#include "octarep/kernels.hpp"

namespace octarep::kernels {

namespace {

struct Table {
  DotFn dot;
  void (*add_into)(std::span<std::int64_t>, std::span<const std::int64_t>);
};

constexpr Table kScalar{&scalar::dot, &scalar::add_into};
#ifdef OCTAREP_HAVE_AVX2
constexpr Table kAvx2{&avx2::dot, &avx2::add_into};
#endif

bool cpu_has_avx2() {
#if defined(OCTAREP_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Table& table_for(Isa isa) {
#ifdef OCTAREP_HAVE_AVX2
  if (isa == Isa::Avx2) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return table_for(active_isa()).dot(a, b);
}

void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  table_for(active_isa()).add_into(dst, src);
}

void convolve_with(DotFn dot_fn, std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                   std::span<std::int64_t> out) {
  const std::size_t p = out.size();
  const std::size_t na = std::min(a.size(), p);
  const std::size_t nb = std::min(b.size(), p);
  if (na == 0 || nb == 0) {
    std::fill(out.begin(), out.end(), 0);
    return;
  }
  // out[n] = <a[lo..hi], reversed b window>; reversing b once makes each
  // window contiguous.
  std::vector<std::int64_t> rb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(nb));
  std::reverse(rb.begin(), rb.end());
  for (std::size_t n = 0; n < p; ++n) {
    const std::size_t lo = n + 1 > nb ? n + 1 - nb : 0;
    const std::size_t hi = std::min(n, na - 1);
    if (lo > hi) {
      out[n] = 0;
      continue;
    }
    const std::size_t len = hi - lo + 1;
    // b index n - i for i = lo..hi maps to rb index nb-1-(n-i).
    const std::size_t rb_start = nb - 1 - (n - lo);
    out[n] = dot_fn(a.subspan(lo, len), std::span<const std::int64_t>(rb).subspan(rb_start, len));
  }
}

void convolve(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
              std::span<std::int64_t> out) {
  convolve_with(table_for(active_isa()).dot, a, b, out);
}

}  // namespace octarep::kernels
