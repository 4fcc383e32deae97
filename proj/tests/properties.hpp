#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance
// binary. Every suite is driven by an explicit seed.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "octarep/arith.hpp"
#include "octarep/kernels.hpp"
#include "octarep/series.hpp"

namespace octarep::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2024;

struct PropertyResult {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
  void check(bool cond, const std::string& what) {
    ++cases;
    if (!cond && failures.size() < 20) failures.push_back(what);
  }
};

// Small rationals, or large integers so mul() takes the int64 kernel path.
inline QSeries random_series(std::mt19937_64& rng, std::size_t prec, bool integral) {
  std::vector<Rational> c(prec);
  std::uniform_int_distribution<long> small(-9, 9), den(1, 7), big(-1'000'000'000L, 1'000'000'000L);
  for (auto& x : c) {
    if (integral)
      x = Rational(big(rng));
    else {
      x = Rational(small(rng), den(rng));
      x.canonicalize();
    }
  }
  return QSeries(std::move(c));
}

inline QSeries one_series(std::size_t prec) {
  std::vector<Rational> c(prec);
  c[0] = 1;
  return QSeries(std::move(c));
}

inline PropertyResult series_ring_axioms(std::uint64_t seed = kSeed, int trials = 60) {
  PropertyResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 48);
  for (int t = 0; t < trials; ++t) {
    const std::size_t p = len(rng);
    const bool integral = t % 2 == 0;
    const QSeries f = random_series(rng, p, integral), g = random_series(rng, p, integral),
                  h = random_series(rng, p, !integral);
    const std::string tag = " (trial " + std::to_string(t) + ")";
    r.check(f + g == g + f, "add commutes" + tag);
    r.check((f + g) + h == f + (g + h), "add associates" + tag);
    r.check(f - f == QSeries(p), "additive inverse" + tag);
    r.check(f + (-f) == QSeries(p), "negate" + tag);
    r.check(f * g == g * f, "mul commutes" + tag);
    r.check((f * g) * h == f * (g * h), "mul associates" + tag);
    r.check(f * (g + h) == f * g + f * h, "distributes" + tag);
    r.check(f * one_series(p) == f, "unit" + tag);
    r.check(f * g == mul_reference(f, g), "kernel product equals GMP product" + tag);
    r.check(scale(f, Rational(3, 2)) == Rational(3, 2) * f, "scale" + tag);
  }
  return r;
}

inline PropertyResult dilation_composition(std::uint64_t seed = kSeed, int trials = 60) {
  PropertyResult r;
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<std::size_t> len(1, 80), dil(1, 6);
  for (int t = 0; t < trials; ++t) {
    const QSeries f = random_series(rng, len(rng), false);
    const std::size_t a = dil(rng), b = dil(rng);
    const std::string tag = " a=" + std::to_string(a) + " b=" + std::to_string(b);
    r.check(dilate(dilate(f, a), b) == dilate(f, a * b), "dilate composes" + tag);
    r.check(dilate(f, 1) == f, "dilate by 1" + tag);
    bool stretched = true;
    const QSeries d = dilate(f, a);
    for (std::size_t n = 0; n < f.prec(); ++n) stretched = stretched && d[n] == (n % a ? Rational(0) : f[n / a]);
    r.check(stretched, "dilate stretches exponents" + tag);
  }
  return r;
}

inline PropertyResult twist_involution(std::uint64_t seed = kSeed, int trials = 40) {
  PropertyResult r;
  std::mt19937_64 rng(seed + 2);
  std::uniform_int_distribution<std::size_t> len(2, 80);
  const auto catalog = character_catalog();
  for (int t = 0; t < trials; ++t) {
    const QSeries f = random_series(rng, len(rng), false);
    for (const auto& chi : catalog) {
      const QSeries tt = twist(twist(f, chi), chi);
      bool ok = tt[0] == 0;
      for (std::size_t n = 1; n < f.prec(); ++n) {
        const bool coprime = std::gcd<std::int64_t>(static_cast<std::int64_t>(n), chi.modulus) == 1;
        ok = ok && tt[n] == (coprime ? f[n] : Rational(0));
      }
      r.check(ok, "twist involutive on coprime n for " + chi.label);
    }
  }
  return r;
}

inline PropertyResult character_properties(std::uint64_t seed = kSeed, int pairs = 10000) {
  PropertyResult r;
  std::mt19937_64 rng(seed + 3);
  std::uniform_int_distribution<std::int64_t> val(-100000, 100000);
  for (const auto& chi : character_catalog()) {
    bool mult = true, period = true;
    for (int i = 0; i < pairs; ++i) {
      const std::int64_t m = val(rng), n = val(rng);
      mult = mult && chi(m * n) == chi(m) * chi(n);
      period = period && chi(n + chi.modulus) == chi(n);
    }
    r.check(mult, chi.label + " completely multiplicative");
    r.check(period, chi.label + " periodic");
    r.check(chi(-1) == (chi.parity == Parity::Even ? 1 : -1), chi.label + " parity");
    r.check(chi.is_trivial() || chi(0) == 0, chi.label + " vanishes at 0");
  }
  return r;
}

// Wrapping reference arithmetic (unsigned, so overflow is defined).
inline std::int64_t naive_dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[i]);
  return static_cast<std::int64_t>(s);
}

inline PropertyResult kernel_equivalence(std::uint64_t seed = kSeed, int trials = 300) {
  PropertyResult r;
  std::mt19937_64 rng(seed + 4);
  std::uniform_int_distribution<std::size_t> len(0, 67);
  std::uniform_int_distribution<std::int64_t> small(-1000, 1000);
  for (int t = 0; t < trials; ++t) {
    const std::size_t n = len(rng);
    const bool full = t % 3 == 0;  // full-range values exercise wraparound
    std::vector<std::int64_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = full ? static_cast<std::int64_t>(rng()) : small(rng);
      b[i] = full ? static_cast<std::int64_t>(rng()) : small(rng);
    }
    const std::int64_t want = naive_dot(a, b);
    r.check(kernels::scalar::dot(a, b) == want, "scalar dot n=" + std::to_string(n));
    std::vector<std::int64_t> sum(a);
    for (std::size_t i = 0; i < n; ++i)
      sum[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(a[i]) + static_cast<std::uint64_t>(b[i]));
    std::vector<std::int64_t> d1(a);
    kernels::scalar::add_into(d1, b);
    r.check(d1 == sum, "scalar add_into n=" + std::to_string(n));

    std::vector<std::int64_t> conv(n), got(n);
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t s = 0;
      for (std::size_t i = 0; i <= k; ++i) s += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[k - i]);
      conv[k] = static_cast<std::int64_t>(s);
    }
    kernels::convolve_with(&kernels::scalar::dot, a, b, got);
    r.check(got == conv, "scalar convolve n=" + std::to_string(n));
#ifdef OCTAREP_HAVE_AVX2
    if (kernels::detected_isa() == kernels::Isa::Avx2) {
      r.check(kernels::avx2::dot(a, b) == want, "avx2 dot n=" + std::to_string(n));
      std::vector<std::int64_t> d2(a);
      kernels::avx2::add_into(d2, b);
      r.check(d2 == sum, "avx2 add_into n=" + std::to_string(n));
      kernels::convolve_with(&kernels::avx2::dot, a, b, got);
      r.check(got == conv, "avx2 convolve n=" + std::to_string(n));
    }
#endif
  }
  return r;
}

}  // namespace octarep::testing
