#include "octarep/kernels.hpp"

namespace octarep::kernels::scalar {

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[i]);
  return static_cast<std::int64_t>(acc);
}

void add_into(std::span<std::int64_t> dst, std::span<const std::int64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<std::int64_t>(static_cast<std::uint64_t>(dst[i]) +
                                       static_cast<std::uint64_t>(src[i]));
}

}  // namespace octarep::kernels::scalar
