#include "small_algebra.h"

#include <bit>

namespace teamwb::detail {

namespace {
constexpr std::uint64_t kBitMasks[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};
}  // namespace

SmallAlgebra::SmallAlgebra(std::size_t universe)
    : n_(universe),
      bits_(std::countr_zero(universe)),
      mask_(universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1) {}

TeamProposition SmallAlgebra::unpack(std::uint64_t w) const {
  TeamProposition p(n_, false);
  p.mutable_words()[0] = w & mask_;
  return p;
}

std::uint64_t SmallAlgebra::shift_union(std::uint64_t c, Team x) const {
  for (int i = 0; i < bits_; ++i) {
    if (!((x >> i) & 1)) continue;
    c = (c & kBitMasks[i]) | ((c & ~kBitMasks[i]) << (1 << i));
  }
  return c & mask_;
}

std::vector<std::uint64_t> SmallAlgebra::union_images(std::uint64_t c) const {
  std::vector<std::uint64_t> out(n_);
  for (std::size_t x = 0; x < n_; ++x) out[x] = shift_union(c, static_cast<Team>(x));
  return out;
}

std::uint64_t SmallAlgebra::union_product(std::uint64_t b, std::uint64_t c) const {
  std::uint64_t r = 0;
  for (; b != 0; b &= b - 1) r |= shift_union(c, static_cast<Team>(std::countr_zero(b)));
  return r;
}

std::uint64_t SmallAlgebra::union_product(std::uint64_t b, const std::uint64_t* images_of_c) const {
  std::uint64_t r = 0;
  for (; b != 0; b &= b - 1) r |= images_of_c[std::countr_zero(b)];
  return r;
}

}  // namespace teamwb::detail
