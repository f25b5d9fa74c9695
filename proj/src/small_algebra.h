#pragma once

#include <cstdint>
#include <vector>

#include "teamwb/semantics.h"

namespace teamwb::detail {

// Team propositions over at most 64 teams (contexts of up to two variables)
// packed into one machine word. Used by the pair and triple scans of the
// harness and the distributivity checks, where the general transformers
// would dominate the run time.
class SmallAlgebra {
 public:
  static bool fits(std::size_t universe) { return universe <= 64; }

  explicit SmallAlgebra(std::size_t universe);

  std::uint64_t pack(const TeamProposition& p) const { return p.words()[0]; }
  TeamProposition unpack(std::uint64_t w) const;

  // {Y ∪ x : Y ∈ c}
  std::uint64_t shift_union(std::uint64_t c, Team x) const;
  // Images of c under every team, indexed by team.
  std::vector<std::uint64_t> union_images(std::uint64_t c) const;
  std::uint64_t union_product(std::uint64_t b, std::uint64_t c) const;
  std::uint64_t union_product(std::uint64_t b, const std::uint64_t* images_of_c) const;

  std::size_t universe() const { return n_; }
  std::uint64_t full() const { return mask_; }

 private:
  std::size_t n_;
  int bits_;
  std::uint64_t mask_;
};

}  // namespace teamwb::detail
