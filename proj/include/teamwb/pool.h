#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "teamwb/semantics.h"

namespace teamwb {

struct PoolSignature {
  Context context;
  // Connectives to combine, including nullary ones (NE, bot, top, incl).
  // Atoms are always available.
  std::vector<Kind> connectives;
  int max_depth = 3;
  // Variables used as atoms: the first max_atoms of the context (0 = all).
  int max_atoms = 0;
  // Largest number of candidate formulas generated before giving up.
  std::size_t cap = 2'000'000;

  static PoolSignature standard(const Context& ctx, int depth = 3);
  std::string description() const;
};

struct Pool {
  PoolSignature signature;
  std::vector<Formula> formulas;
  std::vector<TeamProposition> denotations;

  std::size_t size() const { return formulas.size(); }
};

// All formulas of the signature up to the depth bound, one representative
// per denotation: depth levels are produced in order and, inside a level,
// candidates are ordered by node count and then rendered text; the first
// candidate with a new denotation is kept. Throws CapExceeded when the
// candidate count would pass the cap.
Pool enumerate_pool(const PoolSignature& sig);

// Parses "~,/\,\/,nabla" (ids or tokens).
std::vector<Kind> parse_connective_list(std::string_view list);

}  // namespace teamwb
