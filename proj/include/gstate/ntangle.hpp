#pragma once

#include <stdexcept>
#include <vector>

#include "gstate/bit_matrix.hpp"
#include "gstate/spin_flip_group.hpp"

namespace gstate {

struct ParityProfile {
  std::vector<int> generator_parities;  // after normalization, at most one odd entry
  int group_parity = 0;                 // 1 - p(G) = prod (1 - p_i)
};

/// Generator parities p_i = (a_i, a_i) mod 2 and the group parity p(G).
/// When several basis rows are odd the basis is re-normalized by multiplying
/// the later odd rows by the first odd one, so at most one reported parity
/// is odd; p(G) itself is basis-independent.
inline ParityProfile group_parity(const SpinFlipGroup& g) {
  std::vector<BitVec> rows;
  rows.reserve(g.k());
  for (std::size_t r = 0; r < g.k(); r++) {
    rows.push_back(g.basis().packed_row(r));
  }
  std::size_t first_odd = rows.size();
  for (std::size_t r = 0; r < rows.size(); r++) {
    if (rows[r].weight() % 2 == 1) {
      if (first_odd == rows.size()) {
        first_odd = r;
      } else {
        rows[r] ^= rows[first_odd];
      }
    }
  }
  ParityProfile out;
  out.generator_parities.reserve(rows.size());
  int product = 1;
  for (const BitVec& row : rows) {
    int p = static_cast<int>(row.weight() % 2);
    out.generator_parities.push_back(p);
    product *= 1 - p;
  }
  out.group_parity = 1 - product;
  return out;
}

/// Closed-form n-tangle of the G-homogeneous state:
/// tau_n = (1 - p(G)) * chi_G(X^n), i.e. 1 iff the group has even parity and
/// contains the all-ones flip. Defined for even n only.
inline int ntangle_closed_form(const SpinFlipGroup& g) {
  if (g.n() % 2 != 0) {
    throw std::invalid_argument("the n-tangle is not defined for odd n");
  }
  ParityProfile parity = group_parity(g);
  if (parity.group_parity != 0) {
    return 0;
  }
  BitVec all_ones(g.n());
  for (std::size_t i = 0; i < g.n(); i++) {
    all_ones.set(i, true);
  }
  return g.contains(all_ones) ? 1 : 0;
}

}  // namespace gstate
