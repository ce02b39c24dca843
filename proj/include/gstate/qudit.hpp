#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstate/bit_matrix.hpp"
#include "gstate/entropy.hpp"
#include "gstate/partition.hpp"

namespace gstate {

/// Abelian group of generalized-Pauli shifts X(a) on n qudits of prime local
/// dimension d, held as a GF(d) basis. X|k> = |k+1 mod d>, so any nonzero
/// shift moves the reference |0..0> to an orthogonal basis state and the
/// zero-vacuum-overlap condition holds automatically.
class QuditShiftGroup {
public:
  QuditShiftGroup() = default;

  static QuditShiftGroup from_generators(const BitMatrix& rows) {
    if (rows.cols() == 0) {
      throw std::invalid_argument("QuditShiftGroup: qudit count must be positive");
    }
    QuditShiftGroup g;
    g.basis_ = rref(rows).matrix;
    g.d_ = rows.modulus();
    return g;
  }

  static QuditShiftGroup trivial(std::size_t n, uint32_t d) {
    QuditShiftGroup g;
    g.basis_ = BitMatrix(0, n, d);
    g.d_ = d;
    return g;
  }

  std::size_t n() const { return basis_.cols(); }
  std::size_t k() const { return basis_.rows(); }
  uint32_t d() const { return d_; }
  const BitMatrix& basis() const { return basis_; }

private:
  BitMatrix basis_{0, 0, 2};
  uint32_t d_ = 2;
};

/// The cyclic maximal example: G generated by the uniform shift on all n
/// qudits, |G| = d. Composite d is rejected with the rest of the GF(d) path.
inline QuditShiftGroup cyclic_group(std::size_t n, uint32_t d) {
  if (n < 1) {
    throw std::invalid_argument("cyclic_group: need at least one qudit");
  }
  BitMatrix row(1, n, d);  // rejects composite d
  for (std::size_t c = 0; c < n; c++) {
    row.set(0, c, 1);
  }
  return QuditShiftGroup::from_generators(row);
}

/// Entropy of the shift-group homogeneous state in bits:
/// (rank_d(M_A) + rank_d(M_B) - k) * log2 d.
inline EntropyReport qudit_entropy(const QuditShiftGroup& g, const Partition& p) {
  if (p.n() != g.n()) {
    throw std::invalid_argument("partition does not cover the group's qudits");
  }
  std::size_t rank_a = rank(g.basis().select_columns(p.side_a()));
  std::size_t rank_b = rank(g.basis().select_columns(p.side_b()));
  std::size_t dim_a = g.k() - rank_b;
  std::size_t dim_b = g.k() - rank_a;
  std::size_t quotient = g.k() - dim_a - dim_b;
  EntropyReport r;
  r.dim_a = dim_a;
  r.dim_b = dim_b;
  r.quotient_dim = quotient;
  r.log2_quotient = static_cast<double>(quotient) * std::log2(static_cast<double>(g.d()));
  r.entropy_bits = r.log2_quotient;
  r.saturated = true;
  return r;
}

}  // namespace gstate
