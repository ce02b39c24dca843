#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gstate/bit_matrix.hpp"
#include "gstate/partition.hpp"
#include "gstate/pauli.hpp"

namespace gstate {

/// Abelian group of X-type flips on n qubits, held as the reduced
/// row-echelon basis of its additive vector group in Z_2^n. |G| = 2^k.
class SpinFlipGroup {
public:
  SpinFlipGroup() = default;

  /// Builds the group from any generating set; dependent rows are absorbed.
  static SpinFlipGroup from_generators(const BitMatrix& rows) {
    if (rows.cols() == 0) {
      throw std::invalid_argument("SpinFlipGroup: qubit count must be positive");
    }
    if (rows.modulus() != 2) {
      throw std::invalid_argument("SpinFlipGroup: generators must be over GF(2)");
    }
    SpinFlipGroup g;
    g.basis_ = rref(rows).matrix;
    return g;
  }

  static SpinFlipGroup from_strings(const std::vector<std::string>& rows, std::size_t n) {
    if (rows.empty()) {
      return trivial(n);
    }
    return from_generators(BitMatrix::from_strings(rows, 2));
  }

  static SpinFlipGroup trivial(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("SpinFlipGroup: qubit count must be positive");
    }
    SpinFlipGroup g;
    g.basis_ = BitMatrix(0, n, 2);
    return g;
  }

  std::size_t n() const { return basis_.cols(); }
  std::size_t k() const { return basis_.rows(); }
  const BitMatrix& basis() const { return basis_; }

  bool contains(const BitVec& v) const { return in_row_space(basis_, v); }

  bool operator==(const SpinFlipGroup& o) const { return basis_ == o.basis_; }

  /// All 2^k element vectors, in lexicographic order. Test/oracle scale only.
  std::vector<BitVec> elements(std::size_t max_log2 = 24) const {
    if (k() > max_log2) {
      throw std::runtime_error("group too large to enumerate: 2^" + std::to_string(k()));
    }
    std::vector<BitVec> out;
    out.reserve(std::size_t{1} << k());
    BitVec current(n());
    enumerate_rec(0, current, out);
    std::sort(out.begin(), out.end(),
              [](const BitVec& a, const BitVec& b) { return a.lex_less(b); });
    return out;
  }

  /// Basis of the subgroup supported entirely on the given sites.
  BitMatrix restricted_subgroup_basis(const std::vector<std::size_t>& support_sites) const {
    std::vector<std::size_t> other;
    std::vector<bool> in_support(n(), false);
    for (std::size_t s : support_sites) {
      in_support[s] = true;
    }
    for (std::size_t i = 0; i < n(); i++) {
      if (!in_support[i]) {
        other.push_back(i);
      }
    }
    // u = lambda . basis vanishes outside the support iff lambda lies in the
    // kernel of the restriction to the complementary columns.
    BitMatrix restriction = transpose(basis_.select_columns(other));
    BitMatrix lambdas = kernel_basis(restriction);
    BitMatrix out(0, n(), 2);
    for (std::size_t r = 0; r < lambdas.rows(); r++) {
      BitVec u(n());
      for (std::size_t j = 0; j < k(); j++) {
        if (lambdas.get(r, j)) {
          u ^= basis_.packed_row(j);
        }
      }
      out.append_row(u);
    }
    return rref(out).matrix;
  }

  struct SubgroupDims {
    std::size_t dim_a;
    std::size_t dim_b;
  };

  /// log2 |G_A| and log2 |G_B| via the rank identity dim G_A = k - rank(M_B).
  SubgroupDims subgroup_dims(const Partition& p) const {
    check_partition(p);
    std::size_t rank_a = rank(basis_.select_columns(p.side_a()));
    std::size_t rank_b = rank(basis_.select_columns(p.side_b()));
    return {k() - rank_b, k() - rank_a};
  }

  /// log2 |G_AB| = k - dim G_A - dim G_B.
  std::size_t quotient_order_log2(const Partition& p) const {
    SubgroupDims d = subgroup_dims(p);
    return k() - d.dim_a - d.dim_b;
  }

  /// One vector per coset of G_A x G_B in G: the lexicographically smallest
  /// member of each coset, listed in lexicographic order.
  std::vector<BitVec> coset_representatives(const Partition& p,
                                            std::size_t max_log2 = 24) const {
    check_partition(p);
    BitMatrix sub_a = restricted_subgroup_basis(p.side_a());
    BitMatrix sub_b = restricted_subgroup_basis(p.side_b());
    BitMatrix product(0, n(), 2);
    for (std::size_t r = 0; r < sub_a.rows(); r++) {
      product.append_row(sub_a.packed_row(r));
    }
    for (std::size_t r = 0; r < sub_b.rows(); r++) {
      product.append_row(sub_b.packed_row(r));
    }
    RrefResult u = rref(product);

    // Complement basis of the product subgroup inside the full group.
    std::vector<BitVec> complement;
    BitMatrix span = u.matrix;
    for (std::size_t r = 0; r < k(); r++) {
      if (!in_row_space(span, basis_.packed_row(r))) {
        complement.push_back(basis_.packed_row(r));
        span.append_row(basis_.packed_row(r));
      }
    }
    std::size_t q = complement.size();
    if (q > max_log2) {
      throw std::runtime_error("quotient too large to enumerate: 2^" + std::to_string(q));
    }
    std::vector<BitVec> reps;
    reps.reserve(std::size_t{1} << q);
    for (std::size_t mask = 0; mask < (std::size_t{1} << q); mask++) {
      BitVec v(n());
      for (std::size_t j = 0; j < q; j++) {
        if ((mask >> j) & 1) {
          v ^= complement[j];
        }
      }
      reps.push_back(coset_minimum(v, u));
    }
    std::sort(reps.begin(), reps.end(),
              [](const BitVec& a, const BitVec& b) { return a.lex_less(b); });
    return reps;
  }

  /// Full n-generator stabilizer X(A) . Z(A_perp): k pure-X rows from the
  /// basis plus n-k pure-Z rows from its kernel, all with + signs.
  StabilizerGroup stabilizer_completion() const {
    std::vector<PauliString> gens;
    gens.reserve(n());
    for (std::size_t r = 0; r < k(); r++) {
      gens.emplace_back(basis_.packed_row(r), BitVec(n()), 0);
    }
    BitMatrix zpart = kernel_basis(basis_);
    for (std::size_t r = 0; r < zpart.rows(); r++) {
      gens.emplace_back(BitVec(n()), zpart.packed_row(r), 0);
    }
    return StabilizerGroup(std::move(gens), n());
  }

  /// Audited zero-vacuum-expectation condition: a spin flip X(a) maps the
  /// reference |0..0> to the basis state |a>, so any nonidentity one-side
  /// restriction has zero overlap with the reference. The check verifies the
  /// basis encodes no identity row, which is the only way the argument could
  /// break down.
  bool zerovev_holds() const {
    for (std::size_t r = 0; r < k(); r++) {
      if (basis_.packed_row(r).is_zero()) {
        return false;
      }
    }
    return true;
  }

private:
  void check_partition(const Partition& p) const {
    if (p.n() != n()) {
      throw std::invalid_argument("partition does not cover the group's qubits");
    }
  }

  void enumerate_rec(std::size_t row, BitVec& current, std::vector<BitVec>& out) const {
    if (row == k()) {
      out.push_back(current);
      return;
    }
    enumerate_rec(row + 1, current, out);
    current ^= basis_.packed_row(row);
    enumerate_rec(row + 1, current, out);
    current ^= basis_.packed_row(row);
  }

  // Lexicographic minimum of v + rowspace(u): zero out the pivot bits in
  // pivot order; non-pivot bits are then forced.
  static BitVec coset_minimum(BitVec v, const RrefResult& u) {
    for (std::size_t i = 0; i < u.pivots.size(); i++) {
      if (v.get(u.pivots[i])) {
        v ^= u.matrix.packed_row(i);
      }
    }
    return v;
  }

  BitMatrix basis_{0, 0, 2};
};

/// G-state with factorized coefficient tables: alpha_A on G_A, alpha_B on
/// G_B, beta on the coset representatives. Keys are full-width flip vectors.
class WeightedGState {
public:
  using Coeff = std::complex<double>;
  using Table = std::vector<std::pair<BitVec, Coeff>>;

  WeightedGState(SpinFlipGroup group, Partition partition, Table alpha_a, Table alpha_b,
                 Table beta)
      : group_(std::move(group)),
        partition_(std::move(partition)),
        alpha_a_(std::move(alpha_a)),
        alpha_b_(std::move(alpha_b)),
        beta_(std::move(beta)) {
    if (norm_a_sq() == 0.0 || norm_b_sq() == 0.0 || beta_norm_sq() == 0.0) {
      throw std::invalid_argument("WeightedGState: coefficient tables must have nonzero norm");
    }
  }

  /// All coefficients 1: reproduces the G-homogeneous state.
  static WeightedGState homogeneous(const SpinFlipGroup& g, const Partition& p) {
    return WeightedGState(g, p, unit_table(enumerate_subgroup(g, p.side_a())),
                          unit_table(enumerate_subgroup(g, p.side_b())),
                          unit_table(g.coset_representatives(p)));
  }

  /// Coefficients from a 1-D character of Z_2^k: alpha(g) = (-1)^(c . coords)
  /// where coords are the coordinates of g in the group basis. Characters are
  /// multiplicative, so the separability condition holds automatically.
  static WeightedGState from_character(const SpinFlipGroup& g, const Partition& p,
                                       const BitVec& character) {
    if (character.size() != g.k()) {
      throw std::invalid_argument("character length must equal the group rank");
    }
    // The stored basis is in rref, so an element's coordinates are its bits
    // at the pivot columns.
    std::vector<std::size_t> pivots = rref(g.basis()).pivots;
    auto value = [&](const BitVec& element) -> Coeff {
      int e = 0;
      for (std::size_t i = 0; i < pivots.size(); i++) {
        e ^= (element.get(pivots[i]) & character.get(i));
      }
      return e ? Coeff(-1.0, 0.0) : Coeff(1.0, 0.0);
    };
    auto tabulate = [&](const std::vector<BitVec>& keys) {
      Table t;
      t.reserve(keys.size());
      for (const BitVec& key : keys) {
        t.emplace_back(key, value(key));
      }
      return t;
    };
    return WeightedGState(g, p, tabulate(enumerate_subgroup(g, p.side_a())),
                          tabulate(enumerate_subgroup(g, p.side_b())),
                          tabulate(g.coset_representatives(p)));
  }

  /// Builds from string-keyed maps, validating that the keys cover exactly
  /// the enumerated subgroup and coset elements.
  static WeightedGState from_maps(const SpinFlipGroup& g, const Partition& p,
                                  const std::map<std::string, Coeff>& alpha_a,
                                  const std::map<std::string, Coeff>& alpha_b,
                                  const std::map<std::string, Coeff>& beta) {
    auto build = [&](const std::map<std::string, Coeff>& m, const std::vector<BitVec>& keys,
                     const char* which) {
      if (m.size() != keys.size()) {
        throw std::invalid_argument(std::string(which) + " table must have exactly " +
                                    std::to_string(keys.size()) + " entries");
      }
      Table t;
      for (const BitVec& key : keys) {
        auto it = m.find(key.to_string());
        if (it == m.end()) {
          throw std::invalid_argument(std::string(which) + " table missing key " +
                                      key.to_string());
        }
        t.emplace_back(key, it->second);
      }
      return t;
    };
    return WeightedGState(g, p, build(alpha_a, enumerate_subgroup(g, p.side_a()), "alpha_A"),
                          build(alpha_b, enumerate_subgroup(g, p.side_b()), "alpha_B"),
                          build(beta, g.coset_representatives(p), "beta"));
  }

  const SpinFlipGroup& group() const { return group_; }
  const Partition& partition() const { return partition_; }
  const Table& alpha_a() const { return alpha_a_; }
  const Table& alpha_b() const { return alpha_b_; }
  const Table& beta() const { return beta_; }

  double norm_a_sq() const { return norm_sq(alpha_a_); }
  double norm_b_sq() const { return norm_sq(alpha_b_); }
  double beta_norm_sq() const { return norm_sq(beta_); }

private:
  static std::vector<BitVec> enumerate_subgroup(const SpinFlipGroup& g,
                                                const std::vector<std::size_t>& sites) {
    BitMatrix basis = g.restricted_subgroup_basis(sites);
    if (basis.rows() == 0) {
      return {BitVec(g.n())};
    }
    return SpinFlipGroup::from_generators(basis).elements();
  }

  static Table unit_table(const std::vector<BitVec>& keys) {
    Table t;
    t.reserve(keys.size());
    for (const BitVec& key : keys) {
      t.emplace_back(key, Coeff(1.0, 0.0));
    }
    return t;
  }

  static double norm_sq(const Table& t) {
    double s = 0.0;
    for (const auto& [key, c] : t) {
      s += std::norm(c);
    }
    return s;
  }

  SpinFlipGroup group_;
  Partition partition_;
  Table alpha_a_;
  Table alpha_b_;
  Table beta_;
};

}  // namespace gstate
