#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstate/bit_matrix.hpp"

namespace gstate {

/// Pauli operator in normal-ordered form i^phase * X(x) * Z(z).
/// A string representable as +-X(a)Z(b) has phase in {0, 2}; strings with an
/// odd number of Y factors carry an odd phase exponent.
struct PauliString {
  BitVec x;
  BitVec z;
  uint8_t phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  PauliString(std::size_t n) : x(n), z(n) {}
  PauliString(BitVec x_, BitVec z_, uint8_t phase_ = 0)
      : x(std::move(x_)), z(std::move(z_)), phase(phase_ & 3) {
    if (x.size() != z.size()) {
      throw std::invalid_argument("PauliString: x/z length mismatch");
    }
  }

  std::size_t n() const { return x.size(); }

  static PauliString identity(std::size_t n) { return PauliString(n); }

  bool is_identity() const { return phase == 0 && x.is_zero() && z.is_zero(); }

  /// Parse "+XXZ" / "-IYZ". Sign prefix optional, defaults to +.
  static PauliString from_text(const std::string& text) {
    std::size_t start = 0;
    uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
      phase = text[0] == '-' ? 2 : 0;
      start = 1;
    }
    std::size_t n = text.size() - start;
    PauliString p(n);
    p.phase = phase;
    for (std::size_t i = 0; i < n; i++) {
      switch (text[start + i]) {
        case 'I':
          break;
        case 'X':
          p.x.set(i, true);
          break;
        case 'Z':
          p.z.set(i, true);
          break;
        case 'Y':
          // Y = i XZ per site
          p.x.set(i, true);
          p.z.set(i, true);
          p.phase = (p.phase + 1) & 3;
          break;
        default:
          throw std::invalid_argument("bad Pauli character in '" + text + "'");
      }
    }
    return p;
  }

  std::string to_text() const {
    // Emit a sign prefix only when the string is +-X(a)Z(b) up to Y factors;
    // the per-site letter absorbs one factor of i for each Y.
    std::size_t y_count = 0;
    std::string body(n(), 'I');
    for (std::size_t i = 0; i < n(); i++) {
      bool xb = x.get(i), zb = z.get(i);
      if (xb && zb) {
        body[i] = 'Y';
        y_count++;
      } else if (xb) {
        body[i] = 'X';
      } else if (zb) {
        body[i] = 'Z';
      }
    }
    uint8_t residual = static_cast<uint8_t>((phase + 4 - (y_count & 3)) & 3);
    const char* prefix[] = {"+", "+i*", "-", "-i*"};
    return std::string(prefix[residual]) + body;
  }

  bool operator==(const PauliString& o) const {
    return phase == o.phase && x == o.x && z == o.z;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }
};

/// (x_p, z_q) + (x_q, z_p) mod 2; zero iff the operators commute.
inline int symplectic_product(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("symplectic_product: size mismatch");
  }
  return (p.x.dot(q.z) + q.x.dot(p.z)) & 1;
}

/// Normal-ordered product: reordering Z(z_p) past X(x_q) costs (-1)^(z_p.x_q).
inline PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.n() != q.n()) {
    throw std::invalid_argument("multiply: size mismatch");
  }
  PauliString out(p.x ^ q.x, p.z ^ q.z);
  out.phase = static_cast<uint8_t>((p.phase + q.phase + 2 * p.z.dot(q.x)) & 3);
  return out;
}

/// Stabilizer group given by an independent list of commuting generators,
/// each squaring to +identity and none equal to -identity.
class StabilizerGroup {
public:
  StabilizerGroup() = default;

  StabilizerGroup(std::vector<PauliString> generators, std::size_t n)
      : gens_(std::move(generators)), n_(n) {
    for (const PauliString& g : gens_) {
      if (g.n() != n_) {
        throw std::invalid_argument("StabilizerGroup: generator length mismatch");
      }
    }
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<PauliString>& generators() const { return gens_; }

  /// Checks the stabilizer conditions: every generator squares to +identity
  /// and is not -identity, all pairs commute, and the generators are
  /// independent as 2n-bit symplectic vectors. For generators in +-X(a)Z(b)
  /// form the squaring condition is (a,b) = 0 with a real sign.
  bool valid() const {
    for (const PauliString& g : gens_) {
      // g^2 = i^(2 phase) (-1)^(x.z); demand +identity
      if ((2 * g.phase + 2 * g.x.dot(g.z)) % 4 != 0) {
        return false;
      }
      if (g.x.is_zero() && g.z.is_zero() && g.phase != 0) {
        return false;  // -identity
      }
    }
    for (std::size_t i = 0; i < gens_.size(); i++) {
      for (std::size_t j = i + 1; j < gens_.size(); j++) {
        if (symplectic_product(gens_[i], gens_[j]) != 0) {
          return false;
        }
      }
    }
    return rank(generator_matrix()) == gens_.size();
  }

  /// m x 2n matrix with the X block on the left, signs omitted.
  BitMatrix generator_matrix() const {
    BitMatrix m(gens_.size(), 2 * n_, 2);
    for (std::size_t r = 0; r < gens_.size(); r++) {
      for (std::size_t c = 0; c < n_; c++) {
        m.set(r, c, gens_[r].x.get(c));
        m.set(r, n_ + c, gens_[r].z.get(c));
      }
    }
    return m;
  }

private:
  std::vector<PauliString> gens_;
  std::size_t n_ = 0;
};

struct StandardForm {
  BitMatrix matrix;       // n x 2n in block form ( I_r A | B C ; 0 0 | D I_{n-r} )
  std::size_t x_rank = 0;
  // qubit_order[i] = original qubit index sitting at column i of the result
  std::vector<std::size_t> qubit_order;
};

/// Gottesman standard form of a full (m = n) stabilizer, by Gaussian
/// elimination on the generator matrix with qubit-column permutations.
inline StandardForm standard_form(const StabilizerGroup& s) {
  std::size_t n = s.n();
  if (s.size() != n) {
    throw std::invalid_argument("standard_form requires a full stabilizer (m = n)");
  }
  BitMatrix m = s.generator_matrix();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; i++) {
    order[i] = i;
  }
  auto swap_qubits = [&](std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t r = 0; r < m.rows(); r++) {
      uint32_t xa = m.get(r, a), xb = m.get(r, b);
      m.set(r, a, xb);
      m.set(r, b, xa);
      uint32_t za = m.get(r, n + a), zb = m.get(r, n + b);
      m.set(r, n + a, zb);
      m.set(r, n + b, za);
    }
    std::swap(order[a], order[b]);
  };

  // Stage 1: reduce the X block to ( I_r A ; 0 0 ), permuting qubits so the
  // pivots occupy the leading columns.
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; col++) {
    std::size_t pivot = n;
    for (std::size_t row = r; row < n; row++) {
      if (m.get(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == n) {
      continue;
    }
    m.swap_rows(r, pivot);
    for (std::size_t row = 0; row < n; row++) {
      if (row != r && m.get(row, col) != 0) {
        m.add_scaled_row(row, r, 1);
      }
    }
    swap_qubits(r, col);
    r++;
  }

  // Stage 2: the bottom n-r rows are pure Z; commutation with the top rows
  // forces their restriction to the trailing n-r qubits to be invertible, so
  // row reduction alone brings it to the identity.
  for (std::size_t i = 0; i < n - r; i++) {
    std::size_t col = n + r + i;
    std::size_t pivot = n;
    for (std::size_t row = r + i; row < n; row++) {
      if (m.get(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == n) {
      throw std::logic_error("standard_form: trailing Z block is singular");
    }
    m.swap_rows(r + i, pivot);
    for (std::size_t row = r; row < n; row++) {
      if (row != r + i && m.get(row, col) != 0) {
        m.add_scaled_row(row, r + i, 1);
      }
    }
  }
  return {m, r, order};
}

/// If the generator matrix row-reduces (without qubit permutation) to
/// ( I | B ) with B a symmetric zero-diagonal matrix, return B.
inline std::optional<BitMatrix> is_graph_form(const StabilizerGroup& s) {
  std::size_t n = s.n();
  if (s.size() != n) {
    return std::nullopt;
  }
  BitMatrix m = s.generator_matrix();
  // Row-reduce using X columns only.
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; col++) {
    std::size_t pivot = n;
    for (std::size_t row = r; row < n; row++) {
      if (m.get(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot == n) {
      continue;
    }
    m.swap_rows(r, pivot);
    for (std::size_t row = 0; row < n; row++) {
      if (row != r && m.get(row, col) != 0) {
        m.add_scaled_row(row, r, 1);
      }
    }
    r++;
  }
  if (r < n) {
    return std::nullopt;
  }
  BitMatrix b(n, n, 2);
  for (std::size_t i = 0; i < n; i++) {
    for (std::size_t j = 0; j < n; j++) {
      b.set(i, j, m.get(i, n + j));
    }
  }
  for (std::size_t i = 0; i < n; i++) {
    if (b.get(i, i) != 0) {
      return std::nullopt;
    }
    for (std::size_t j = i + 1; j < n; j++) {
      if (b.get(i, j) != b.get(j, i)) {
        return std::nullopt;
      }
    }
  }
  return b;
}

/// CSS test: the group admits a pure-X / pure-Z generating set iff
/// rank(X block) + rank(Z block) equals the generator count.
inline bool is_css(const StabilizerGroup& s) {
  std::size_t n = s.n();
  BitMatrix m = s.generator_matrix();
  std::vector<std::size_t> x_cols(n), z_cols(n);
  for (std::size_t i = 0; i < n; i++) {
    x_cols[i] = i;
    z_cols[i] = n + i;
  }
  return rank(m.select_columns(x_cols)) + rank(m.select_columns(z_cols)) == s.size();
}

/// Conjugate every generator by a word of single-qubit Clifford gates per
/// qubit. Word characters: 'H', 'P' (= diag(1, i)), 'I'; they are applied
/// left to right, so word "HP" means P (H g H) P^dagger.
inline StabilizerGroup conjugate_local(const StabilizerGroup& s,
                                       const std::vector<std::string>& words) {
  std::size_t n = s.n();
  if (words.size() != n) {
    throw std::invalid_argument("conjugate_local: need one gate word per qubit");
  }
  std::vector<PauliString> out = s.generators();
  for (PauliString& g : out) {
    for (std::size_t q = 0; q < n; q++) {
      for (char c : words[q]) {
        bool xb = g.x.get(q), zb = g.z.get(q);
        switch (c) {
          case 'I':
            break;
          case 'H':
            // X <-> Z; reordering the site factor costs (-1)^(x z)
            g.x.set(q, zb);
            g.z.set(q, xb);
            if (xb && zb) {
              g.phase = (g.phase + 2) & 3;
            }
            break;
          case 'P':
            // X -> Y = i XZ, Z -> Z
            if (xb) {
              g.z.set(q, !zb);
              g.phase = (g.phase + 1) & 3;
            }
            break;
          default:
            throw std::invalid_argument("conjugate_local: bad gate character");
        }
      }
    }
  }
  return StabilizerGroup(std::move(out), n);
}

namespace detail {

// Canonical generating set: RREF over the 2n symplectic columns with exact
// sign bookkeeping via Pauli multiplication. Unique for a given group.
inline std::vector<PauliString> canonical_generators(const StabilizerGroup& s) {
  std::vector<PauliString> rows = s.generators();
  std::size_t n2 = 2 * s.n();
  auto bit = [&](const PauliString& p, std::size_t col) {
    return col < s.n() ? p.x.get(col) : p.z.get(col - s.n());
  };
  std::size_t next = 0;
  for (std::size_t col = 0; col < n2 && next < rows.size(); col++) {
    std::size_t pivot = rows.size();
    for (std::size_t r = next; r < rows.size(); r++) {
      if (bit(rows[r], col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[next], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); r++) {
      if (r != next && bit(rows[r], col)) {
        rows[r] = multiply(rows[r], rows[next]);
      }
    }
    next++;
  }
  rows.resize(next);
  return rows;
}

}  // namespace detail

/// Equality of the generated groups, signs included.
inline bool groups_equal(const StabilizerGroup& s1, const StabilizerGroup& s2) {
  if (s1.n() != s2.n()) {
    throw std::invalid_argument("groups_equal: qubit count mismatch");
  }
  return detail::canonical_generators(s1) == detail::canonical_generators(s2);
}

}  // namespace gstate
