#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gstate {

/// Packed vector over GF(2). Bit i lives in word i/64.
class BitVec {
public:
  BitVec() = default;

  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVec from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); i++) {
      if (s[i] == '1') {
        v.set(i, true);
      } else if (s[i] != '0') {
        throw std::invalid_argument("bit string must contain only 0/1: " + s);
      }
    }
    return v;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i % 64);
    if (v) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i / 64] ^= uint64_t{1} << (i % 64); }

  BitVec& operator^=(const BitVec& o) {
    if (o.n_ != n_) {
      throw std::invalid_argument("BitVec size mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); w++) {
      words_[w] ^= o.words_[w];
    }
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  /// Inner product mod 2.
  int dot(const BitVec& o) const {
    if (o.n_ != n_) {
      throw std::invalid_argument("BitVec size mismatch");
    }
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); w++) {
      acc ^= words_[w] & o.words_[w];
    }
    return std::popcount(acc) & 1;
  }

  std::size_t weight() const {
    std::size_t r = 0;
    for (uint64_t w : words_) {
      r += std::popcount(w);
    }
    return r;
  }

  bool is_zero() const {
    for (uint64_t w : words_) {
      if (w) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; i++) {
      if (get(i)) {
        s[i] = '1';
      }
    }
    return s;
  }

  /// Index of the first set bit, or size() if none.
  std::size_t first_set() const {
    for (std::size_t w = 0; w < words_.size(); w++) {
      if (words_[w]) {
        return w * 64 + std::countr_zero(words_[w]);
      }
    }
    return n_;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// Lexicographic order reading bit 0 as the most significant position.
  bool lex_less(const BitVec& o) const {
    for (std::size_t i = 0; i < n_; i++) {
      if (get(i) != o.get(i)) {
        return !get(i);
      }
    }
    return false;
  }

  const std::vector<uint64_t>& words() const { return words_; }

private:
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

namespace detail {

inline bool is_prime(uint32_t d) {
  if (d < 2) {
    return false;
  }
  for (uint32_t i = 2; i * i <= d; i++) {
    if (d % i == 0) {
      return false;
    }
  }
  return true;
}

inline uint32_t mod_pow(uint64_t base, uint32_t exp, uint32_t mod) {
  uint64_t r = 1;
  base %= mod;
  while (exp) {
    if (exp & 1) {
      r = r * base % mod;
    }
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<uint32_t>(r);
}

// Fermat inverse; modulus must be prime.
inline uint32_t mod_inverse(uint32_t a, uint32_t p) { return mod_pow(a, p - 2, p); }

}  // namespace detail

/// Matrix over GF(d) for prime d. Rows are bit-packed for d = 2 so that
/// elimination runs word-parallel; for d > 2 entries are stored as bytes.
class BitMatrix {
public:
  BitMatrix() : BitMatrix(0, 0, 2) {}

  BitMatrix(std::size_t rows, std::size_t cols, uint32_t modulus = 2)
      : rows_(rows), cols_(cols), mod_(modulus) {
    if (!detail::is_prime(modulus)) {
      throw std::invalid_argument("modulus must be prime, got " + std::to_string(modulus));
    }
    if (mod_ == 2) {
      packed_.assign(rows, BitVec(cols));
    } else {
      bytes_.assign(rows * cols, 0);
    }
  }

  static BitMatrix identity(std::size_t n, uint32_t modulus = 2) {
    BitMatrix m(n, n, modulus);
    for (std::size_t i = 0; i < n; i++) {
      m.set(i, i, 1);
    }
    return m;
  }

  static BitMatrix from_strings(const std::vector<std::string>& rows, uint32_t modulus = 2) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols, modulus);
    for (std::size_t r = 0; r < rows.size(); r++) {
      if (rows[r].size() != cols) {
        throw std::invalid_argument("ragged rows in matrix literal");
      }
      for (std::size_t c = 0; c < cols; c++) {
        char ch = rows[r][c];
        if (ch < '0' || ch >= static_cast<char>('0' + modulus)) {
          throw std::invalid_argument("digit out of range for GF(" + std::to_string(modulus) +
                                      "): " + rows[r]);
        }
        m.set(r, c, static_cast<uint32_t>(ch - '0'));
      }
    }
    return m;
  }

  static BitMatrix from_rows(const std::vector<BitVec>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols, 2);
    for (std::size_t r = 0; r < rows.size(); r++) {
      if (rows[r].size() != cols) {
        throw std::invalid_argument("ragged rows");
      }
      m.packed_[r] = rows[r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint32_t modulus() const { return mod_; }

  uint32_t get(std::size_t r, std::size_t c) const {
    return mod_ == 2 ? static_cast<uint32_t>(packed_[r].get(c)) : bytes_[r * cols_ + c];
  }

  void set(std::size_t r, std::size_t c, uint32_t v) {
    if (v >= mod_) {
      throw std::invalid_argument("entry out of range for GF(" + std::to_string(mod_) + ")");
    }
    if (mod_ == 2) {
      packed_[r].set(c, v != 0);
    } else {
      bytes_[r * cols_ + c] = static_cast<uint8_t>(v);
    }
  }

  const BitVec& packed_row(std::size_t r) const {
    if (mod_ != 2) {
      throw std::logic_error("packed_row requires GF(2)");
    }
    return packed_[r];
  }

  std::vector<uint32_t> row(std::size_t r) const {
    std::vector<uint32_t> out(cols_);
    for (std::size_t c = 0; c < cols_; c++) {
      out[c] = get(r, c);
    }
    return out;
  }

  std::string row_string(std::size_t r) const {
    std::string s(cols_, '0');
    for (std::size_t c = 0; c < cols_; c++) {
      s[c] = static_cast<char>('0' + get(r, c));
    }
    return s;
  }

  void append_row(const BitVec& v) {
    if (mod_ != 2 || v.size() != cols_) {
      throw std::invalid_argument("append_row: need GF(2) row of matching width");
    }
    packed_.push_back(v);
    rows_++;
  }

  void append_row(const std::vector<uint32_t>& v) {
    if (v.size() != cols_) {
      throw std::invalid_argument("append_row: width mismatch");
    }
    if (mod_ == 2) {
      BitVec b(cols_);
      for (std::size_t c = 0; c < cols_; c++) {
        if (v[c] > 1) {
          throw std::invalid_argument("entry out of range");
        }
        b.set(c, v[c] != 0);
      }
      packed_.push_back(b);
    } else {
      for (uint32_t e : v) {
        if (e >= mod_) {
          throw std::invalid_argument("entry out of range");
        }
        bytes_.push_back(static_cast<uint8_t>(e));
      }
    }
    rows_++;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) {
      return;
    }
    if (mod_ == 2) {
      std::swap(packed_[i], packed_[j]);
    } else {
      for (std::size_t c = 0; c < cols_; c++) {
        std::swap(bytes_[i * cols_ + c], bytes_[j * cols_ + c]);
      }
    }
  }

  /// row[dst] += coef * row[src] (mod d).
  void add_scaled_row(std::size_t dst, std::size_t src, uint32_t coef) {
    if (coef == 0) {
      return;
    }
    if (mod_ == 2) {
      packed_[dst] ^= packed_[src];
    } else {
      for (std::size_t c = 0; c < cols_; c++) {
        bytes_[dst * cols_ + c] = static_cast<uint8_t>(
            (bytes_[dst * cols_ + c] + static_cast<uint64_t>(coef) * bytes_[src * cols_ + c]) %
            mod_);
      }
    }
  }

  void scale_row(std::size_t r, uint32_t coef) {
    if (mod_ == 2) {
      if (coef == 0) {
        packed_[r] = BitVec(cols_);
      }
      return;
    }
    for (std::size_t c = 0; c < cols_; c++) {
      bytes_[r * cols_ + c] =
          static_cast<uint8_t>(static_cast<uint64_t>(coef) * bytes_[r * cols_ + c] % mod_);
    }
  }

  /// Restriction of every row to the given columns, in the given order.
  BitMatrix select_columns(const std::vector<std::size_t>& cols) const {
    BitMatrix out(rows_, cols.size(), mod_);
    for (std::size_t r = 0; r < rows_; r++) {
      for (std::size_t c = 0; c < cols.size(); c++) {
        out.set(r, c, get(r, cols[c]));
      }
    }
    return out;
  }

  /// m . v mod d.
  std::vector<uint32_t> mat_vec(const std::vector<uint32_t>& v) const {
    if (v.size() != cols_) {
      throw std::invalid_argument("mat_vec: length mismatch");
    }
    std::vector<uint32_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; r++) {
      uint64_t acc = 0;
      for (std::size_t c = 0; c < cols_; c++) {
        acc += static_cast<uint64_t>(get(r, c)) * v[c];
      }
      out[r] = static_cast<uint32_t>(acc % mod_);
    }
    return out;
  }

  bool operator==(const BitMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || mod_ != o.mod_) {
      return false;
    }
    for (std::size_t r = 0; r < rows_; r++) {
      for (std::size_t c = 0; c < cols_; c++) {
        if (get(r, c) != o.get(r, c)) {
          return false;
        }
      }
    }
    return true;
  }
  bool operator!=(const BitMatrix& o) const { return !(*this == o); }

private:
  std::size_t rows_;
  std::size_t cols_;
  uint32_t mod_;
  std::vector<BitVec> packed_;   // d = 2
  std::vector<uint8_t> bytes_;   // d > 2, row-major
};

inline BitMatrix transpose(const BitMatrix& m) {
  BitMatrix out(m.cols(), m.rows(), m.modulus());
  for (std::size_t r = 0; r < m.rows(); r++) {
    for (std::size_t c = 0; c < m.cols(); c++) {
      out.set(c, r, m.get(r, c));
    }
  }
  return out;
}

struct RrefResult {
  BitMatrix matrix;             // zero rows removed, pivots normalized to 1
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

/// Reduced row-echelon form. Pivot choice: first row with a nonzero entry in
/// the leftmost unresolved column, so the output is canonical for a given
/// row space.
inline RrefResult rref(const BitMatrix& m) {
  BitMatrix work = m;
  uint32_t d = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < work.cols() && next_row < work.rows(); col++) {
    std::size_t pivot_row = work.rows();
    for (std::size_t r = next_row; r < work.rows(); r++) {
      if (work.get(r, col) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == work.rows()) {
      continue;
    }
    work.swap_rows(next_row, pivot_row);
    if (d > 2) {
      work.scale_row(next_row, detail::mod_inverse(work.get(next_row, col), d));
    }
    for (std::size_t r = 0; r < work.rows(); r++) {
      if (r != next_row && work.get(r, col) != 0) {
        work.add_scaled_row(r, next_row, d - work.get(r, col));
      }
    }
    pivots.push_back(col);
    next_row++;
  }
  BitMatrix out(next_row, work.cols(), d);
  for (std::size_t r = 0; r < next_row; r++) {
    for (std::size_t c = 0; c < work.cols(); c++) {
      out.set(r, c, work.get(r, c));
    }
  }
  return {out, pivots};
}

inline std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

/// Basis of { v : m.v = 0 mod d }, one row per free column of rref(m).
inline BitMatrix kernel_basis(const BitMatrix& m) {
  RrefResult r = rref(m);
  uint32_t d = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) {
    is_pivot[p] = true;
  }
  BitMatrix out(0, m.cols(), d);
  for (std::size_t f = 0; f < m.cols(); f++) {
    if (is_pivot[f]) {
      continue;
    }
    std::vector<uint32_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); i++) {
      uint32_t coef = r.matrix.get(i, f);
      v[r.pivots[i]] = coef == 0 ? 0 : d - coef;
    }
    out.append_row(v);
  }
  return out;
}

/// True iff v lies in the row space of m.
inline bool in_row_space(const BitMatrix& m, const std::vector<uint32_t>& v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("in_row_space: length mismatch");
  }
  RrefResult r = rref(m);
  uint32_t d = m.modulus();
  std::vector<uint32_t> residue = v;
  for (std::size_t i = 0; i < r.pivots.size(); i++) {
    uint32_t coef = residue[r.pivots[i]];
    if (coef == 0) {
      continue;
    }
    for (std::size_t c = 0; c < m.cols(); c++) {
      residue[c] = (residue[c] + static_cast<uint64_t>(d - coef) * r.matrix.get(i, c)) % d;
    }
  }
  for (uint32_t e : residue) {
    if (e != 0) {
      return false;
    }
  }
  return true;
}

inline bool in_row_space(const BitMatrix& m, const BitVec& v) {
  std::vector<uint32_t> u(v.size());
  for (std::size_t i = 0; i < v.size(); i++) {
    u[i] = v.get(i);
  }
  return in_row_space(m, u);
}

}  // namespace gstate
