#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstate/graph.hpp"
#include "gstate/partition.hpp"
#include "gstate/pauli.hpp"
#include "gstate/qudit.hpp"
#include "gstate/spin_flip_group.hpp"

namespace gstate {

/// Default cap on explicit statevector size (amplitude count).
inline constexpr std::size_t kDefaultAmplitudeGuard = std::size_t{1} << 20;

/// Explicit statevector on n sites of local dimension d. Site 0 is the most
/// significant digit of the amplitude index.
class DenseState {
public:
  using Amp = std::complex<double>;

  DenseState(std::size_t n, uint32_t d, std::size_t guard = kDefaultAmplitudeGuard)
      : n_(n), d_(d) {
    if (d < 2) {
      throw std::invalid_argument("local dimension must be at least 2");
    }
    double needed = std::pow(static_cast<double>(d), static_cast<double>(n));
    if (needed > static_cast<double>(guard)) {
      throw std::runtime_error("state of " + std::to_string(n) + " sites at d=" +
                               std::to_string(d) + " exceeds the amplitude guard (" +
                               std::to_string(guard) + ")");
    }
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; i++) {
      size *= d;
    }
    amps_.assign(size, Amp(0.0, 0.0));
  }

  std::size_t n() const { return n_; }
  uint32_t d() const { return d_; }
  std::size_t size() const { return amps_.size(); }
  Amp& operator[](std::size_t i) { return amps_[i]; }
  const Amp& operator[](std::size_t i) const { return amps_[i]; }

  double norm_sq() const {
    double s = 0.0;
    for (const Amp& a : amps_) {
      s += std::norm(a);
    }
    return s;
  }

  void normalize() {
    double nrm = std::sqrt(norm_sq());
    if (nrm == 0.0) {
      throw std::runtime_error("cannot normalize a zero state");
    }
    for (Amp& a : amps_) {
      a /= nrm;
    }
  }

  /// Index of the basis state |digits>, site 0 most significant.
  std::size_t index_of(const std::vector<uint32_t>& digits) const {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < n_; s++) {
      idx = idx * d_ + digits[s];
    }
    return idx;
  }

  std::size_t index_of(const BitVec& bits) const {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < n_; s++) {
      idx = idx * d_ + (bits.get(s) ? 1 : 0);
    }
    return idx;
  }

  uint32_t digit(std::size_t index, std::size_t site) const {
    for (std::size_t s = n_; s-- > site + 1;) {
      index /= d_;
    }
    return static_cast<uint32_t>(index % d_);
  }

  static Amp inner(const DenseState& a, const DenseState& b) {
    if (a.size() != b.size()) {
      throw std::invalid_argument("inner: size mismatch");
    }
    Amp s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); i++) {
      s += std::conj(a[i]) * b[i];
    }
    return s;
  }

  /// Equality up to a global phase: | <a|b> | = 1 within tolerance.
  static bool same_up_to_phase(const DenseState& a, const DenseState& b, double tol = 1e-9) {
    return std::abs(std::abs(inner(a, b)) - 1.0) < tol;
  }

private:
  std::size_t n_;
  uint32_t d_;
  std::vector<Amp> amps_;
};

/// Equal-amplitude superposition over the group orbit of |0..0>.
inline DenseState build_homogeneous(const SpinFlipGroup& g,
                                    std::size_t guard = kDefaultAmplitudeGuard) {
  DenseState s(g.n(), 2, guard);
  for (const BitVec& element : g.elements()) {
    s[s.index_of(element)] += 1.0;
  }
  s.normalize();
  return s;
}

inline DenseState build_homogeneous(const QuditShiftGroup& g,
                                    std::size_t guard = kDefaultAmplitudeGuard) {
  DenseState s(g.n(), g.d(), guard);
  std::vector<uint32_t> element(g.n(), 0);
  std::vector<uint32_t> coeffs(g.k(), 0);
  // iterate over all GF(d)^k combinations of the basis rows
  while (true) {
    s[s.index_of(element)] += 1.0;
    std::size_t j = 0;
    for (; j < g.k(); j++) {
      coeffs[j]++;
      for (std::size_t c = 0; c < g.n(); c++) {
        element[c] = (element[c] + g.basis().get(j, c)) % g.d();
      }
      if (coeffs[j] < g.d()) {
        break;
      }
      coeffs[j] = 0;
    }
    if (j == g.k()) {
      break;
    }
  }
  s.normalize();
  return s;
}

/// Assembles sum alpha_A(g_A) alpha_B(g_B) beta(h) (g_A + g_B + h) applied
/// to |0..0>, normalized.
inline DenseState build_weighted(const WeightedGState& w,
                                 std::size_t guard = kDefaultAmplitudeGuard) {
  const SpinFlipGroup& g = w.group();
  DenseState s(g.n(), 2, guard);
  for (const auto& [va, ca] : w.alpha_a()) {
    for (const auto& [vb, cb] : w.alpha_b()) {
      BitVec ab = va ^ vb;
      for (const auto& [h, ch] : w.beta()) {
        s[s.index_of(ab ^ h)] += ca * cb * ch;
      }
    }
  }
  if (s.norm_sq() < 1e-24) {
    throw std::runtime_error("weighted state has zero norm");
  }
  s.normalize();
  return s;
}

/// Standard controlled-phase construction: Hadamard layer then CZ per edge.
/// Every stabilizer generator is asserted to fix the result.
inline DenseState build_graph_state(const Graph& g,
                                    std::size_t guard = kDefaultAmplitudeGuard);

/// Applies i^phase X(x) Z(z) to the state (d = 2).
inline DenseState apply_pauli(const DenseState& s, const PauliString& p) {
  if (s.d() != 2) {
    throw std::invalid_argument("apply_pauli: qubit states only");
  }
  if (p.n() != s.n()) {
    throw std::invalid_argument("apply_pauli: size mismatch");
  }
  DenseState out(s.n(), 2);
  static const std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::size_t x_mask = 0, z_mask = 0;
  for (std::size_t q = 0; q < p.n(); q++) {
    std::size_t bit = std::size_t{1} << (s.n() - 1 - q);
    if (p.x.get(q)) {
      x_mask |= bit;
    }
    if (p.z.get(q)) {
      z_mask |= bit;
    }
  }
  for (std::size_t idx = 0; idx < s.size(); idx++) {
    // X(x) Z(z) |c> = (-1)^(z.c) |c + x>
    int sign = std::popcount(idx & z_mask) & 1;
    std::complex<double> amp = s[idx] * kPhases[p.phase] * (sign ? -1.0 : 1.0);
    out[idx ^ x_mask] += amp;
  }
  return out;
}

inline DenseState apply_hadamard(const DenseState& s, std::size_t qubit) {
  if (s.d() != 2) {
    throw std::invalid_argument("apply_hadamard: qubit states only");
  }
  DenseState out(s.n(), 2);
  const double r = 1.0 / std::sqrt(2.0);
  std::size_t bit = std::size_t{1} << (s.n() - 1 - qubit);
  for (std::size_t idx = 0; idx < s.size(); idx++) {
    if (idx & bit) {
      out[idx & ~bit] += r * s[idx];
      out[idx] -= r * s[idx];
    } else {
      out[idx] += r * s[idx];
      out[idx | bit] += r * s[idx];
    }
  }
  return out;
}

inline DenseState apply_phase_gate(const DenseState& s, std::size_t qubit) {
  if (s.d() != 2) {
    throw std::invalid_argument("apply_phase_gate: qubit states only");
  }
  DenseState out = s;
  std::size_t bit = std::size_t{1} << (s.n() - 1 - qubit);
  for (std::size_t idx = 0; idx < s.size(); idx++) {
    if (idx & bit) {
      out[idx] *= std::complex<double>(0.0, 1.0);
    }
  }
  return out;
}

inline DenseState build_graph_state(const Graph& g, std::size_t guard) {
  DenseState s(g.n(), 2, guard);
  double amp = std::pow(2.0, -static_cast<double>(g.n()) / 2.0);
  for (std::size_t idx = 0; idx < s.size(); idx++) {
    s[idx] = amp;
  }
  for (const auto& [u, v] : g.edges()) {
    std::size_t bu = std::size_t{1} << (g.n() - 1 - u);
    std::size_t bv = std::size_t{1} << (g.n() - 1 - v);
    for (std::size_t idx = 0; idx < s.size(); idx++) {
      if ((idx & bu) && (idx & bv)) {
        s[idx] = -s[idx];
      }
    }
  }
  StabilizerGroup stab = graph_state_stabilizer(g);
  for (const PauliString& gen : stab.generators()) {
    DenseState mapped = apply_pauli(s, gen);
    double diff = 0.0;
    for (std::size_t i = 0; i < s.size(); i++) {
      diff += std::norm(mapped[i] - s[i]);
    }
    if (std::sqrt(diff) > 1e-9) {
      throw std::logic_error("graph-state construction failed its stabilizer check");
    }
  }
  return s;
}

/// Von Neumann entropy in bits across the partition, from the singular
/// values of the amplitude matrix (the density matrix is never formed).
inline double entropy(const DenseState& s, const Partition& p) {
  if (p.n() != s.n()) {
    throw std::invalid_argument("entropy: partition size mismatch");
  }
  std::size_t rows = 1, cols = 1;
  for (std::size_t i = 0; i < p.side_a().size(); i++) {
    rows *= s.d();
  }
  for (std::size_t i = 0; i < p.side_b().size(); i++) {
    cols *= s.d();
  }
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t idx = 0; idx < s.size(); idx++) {
    std::size_t ra = 0, cb = 0;
    for (std::size_t site : p.side_a()) {
      ra = ra * s.d() + s.digit(idx, site);
    }
    for (std::size_t site : p.side_b()) {
      cb = cb * s.d() + s.digit(idx, site);
    }
    m(static_cast<Eigen::Index>(ra), static_cast<Eigen::Index>(cb)) = s[idx];
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  double total = 0.0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); i++) {
    double p2 = svd.singularValues()(i) * svd.singularValues()(i);
    if (p2 > 0.0) {
      total -= p2 * std::log2(p2);
    }
  }
  return total;
}

/// tau_n = |<psi| Y^n |psi*>|^2. Qubits only; meaningful for even n.
inline double ntangle_oracle(const DenseState& s) {
  if (s.d() != 2) {
    throw std::invalid_argument("ntangle_oracle: qubit states only");
  }
  // Y^n |b> = i^n (-1)^(weight b) |~b>
  static const std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> i_pow_n = kPhases[s.n() % 4];
  std::size_t full = s.size() - 1;
  std::complex<double> overlap(0.0, 0.0);
  for (std::size_t b = 0; b < s.size(); b++) {
    int sign = std::popcount(b) & 1;
    overlap += std::conj(s[full ^ b]) * std::conj(s[b]) * i_pow_n * (sign ? -1.0 : 1.0);
  }
  return std::norm(overlap);
}

/// True iff every generator maps the state to itself within tolerance.
inline bool stabilizer_eigencheck(const DenseState& s, const StabilizerGroup& grp,
                                  double tol = 1e-9) {
  for (const PauliString& gen : grp.generators()) {
    DenseState mapped = apply_pauli(s, gen);
    double diff = 0.0;
    for (std::size_t i = 0; i < s.size(); i++) {
      diff += std::norm(mapped[i] - s[i]);
    }
    if (std::sqrt(diff) > tol) {
      return false;
    }
  }
  return true;
}

// State dump: 16-byte header (magic "GSTV", u32 n, u32 d, u32 reserved),
// then little-endian complex doubles.
inline void write_state_dump(const DenseState& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  const char magic[4] = {'G', 'S', 'T', 'V'};
  uint32_t n = static_cast<uint32_t>(s.n()), d = s.d(), reserved = 0;
  out.write(magic, 4);
  out.write(reinterpret_cast<const char*>(&n), 4);
  out.write(reinterpret_cast<const char*>(&d), 4);
  out.write(reinterpret_cast<const char*>(&reserved), 4);
  for (std::size_t i = 0; i < s.size(); i++) {
    double re = s[i].real(), im = s[i].imag();
    out.write(reinterpret_cast<const char*>(&re), 8);
    out.write(reinterpret_cast<const char*>(&im), 8);
  }
}

inline DenseState read_state_dump(const std::string& path,
                                  std::size_t guard = kDefaultAmplitudeGuard) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  char magic[4];
  uint32_t n = 0, d = 0, reserved = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&n), 4);
  in.read(reinterpret_cast<char*>(&d), 4);
  in.read(reinterpret_cast<char*>(&reserved), 4);
  if (!in || std::string(magic, 4) != "GSTV") {
    throw std::runtime_error("not a state dump: " + path);
  }
  DenseState s(n, d, guard);
  for (std::size_t i = 0; i < s.size(); i++) {
    double re = 0, im = 0;
    in.read(reinterpret_cast<char*>(&re), 8);
    in.read(reinterpret_cast<char*>(&im), 8);
    s[i] = {re, im};
  }
  if (!in) {
    throw std::runtime_error("truncated state dump: " + path);
  }
  return s;
}

}  // namespace gstate
