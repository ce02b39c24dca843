#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gstate/bit_matrix.hpp"
#include "gstate/dense_state.hpp"
#include "gstate/entropy.hpp"
#include "gstate/partition.hpp"
#include "gstate/spin_flip_group.hpp"

namespace gstate {

/// Square lattice on a W x H torus. Sites are the 2WH edges; the star at a
/// vertex flips the 4 incident edges. Every edge is shared by exactly two
/// stars and the product of all stars is the identity, so the generated
/// spin-flip group has rank V - 1.
class StarLattice {
public:
  StarLattice(std::size_t width, std::size_t height)
      : width_(width), height_(height), stars_(0, 2 * width * height, 2) {
    if (width < 2 || height < 2) {
      throw std::invalid_argument("torus needs width and height of at least 2");
    }
    for (std::size_t y = 0; y < height_; y++) {
      for (std::size_t x = 0; x < width_; x++) {
        BitVec star(edge_count());
        star.set(edge_index(x, y, 0), true);
        star.set(edge_index((x + width_ - 1) % width_, y, 0), true);
        star.set(edge_index(x, y, 1), true);
        star.set(edge_index(x, (y + height_ - 1) % height_, 1), true);
        stars_.append_row(star);
      }
    }
  }

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }
  std::size_t vertex_count() const { return width_ * height_; }
  std::size_t edge_count() const { return 2 * width_ * height_; }

  /// direction 0: edge from (x, y) to (x+1, y); direction 1: to (x, y+1).
  std::size_t edge_index(std::size_t x, std::size_t y, int direction) const {
    return 2 * (y * width_ + x) + static_cast<std::size_t>(direction);
  }

  std::pair<std::size_t, std::size_t> edge_endpoints_vertices(std::size_t edge) const {
    std::size_t cell = edge / 2;
    int dir = static_cast<int>(edge % 2);
    std::size_t x = cell % width_, y = cell / width_;
    std::size_t vx = dir == 0 ? (x + 1) % width_ : x;
    std::size_t vy = dir == 0 ? y : (y + 1) % height_;
    return {y * width_ + x, vy * width_ + vx};
  }

  const BitMatrix& star_rows() const { return stars_; }

  /// Non-contractible X-loop winding horizontally (all horizontal edges in
  /// row 0) or vertically (all vertical edges in column 0).
  BitVec winding_loop(bool horizontal) const {
    BitVec loop(edge_count());
    if (horizontal) {
      for (std::size_t x = 0; x < width_; x++) {
        loop.set(edge_index(x, 0, 0), true);
      }
    } else {
      for (std::size_t y = 0; y < height_; y++) {
        loop.set(edge_index(0, y, 1), true);
      }
    }
    return loop;
  }

private:
  std::size_t width_;
  std::size_t height_;
  BitMatrix stars_;
};

struct Torus {
  StarLattice lattice;
  SpinFlipGroup group;
};

inline Torus build_torus(std::size_t width, std::size_t height) {
  StarLattice lattice(width, height);
  SpinFlipGroup group = SpinFlipGroup::from_generators(lattice.star_rows());
  return {std::move(lattice), std::move(group)};
}

/// Axis-aligned rectangle of vertices, top-left (x, y), w x h vertices,
/// coordinates wrapping around the torus.
struct Rect {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t w = 1;
  std::size_t h = 1;
};

struct RegionCut {
  Rect rect;
  std::vector<std::size_t> side_a_edges;  // edges inside or crossing the boundary
  std::size_t punctures = 0;       // sigma: edges with exactly one endpoint inside
  std::size_t boundary_stars = 0;  // n_AB: outside stars touching side-A edges
};

/// Side A holds every edge with at least one endpoint in the rectangle's
/// vertex set: edges strictly inside plus edges crossing the boundary
/// contour drawn just outside those vertices.
inline std::pair<RegionCut, Partition> region_cut(const StarLattice& l, const Rect& rect) {
  if (rect.w == 0 || rect.h == 0) {
    throw std::invalid_argument("rectangle must be nonempty");
  }
  if (rect.w >= l.width() || rect.h >= l.height()) {
    throw std::invalid_argument(
        "rectangle wraps a full torus cycle; the cut is not a closed disk");
  }
  if (rect.x >= l.width() || rect.y >= l.height()) {
    throw std::invalid_argument("rectangle origin out of range");
  }
  std::vector<bool> inside(l.vertex_count(), false);
  for (std::size_t j = 0; j < rect.h; j++) {
    for (std::size_t i = 0; i < rect.w; i++) {
      std::size_t vx = (rect.x + i) % l.width();
      std::size_t vy = (rect.y + j) % l.height();
      inside[vy * l.width() + vx] = true;
    }
  }
  RegionCut cut;
  cut.rect = rect;
  std::vector<bool> boundary_star(l.vertex_count(), false);
  for (std::size_t e = 0; e < l.edge_count(); e++) {
    auto [u, v] = l.edge_endpoints_vertices(e);
    int count = static_cast<int>(inside[u]) + static_cast<int>(inside[v]);
    if (count > 0) {
      cut.side_a_edges.push_back(e);
    }
    if (count == 1) {
      cut.punctures++;
      boundary_star[inside[u] ? v : u] = true;
    }
  }
  for (std::size_t v = 0; v < l.vertex_count(); v++) {
    if (boundary_star[v]) {
      cut.boundary_stars++;
    }
  }
  Partition p(cut.side_a_edges, l.edge_count());
  return {std::move(cut), std::move(p)};
}

struct ArealawReport {
  double entropy_bits = 0.0;
  std::size_t boundary_stars = 0;  // n_AB
  std::size_t punctures = 0;       // sigma
  long offset = 0;                 // n_AB - S, computed, never assumed
  bool saturated = false;          // S equals the puncture bound sigma
};

/// Entropy of the torus ground state across the rectangle cut, via the rank
/// formula, reported against the boundary-star count and the puncture bound
/// S <= sigma.
inline ArealawReport arealaw_check(const Torus& t, const Rect& rect) {
  auto [cut, partition] = region_cut(t.lattice, rect);
  EntropyReport er = homogeneous_entropy(t.group, partition);
  ArealawReport out;
  out.entropy_bits = er.entropy_bits;
  out.boundary_stars = cut.boundary_stars;
  out.punctures = cut.punctures;
  out.offset = static_cast<long>(cut.boundary_stars) - static_cast<long>(er.entropy_bits);
  out.saturated = er.entropy_bits == static_cast<double>(cut.punctures);
  return out;
}

struct PhysicalCheckReport {
  double s_phys = 0.0;
  double s_g = 0.0;
  bool equal = false;
};

/// Loop-sector coefficients for a physical state: the commutant is
/// instantiated as the group generated by the two non-contractible X-loops,
/// sector order {identity, horizontal, vertical, both}.
using LoopCoefficients = std::array<std::complex<double>, 4>;

/// Builds sum c(w) w |G> in the dense oracle and compares its entropy across
/// the cut with the G-homogeneous entropy.
inline PhysicalCheckReport physical_state_entropy_check(
    const Torus& t, const Rect& rect, const LoopCoefficients& coefficients,
    std::size_t guard = kDefaultAmplitudeGuard, double tol = 1e-9) {
  double norm = 0.0;
  for (const auto& c : coefficients) {
    norm += std::norm(c);
  }
  if (norm <= 0.0) {
    throw std::invalid_argument("loop-sector coefficients must not all vanish");
  }
  auto [cut, partition] = region_cut(t.lattice, rect);
  DenseState ground = build_homogeneous(t.group, guard);
  BitVec loops[4] = {BitVec(t.lattice.edge_count()), t.lattice.winding_loop(true),
                     t.lattice.winding_loop(false),
                     t.lattice.winding_loop(true) ^ t.lattice.winding_loop(false)};
  DenseState phys(ground.n(), 2, guard);
  for (int sector = 0; sector < 4; sector++) {
    if (coefficients[sector] == std::complex<double>(0.0, 0.0)) {
      continue;
    }
    DenseState shifted = apply_pauli(ground, PauliString(loops[sector],
                                                         BitVec(t.lattice.edge_count())));
    for (std::size_t i = 0; i < phys.size(); i++) {
      phys[i] += coefficients[sector] * shifted[i];
    }
  }
  phys.normalize();
  PhysicalCheckReport out;
  out.s_phys = entropy(phys, partition);
  out.s_g = entropy(ground, partition);
  out.equal = std::abs(out.s_phys - out.s_g) < tol;
  return out;
}

}  // namespace gstate
