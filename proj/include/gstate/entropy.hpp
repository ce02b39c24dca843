#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "gstate/partition.hpp"
#include "gstate/spin_flip_group.hpp"

namespace gstate {

struct EntropyReport {
  double entropy_bits = 0.0;
  std::size_t dim_a = 0;          // log2 |G_A| (generator count over the field)
  std::size_t dim_b = 0;          // log2 |G_B|
  std::size_t quotient_dim = 0;   // generator count of G_AB over the field
  double log2_quotient = 0.0;     // log2 |G_AB| in bits
  bool saturated = false;
};

inline double entropy_of_distribution(const std::vector<double>& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw std::invalid_argument("negative weight");
    }
    total += w;
  }
  if (total <= 0.0) {
    throw std::invalid_argument("entropy of an all-zero distribution");
  }
  double s = 0.0;
  for (double w : weights) {
    double p = w / total;
    if (p > 0.0) {
      s -= p * std::log2(p);  // 0 log 0 := 0
    }
  }
  return s;
}

/// Exact entanglement entropy of the G-homogeneous state: the zero-vacuum
/// overlap condition holds for every spin-flip group, so the quotient bound
/// log2 |G_AB| is always saturated. Equivalently
/// S = rank(M_A) + rank(M_B) - k.
inline EntropyReport homogeneous_entropy(const SpinFlipGroup& g, const Partition& p) {
  SpinFlipGroup::SubgroupDims dims = g.subgroup_dims(p);
  std::size_t quotient = g.k() - dims.dim_a - dims.dim_b;
  EntropyReport r;
  r.entropy_bits = static_cast<double>(quotient);
  r.dim_a = dims.dim_a;
  r.dim_b = dims.dim_b;
  r.quotient_dim = quotient;
  r.log2_quotient = static_cast<double>(quotient);
  r.saturated = true;
  return r;
}

/// True iff G = G_A x G_B across the partition, which forces S = 0.
inline bool is_product_partition(const SpinFlipGroup& g, const Partition& p) {
  return g.quotient_order_log2(p) == 0;
}

/// Entropy upper bound for a weighted G-state with separable coefficients:
/// -sum_h |N_A N_B beta(h)|^2 log2 |N_A N_B beta(h)|^2 after renormalizing
/// the assembled state to unit norm. With the zero-vacuum condition the norm
/// factorizes, so the bound reduces to the entropy of |beta|^2.
inline double weighted_bound(const WeightedGState& w) {
  std::vector<double> weights;
  weights.reserve(w.beta().size());
  for (const auto& [key, c] : w.beta()) {
    weights.push_back(std::norm(c));
  }
  return entropy_of_distribution(weights);
}

/// The bound is attained for spin-flip groups (zero vacuum overlaps make the
/// coset branches bi-orthogonal), so this reports the exact entropy.
inline EntropyReport weighted_entropy_exact(const WeightedGState& w) {
  if (!w.group().zerovev_holds()) {
    throw std::logic_error("weighted_entropy_exact: zero-vev condition violated");
  }
  EntropyReport r = homogeneous_entropy(w.group(), w.partition());
  r.entropy_bits = weighted_bound(w);
  r.saturated = true;
  return r;
}

}  // namespace gstate
