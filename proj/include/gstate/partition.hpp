#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gstate {

/// Bipartition of sites {0..n-1} into ordered sides A and B. Either side may
/// be empty. Site indices are 0-based internally; the CLI spec string is
/// 1-based.
class Partition {
public:
  Partition() = default;

  Partition(std::vector<std::size_t> side_a, std::size_t n) : a_(std::move(side_a)), n_(n) {
    std::sort(a_.begin(), a_.end());
    if (std::adjacent_find(a_.begin(), a_.end()) != a_.end()) {
      throw std::invalid_argument("partition side A has duplicate indices");
    }
    if (!a_.empty() && a_.back() >= n) {
      throw std::invalid_argument("partition index out of range");
    }
    std::vector<bool> in_a(n, false);
    for (std::size_t i : a_) {
      in_a[i] = true;
    }
    for (std::size_t i = 0; i < n; i++) {
      if (!in_a[i]) {
        b_.push_back(i);
      }
    }
  }

  /// Parse a comma-separated list of 1-based site indices for side A,
  /// e.g. "1,2,5". An empty string gives an empty side A.
  static Partition from_spec(const std::string& spec, std::size_t n) {
    std::vector<std::size_t> a;
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t comma = spec.find(',', pos);
      std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      if (!tok.empty()) {
        std::size_t idx = 0;
        try {
          idx = std::stoul(tok);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad partition index: '" + tok + "'");
        }
        if (idx < 1 || idx > n) {
          throw std::invalid_argument("partition index " + tok + " out of range 1.." +
                                      std::to_string(n));
        }
        a.push_back(idx - 1);
      }
      if (comma == std::string::npos) {
        break;
      }
      pos = comma + 1;
    }
    return Partition(std::move(a), n);
  }

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& side_a() const { return a_; }
  const std::vector<std::size_t>& side_b() const { return b_; }

  bool in_a(std::size_t site) const {
    return std::binary_search(a_.begin(), a_.end(), site);
  }

  Partition complement() const { return Partition(b_, n_); }

  /// 1-based comma-separated encoding of side A.
  std::string spec_string() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); i++) {
      if (i) {
        s += ',';
      }
      s += std::to_string(a_[i] + 1);
    }
    return s;
  }

private:
  std::vector<std::size_t> a_;
  std::vector<std::size_t> b_;
  std::size_t n_ = 0;
};

}  // namespace gstate
