#pragma once

#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gstate/graph.hpp"
#include "gstate/partition.hpp"
#include "gstate/qudit.hpp"
#include "gstate/spin_flip_group.hpp"

namespace gstate {

struct GroupFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupFile {
  std::size_t n = 0;
  uint32_t d = 2;
  std::vector<std::string> generators;

  SpinFlipGroup as_spin_flip_group() const {
    if (d != 2) {
      throw GroupFileError("group file has d=" + std::to_string(d) +
                           "; the qubit path requires d=2");
    }
    for (const std::string& g : generators) {
      if (g.size() != n) {
        throw GroupFileError("generator '" + g + "' does not have n=" + std::to_string(n) +
                             " digits");
      }
    }
    return SpinFlipGroup::from_strings(generators, n);
  }

  QuditShiftGroup as_qudit_group() const {
    for (const std::string& g : generators) {
      if (g.size() != n) {
        throw GroupFileError("generator '" + g + "' does not have n=" + std::to_string(n) +
                             " digits");
      }
    }
    if (generators.empty()) {
      return QuditShiftGroup::trivial(n, d);
    }
    return QuditShiftGroup::from_generators(BitMatrix::from_strings(generators, d));
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) {
    return "";
  }
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace detail

/// Group file: header "n=<int> d=<int>" then one generator per line as a
/// digit string over {0..d-1}. '#' starts a comment.
inline GroupFile parse_group_text(std::istream& in, const std::string& source = "<input>") {
  GroupFile out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    line_no++;
    std::string t = detail::trim(line.substr(0, line.find('#')));
    if (t.empty()) {
      continue;
    }
    if (!header_seen) {
      std::size_t n = 0;
      unsigned d = 2;
      if (std::sscanf(t.c_str(), "n=%zu d=%u", &n, &d) < 1) {
        throw GroupFileError(source + ":" + std::to_string(line_no) +
                             ": expected header 'n=<int> d=<int>', got '" + t + "'");
      }
      out.n = n;
      out.d = d;
      header_seen = true;
      continue;
    }
    if (t.size() != out.n) {
      throw GroupFileError(source + ":" + std::to_string(line_no) + ": generator '" + t +
                           "' must have exactly " + std::to_string(out.n) + " digits");
    }
    for (char c : t) {
      if (c < '0' || c >= static_cast<char>('0' + out.d)) {
        throw GroupFileError(source + ":" + std::to_string(line_no) + ": digit '" +
                             std::string(1, c) + "' out of range for d=" + std::to_string(out.d));
      }
    }
    out.generators.push_back(t);
  }
  if (!header_seen) {
    throw GroupFileError(source + ": missing 'n=<int> d=<int>' header");
  }
  return out;
}

inline GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GroupFileError("cannot open group file: " + path);
  }
  return parse_group_text(in, path);
}

inline std::string group_to_text(const SpinFlipGroup& g) {
  std::string out = "n=" + std::to_string(g.n()) + " d=2\n";
  for (std::size_t r = 0; r < g.k(); r++) {
    out += g.basis().row_string(r) + "\n";
  }
  return out;
}

/// Graph file: header "n=<int>" then one edge per line "u v", 1-based.
inline Graph parse_graph_text(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool header_seen = false;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (std::getline(in, line)) {
    line_no++;
    std::string t = detail::trim(line.substr(0, line.find('#')));
    if (t.empty()) {
      continue;
    }
    if (!header_seen) {
      if (std::sscanf(t.c_str(), "n=%zu", &n) != 1) {
        throw GroupFileError(source + ":" + std::to_string(line_no) +
                             ": expected header 'n=<int>', got '" + t + "'");
      }
      header_seen = true;
      continue;
    }
    std::size_t u = 0, v = 0;
    if (std::sscanf(t.c_str(), "%zu %zu", &u, &v) != 2) {
      throw GroupFileError(source + ":" + std::to_string(line_no) +
                           ": expected edge 'u v', got '" + t + "'");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GroupFileError(source + ":" + std::to_string(line_no) + ": vertex out of range 1.." +
                           std::to_string(n));
    }
    edges.emplace_back(u - 1, v - 1);
  }
  if (!header_seen) {
    throw GroupFileError(source + ": missing 'n=<int>' header");
  }
  return Graph(n, std::move(edges));
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GroupFileError("cannot open graph file: " + path);
  }
  return parse_graph_text(in, path);
}

/// Weighted-state JSON:
/// {
///   "group": {"n": 4, "d": 2, "generators": ["1111"]},
///   "partition": "1,2",
///   "alpha_A": {"0000": [1.0, 0.0], ...},
///   "alpha_B": {...},
///   "beta": {...}
/// }
/// Complex values are [re, im] pairs. Each table must cover exactly the
/// enumerated subgroup / coset-representative elements of the group.
inline WeightedGState parse_weighted_json(const nlohmann::json& j) {
  auto table = [&](const char* key) {
    std::map<std::string, std::complex<double>> m;
    if (!j.contains(key) || !j.at(key).is_object()) {
      throw GroupFileError(std::string("weighted state: missing object field '") + key + "'");
    }
    for (const auto& [k, v] : j.at(key).items()) {
      if (!v.is_array() || v.size() != 2) {
        throw GroupFileError(std::string("weighted state: '") + key + "' value for " + k +
                             " must be a [re, im] pair");
      }
      m[k] = {v[0].get<double>(), v[1].get<double>()};
    }
    return m;
  };
  if (!j.contains("group")) {
    throw GroupFileError("weighted state: missing 'group'");
  }
  const nlohmann::json& jg = j.at("group");
  std::size_t n = jg.at("n").get<std::size_t>();
  if (jg.value("d", 2) != 2) {
    throw GroupFileError("weighted states are defined for d=2 spin-flip groups");
  }
  SpinFlipGroup group =
      SpinFlipGroup::from_strings(jg.value("generators", std::vector<std::string>{}), n);
  Partition partition = Partition::from_spec(j.at("partition").get<std::string>(), n);
  return WeightedGState::from_maps(group, partition, table("alpha_A"), table("alpha_B"),
                                   table("beta"));
}

inline WeightedGState load_weighted_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw GroupFileError("cannot open weighted-state file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw GroupFileError(path + ": " + e.what());
  }
  return parse_weighted_json(j);
}

}  // namespace gstate
