#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxpart/quadring.hpp"

namespace coxpart {

// Labelled Coxeter graph. Nodes are 0-based internally; every textual
// interface (graph files, words on the command line) is 1-based.
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  // `labels` is row-major rank x rank; validated (symmetry, diagonal 1,
  // off-diagonal a supported label).
  CoxeterGraph(std::size_t rank, std::vector<int> labels, std::string name = {});

  // All pairs commute (m = 2) until set_label is called.
  static CoxeterGraph free_of_edges(std::size_t rank, std::string name = {});

  std::size_t rank() const { return rank_; }
  int label(std::size_t i, std::size_t j) const { return labels_[i * rank_ + j]; }
  const std::vector<int>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  // 2cos(pi/m_ij) (and 2 on the diagonal is *not* returned: diagonal gives 0).
  const QuadScalar& edge_value(std::size_t i, std::size_t j) const { return edge_values_[i * rank_ + j]; }

  void set_label(std::size_t i, std::size_t j, int m);
  void set_name(std::string name) { name_ = std::move(name); }

  // Stable text form used for hashing and cache keys, independent of name.
  std::string canonical() const;
  std::uint64_t canonical_hash() const;

  // JSON document { "rank": n, "edges": [[i, j, m], ...] } with 1-based nodes
  // and only non-commuting pairs listed.
  std::string to_json() const;

  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.rank_ == b.rank_ && a.labels_ == b.labels_;
  }

 private:
  void refresh_values();

  std::size_t rank_ = 0;
  std::vector<int> labels_;
  std::vector<QuadScalar> edge_values_;
  std::string name_;
};

// Named family ("A3", "B4", "D5", "F4", "H3", "I2(6)", "affineA2",
// "affineB2", "affineG2", "tri(3,3,4)", "paw", "D4-fig1", "universal(3)")
// or an explicit JSON document. Throws ErrorKind::malformed_spec or
// ErrorKind::unsupported_label.
CoxeterGraph parse_graph(const std::string& spec);

// Reads a JSON graph document from disk.
CoxeterGraph load_graph_file(const std::string& path);

}  // namespace coxpart
