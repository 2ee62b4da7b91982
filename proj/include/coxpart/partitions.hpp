#pragma once

// Partitions of elements: disjoint splittings Phi(w) = Phi(u_1) + ... + Phi(u_k).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxpart/ball.hpp"

namespace coxpart {

struct Bipartition {
  ElementId u = 0;  // u <= v in ball order
  ElementId v = 0;
  bool proper = false;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// v with Phi(v) = Phi(w) \ Phi(u), if that set is an inversion set.
// Throws ErrorKind::not_a_prefix unless u <=_R w.
std::optional<ElementId> complement_in(const Ball& ball, ElementId w, ElementId u);

// All bipartitions of w, including {e, w}, sorted by (u, v).
std::vector<Bipartition> bipartitions(const Ball& ball, ElementId w);
bool has_proper_bipartition(const Ball& ball, ElementId w);
bool is_partition_irreducible(const Ball& ball, ElementId w);

// Sets of k distinct elements whose inversion sets split Phi(w); each set is
// listed once with increasing ids.
std::vector<std::vector<ElementId>> k_partitions(const Ball& ball, ElementId w, std::size_t k);

bool is_bipartition_of(const Ball& ball, ElementId w, ElementId u, ElementId v);

// ---------------------------------------------------------------- reports

struct Violation {
  std::string top;
  std::string u;
  std::string v;
  std::string detail;
};

struct Report {
  std::string group;
  std::size_t radius = 0;
  std::string conjecture;
  std::size_t checked_elements = 0;
  std::size_t checked_pairs = 0;
  std::vector<Violation> violations;
  double elapsed_ms = 0;

  // `with_timing` false drops elapsed_ms so equal runs give equal bytes.
  std::string to_json(bool with_timing = true) const;
};

// 1-based word text of a ball element ("e" for the identity).
std::string word_text(const Ball& ball, ElementId id);
std::string word_text(const Word& w, std::size_t rank);
// Inverse of word_text: "32123", "1,10,2" or "e". Throws
// ErrorKind::index_out_of_range for labels outside 1..rank and
// ErrorKind::malformed_spec for other junk.
Word parse_word_labels(const std::string& text, std::size_t rank);

// d_R(w) = d_R(u) + d_R(v) over the bipartitions of w.
std::size_t check_conjecture1(const Ball& ball, ElementId w, std::vector<Violation>& out);
// coatom([e,w]) = coatom([e,u]) + coatom([e,v]) over the diameters of [e,w].
std::size_t check_conjecture2(const Ball& ball, ElementId w, std::vector<Violation>& out);
// atom([e,w]) = atom([u,w]) + atom([v,w]) over the diameters of [e,w].
std::size_t check_conjecture3(const Ball& ball, ElementId w, std::vector<Violation>& out);

// Runs one of the checks above (1, 2 or 3) on every element of the ball.
Report verify_conjecture(const Ball& ball, int conjecture, unsigned workers = 1);

// Bipartitions from complements against the diameter pair scan, every element.
Report verify_diameters_match(const Ball& ball, unsigned workers = 1);

struct LongestReport {
  std::size_t group_order = 0;
  std::size_t total = 0;
  std::size_t proper = 0;
  bool matches_coset_pairs = false;  // bipartitions(w0) = {{u, u w0}}
  bool descents_add_up = false;      // d_R(u) + d_R(v) = |S|
};

// Needs the whole (finite) group in the ball.
LongestReport verify_longest(const Ball& ball);

struct ReductionClauses {
  bool i = false;    // {u, v} splits w
  bool ii = false;   // {u, w w0} splits v w0
  bool iii = false;  // {w w0, v} splits u w0
};
ReductionClauses verify_reduction_longest(const Ball& ball, ElementId w, ElementId u, ElementId v);

struct ThreePartitionReport {
  std::size_t partitions = 0;  // 3-partitions of w0
  std::size_t proper_partitions = 0;
  std::size_t violations = 0;  // rank additivity failures among all
  std::size_t proper_violations = 0;
  bool bijection_holds = false;
};
ThreePartitionReport three_partition_check(const Ball& ball);

ElementId longest_in_ball(const Ball& ball);

}  // namespace coxpart
