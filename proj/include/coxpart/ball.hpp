#pragma once

// Balls of the right weak order and intervals inside them.
//
// A Ball holds every element of length <= radius, ordered by (length,
// first-seen order) of a deterministic breadth-first search. Alongside each
// element it keeps Phi(w) both as a bitset and as a sorted id list, its
// descent masks and its right neighbours w*s.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxpart/coxeter.hpp"

namespace coxpart {

using ElementId = std::uint32_t;
inline constexpr std::int32_t kOutside = -1;

class Ball {
 public:
  static constexpr std::size_t kDefaultElementCap = 4'000'000;

  // Throws ErrorKind::resource_cap when more than `element_cap` elements
  // would be stored.
  static Ball build(const CoxeterGraph& graph, std::size_t radius,
                    std::size_t element_cap = kDefaultElementCap);

  // Rebuilds a ball from its element words listed in ball order (cache
  // replay). Throws ErrorKind::cache_error when the words do not describe a
  // ball of this radius.
  static Ball from_words(const CoxeterGraph& graph, std::size_t radius, const std::vector<Word>& words);

  const CoxeterSystem& system() const { return sys_; }
  const CoxeterGraph& graph() const { return sys_.graph(); }
  std::size_t rank() const { return sys_.rank(); }
  std::size_t radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }

  const GroupElement& element(ElementId id) const { return elements_[id]; }
  std::size_t length(ElementId id) const { return lengths_[id]; }
  DescentMask right_descents(ElementId id) const { return right_desc_[id]; }
  DescentMask left_descents(ElementId id) const { return left_desc_[id]; }
  const RootSet& inversion_set(ElementId id) const { return phi_bits_[id]; }
  const std::vector<std::uint32_t>& inversion_ids(ElementId id) const { return phi_ids_[id]; }

  // Reduced word through the search tree (0-based generators).
  Word word(ElementId id) const;

  // id of w*s, or kOutside when w*s has length radius+1.
  std::int32_t neighbour(ElementId id, std::size_t s) const { return nbr_[id * rank() + s]; }
  // Root added by w -> w*s when s is not a right descent (w(alpha_s)); the
  // root removed when it is.
  std::int32_t edge_root(ElementId id, std::size_t s) const { return edge_root_[id * rank() + s]; }

  // Ids of elements of length `len` are [level_begin(len), level_end(len)).
  ElementId level_begin(std::size_t len) const { return level_offsets_[len]; }
  ElementId level_end(std::size_t len) const { return level_offsets_[len + 1]; }

  std::optional<ElementId> find(const GroupElement& w) const;
  std::optional<ElementId> find_by_set(const RootSet& phi) const;
  // Throws ErrorKind::index_out_of_range when the word leaves the ball.
  ElementId id_of_word(const Word& word) const;

  const RootRegistry& registry() const { return registry_; }
  // id of s(root), kOutside when the image is negative or unregistered.
  std::int32_t reflect_root(std::size_t s, std::uint32_t root_id) const {
    return reflect_[s * registry_.size() + root_id];
  }

  // Peels simple roots off `ids` using registered roots only. Returns the
  // element when the set is Phi(v) for some v in the ball, nullopt otherwise.
  // A biclosed set of size <= radius is always Phi(v) of a ball element whose
  // peeling stays among registered roots, so nullopt is exact for those.
  std::optional<ElementId> element_from_biclosed(const std::vector<std::uint32_t>& ids) const;

  // Per-length element counts.
  std::vector<std::uint64_t> growth() const;

 private:
  explicit Ball(CoxeterSystem sys) : sys_(std::move(sys)) {}
  ElementId add(GroupElement g, std::int32_t parent, int gen, std::size_t element_cap);
  void finish();

  CoxeterSystem sys_;
  std::size_t radius_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<std::uint32_t> lengths_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int8_t> parent_gen_;
  std::vector<DescentMask> right_desc_;
  std::vector<DescentMask> left_desc_;
  std::vector<RootSet> phi_bits_;
  std::vector<std::vector<std::uint32_t>> phi_ids_;
  std::vector<std::int32_t> nbr_;
  std::vector<std::int32_t> edge_root_;
  std::vector<ElementId> level_offsets_;
  std::unordered_map<GroupElement, ElementId, ElementHash> index_;
  std::unordered_map<RootSet, ElementId, RootSetHash> set_index_;
  RootRegistry registry_;
  std::vector<std::int32_t> reflect_;
};

struct Interval {
  ElementId bottom = 0;
  ElementId top = 0;
  std::vector<ElementId> members;  // ball order

  bool contains(ElementId id) const;
};

bool below(const Ball& ball, ElementId u, ElementId w);  // u <=_R w

// Members g with Phi(u) <= Phi(g) <= Phi(w). Throws ErrorKind::not_a_prefix
// unless bottom <=_R top.
Interval interval(const Ball& ball, ElementId top);
Interval interval(const Ball& ball, ElementId bottom, ElementId top);

// [e, w] collected by walking down right descents from w.
std::vector<ElementId> prefix_set_by_descents(const Ball& ball, ElementId top);

std::vector<ElementId> atoms(const Ball& ball, const Interval& iv);
std::vector<ElementId> coatoms(const Ball& ball, const Interval& iv);
std::size_t atom_count(const Ball& ball, ElementId bottom, ElementId top);
std::size_t coatom_count(const Ball& ball, ElementId top);

using ElementPair = std::pair<ElementId, ElementId>;  // first <= second

// Unordered pairs {u, v} in [e, w] with d(u, v) = l(w), sorted.
std::vector<ElementPair> diameters(const Ball& ball, ElementId top);

std::size_t distance(const Ball& ball, ElementId u, ElementId v);

// Throws ErrorKind::lattice_violation when no unique extremum exists.
ElementId meet(const Ball& ball, const std::vector<ElementId>& xs);
ElementId join_bounded(const Ball& ball, const std::vector<ElementId>& xs, ElementId top);

// w^-1 g. Throws ErrorKind::not_a_prefix unless g <=_R w.
GroupElement phi_map(const Ball& ball, ElementId top, ElementId g);

}  // namespace coxpart
