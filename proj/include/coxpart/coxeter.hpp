#pragma once

// Group elements of a Coxeter system acting on the Tits representation.
//
// An element w is stored as the matrix of its action on V = span{alpha_s} in
// the simple-root basis; column j holds w(alpha_j). Two elements are equal iff
// their matrices are equal (the representation is faithful).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxpart/graph.hpp"
#include "coxpart/quadring.hpp"

namespace coxpart {

using Word = std::vector<int>;            // 0-based generator indices
using DescentMask = std::uint64_t;        // bit s set <=> generator s present

inline int popcount(DescentMask m) { return __builtin_popcountll(m); }

// Coordinates of a vector of V over the simple roots.
struct Root {
  std::vector<QuadScalar> coords;

  friend bool operator==(const Root&, const Root&) = default;
};

std::size_t hash_value(const Root& r);

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept { return hash_value(r); }
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(std::size_t rank, std::vector<QuadScalar> entries);

  static GroupElement identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const QuadScalar& at(std::size_t row, std::size_t col) const { return m_[row * rank_ + col]; }
  const std::vector<QuadScalar>& entries() const { return m_; }

  // w(alpha_j)
  Root column(std::size_t j) const;

  bool is_identity() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  friend class CoxeterSystem;
  std::size_t rank_ = 0;
  std::vector<QuadScalar> m_;
};

std::size_t hash_value(const GroupElement& w);

struct ElementHash {
  std::size_t operator()(const GroupElement& w) const noexcept { return hash_value(w); }
};

// Dense bitset over root ids of a RootRegistry.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::size_t id);
  void erase(std::size_t id);
  bool contains(std::size_t id) const {
    const std::size_t w = id / 64;
    return w < words_.size() && (words_[w] >> (id % 64)) & 1u;
  }
  std::size_t size() const;
  bool empty() const;
  std::vector<std::size_t> ids() const;

  bool is_subset_of(const RootSet& other) const;
  bool intersects(const RootSet& other) const;
  std::size_t symmetric_difference_size(const RootSet& other) const;
  std::size_t intersection_size(const RootSet& other) const;

  RootSet& operator|=(const RootSet& o);
  RootSet& operator^=(const RootSet& o);
  // this \ o
  RootSet minus(const RootSet& o) const;

  friend bool operator==(const RootSet& a, const RootSet& b);

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

std::size_t hash_value(const RootSet& s);

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const noexcept { return hash_value(s); }
};

// Canonical dictionary of positive roots: each distinct root gets a dense id
// in first-seen order. Append-only.
class RootRegistry {
 public:
  std::size_t intern(const Root& r);
  std::optional<std::size_t> find(const Root& r) const;
  const Root& root(std::size_t id) const { return roots_[id]; }
  std::size_t size() const { return roots_.size(); }

  RootSet make_set(const std::vector<Root>& roots);

 private:
  std::vector<Root> roots_;
  std::unordered_map<Root, std::size_t, RootHash> index_;
};

class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterGraph graph);

  const CoxeterGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.rank(); }

  GroupElement identity() const { return GroupElement::identity(rank()); }
  GroupElement simple_reflection(int i) const;
  GroupElement from_word(const Word& word) const;

  Root simple_root(int i) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  Root apply(const GroupElement& a, const Root& r) const;

  // w * s_i and s_i * w in O(rank^2).
  GroupElement right_multiply(const GroupElement& w, int i) const;
  GroupElement left_multiply(int i, const GroupElement& w) const;
  // s_i(r)
  Root reflect(int i, const Root& r) const;

  // Sign of a root: positive if every coordinate is >= 0, negative if every
  // coordinate is <= 0. A zero vector or mixed signs throw
  // ErrorKind::precondition.
  Sign root_sign(const Root& r) const;
  bool is_positive(const Root& r) const { return root_sign(r) == Sign::positive; }
  Root positive_representative(const Root& r) const;

  DescentMask right_descents(const GroupElement& w) const;
  DescentMask left_descents(const GroupElement& w) const;

  std::size_t length(const GroupElement& w) const;
  Word reduced_word(const GroupElement& w) const;

  // Phi(w) as explicit roots, peeled along left descents.
  std::vector<Root> inversion_roots(const GroupElement& w) const;
  RootSet inversion_set(const GroupElement& w, RootRegistry& registry) const;

  std::size_t distance(const GroupElement& u, const GroupElement& v) const;

  // Throws ErrorKind::cap_exceeded when the length passes `cap` first.
  GroupElement longest_element(std::size_t cap) const;
  std::size_t default_longest_cap() const { return 2 * rank() * rank() * 64; }

  // Inverse of w -> Phi(w) on finite sets of positive roots. Throws
  // ErrorKind::not_biclosed when simple-root peeling gets stuck.
  GroupElement element_from_biclosed(const std::vector<Root>& roots) const;
  GroupElement element_from_biclosed(const RootSet& set, const RootRegistry& registry) const;

  // T(uv) = T(u) + u T(v) u^-1, checked on roots.
  bool cocycle_check(const GroupElement& u, const GroupElement& v) const;

  // B(wx, wy) = B(x, y) for the symmetric form 2B of the representation.
  bool preserves_form(const GroupElement& w) const;

 private:
  CoxeterGraph graph_;
};

}  // namespace coxpart
