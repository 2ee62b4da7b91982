#pragma once

// Symmetric groups in one-line notation.
//
// A permutation w of [n] is the word w_1 ... w_n. Its inversions are the
// pairs (w_j, w_i) with i < j and w_i > w_j, written smaller letter first.
// Right multiplication by tau_i swaps the letters in positions i and i+1.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxpart/coxeter.hpp"

namespace coxpart::perm {

using Perm = std::vector<int>;     // one-line notation over 1..n
using InjWord = std::vector<int>;  // letters without repetition
using PairSet = std::set<std::pair<int, int>>;

// Throws ErrorKind::repeated_letter.
PairSet invs(const InjWord& w);
Perm standardize(const InjWord& w);
// subword of the letters in `letters`
InjWord restrict_word(const InjWord& w, const std::set<int>& letters);
// number of positions i with w_i > w_{i+1}
std::size_t descents(const InjWord& w);

// Transitivity and the interval condition on pairs within [n].
bool is_inversion_set_A(const PairSet& inv, int n);
// The permutation with these inversions. Throws ErrorKind::precondition
// when `inv` is not an inversion set.
Perm perm_from_invs(const PairSet& inv, int n);

// Removes the letter n.
Perm dec_A(const Perm& w);

bool is_bipartition_A(const Perm& w, const Perm& u, const Perm& v);

struct DecompositionA {
  std::set<int> left;
  std::set<int> right;
  Perm u_left, v_left, w_left;
  Perm u_right, v_right, w_right;
};

// Cut around the letter `pivot` (n by default): right letters are those a
// with (a, pivot) an inversion of w, plus the pivot itself. Throws
// ErrorKind::not_a_bipartition.
DecompositionA decompose_A(const Perm& w, const Perm& u, const Perm& v, int pivot = 0);

// d_R(dec u) + d_R(dec v) = d_R(u) + d_R(v) - 1. Throws
// ErrorKind::precondition unless {u, v} splits a permutation whose first
// letter is its largest.
bool decreasing_check_A(const Perm& u_right, const Perm& v_right);

// Unordered pairs {u, v} splitting invs(w), {e, w} included, u <= v
// lexicographically.
std::vector<std::pair<Perm, Perm>> bipartitions_A(const Perm& w);

std::vector<Perm> all_perms(int n);
Perm identity_perm(int n);

// "526341" or "5,2,6,3,4,1"
Perm parse_perm(const std::string& text);
std::string format_perm(const Perm& w);

// Bridge to the Tits representation of A_{n-1}. Words use 0-based
// generators: generator i is tau_{i+1}.
Word reduced_word_A(const Perm& w);
Perm perm_from_word(const Word& word, int n);
GroupElement coxeter_from_perm(const CoxeterSystem& sys, const Perm& w);
Perm perm_from_coxeter(const CoxeterSystem& sys, const GroupElement& g);

// Counts of failures of the type-A statements over every bipartition of
// every permutation of [n].
struct TypeASweep {
  int n = 0;
  std::size_t permutations = 0;
  std::size_t bipartitions = 0;
  std::size_t conjecture1 = 0;         // d_R(w) = d_R(u) + d_R(v)
  std::size_t dec_preserved = 0;       // {dec u, dec v} splits dec w
  std::size_t cross_inversions = 0;    // no (a, c) with a left, c right
  std::size_t descent_classes = 0;     // descents stay inside one class
  std::size_t decomposition = 0;       // left/right words split, descents add
  std::size_t decreasing = 0;          // identity on the right words
  std::size_t letters_mirror = 0;      // w_1 = n: a before n in u iff after in v
  std::size_t invs_characterization = 0;  // pair sets passing both conditions = inversion sets
};
// `properties` false checks only d_R additivity (cheap enough for n = 7).
TypeASweep sweep_type_a(int n, bool properties = true, unsigned workers = 1);

}  // namespace coxpart::perm
