#pragma once

// Signed permutations (type B) as symmetric words.
//
// sigma in W_n is the word sigma_{-n} ... sigma_{-1} | sigma_1 ... sigma_n
// over the letters -n < ... < -1 < 1 < ... < n with sigma_{-i} = -sigma_i.
// Generator tau_0 swaps positions -1 and 1; tau_i (1 <= i < n) swaps
// positions i, i+1 and their mirrors. In words, generator 0 is tau_0.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxpart/coxeter.hpp"
#include "coxpart/perm_a.hpp"

namespace coxpart::perm {

class SignedPerm {
 public:
  SignedPerm() = default;
  // sigma_1 ... sigma_n; throws ErrorKind::precondition unless the absolute
  // values form a permutation of 1..n.
  explicit SignedPerm(std::vector<int> positive);
  // all 2n letters; throws ErrorKind::set_not_symmetric when the word is not
  // symmetric.
  static SignedPerm from_full(const std::vector<int>& full);
  static SignedPerm identity(int n);

  int n() const { return static_cast<int>(pos_.size()); }
  // i in -n..-1, 1..n
  int at(int i) const { return i > 0 ? pos_[i - 1] : -pos_[-i - 1]; }
  const std::vector<int>& positive() const { return pos_; }
  std::vector<int> full() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> pos_;
};

PairSet invs_B(const SignedPerm& s);

// One representative inversion per reflection: (-k, k) stands for the
// transposition (-k k); (a, b) with |a| != |b| stands for (a b)(-b -a) and
// is the smaller of (a, b) and (-b, -a).
PairSet reflections_from_invs(const PairSet& inv);
std::string reflection_text(const std::pair<int, int>& r);

// Transitivity, the interval condition and (a, b) => (-b, -a) for |a| != |b|.
bool is_inversion_set_B(const PairSet& inv, int n);

// Order-preserving relabelling of a symmetric word into -k..k; throws
// ErrorKind::set_not_symmetric.
SignedPerm std_B(const InjWord& w);
// Standardization of a word over an antisymmetric letter set; throws
// ErrorKind::set_not_antisymmetric.
Perm std_A_restricted(const InjWord& w);

// Removes n and -n; n >= 2.
SignedPerm dec_B(const SignedPerm& s);
// Multiplication by the longest element: negates every letter.
SignedPerm woB_multiply(const SignedPerm& s);

// tau_0 when sigma_1 < 0, tau_i when sigma_i > sigma_{i+1}
std::vector<int> right_descents_B(const SignedPerm& s);
std::size_t descents_B(const SignedPerm& s);

bool is_bipartition_B(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v);

bool n_in_positive_position(const SignedPerm& s);

struct DecompositionB {
  std::set<int> left, forgotten, right;
  SignedPerm w_left, u_left, v_left;
  Perm w_right, u_right, v_right;
};

// n in positive position. Throws ErrorKind::not_a_bipartition and
// ErrorKind::n_not_positive.
DecompositionB decompose_B(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v);

struct DecompositionBNegative {
  std::set<int> left, forgotten, right;
  Perm w_left, u_left, v_left;
  SignedPerm w_right, u_right, v_right;
};

// n in negative position: left letters are a < n before n in w. Throws
// ErrorKind::not_a_bipartition and ErrorKind::n_not_negative.
DecompositionBNegative decompose_B_negative(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v);

// Unordered pairs splitting invs_B(w), {e, w} included.
std::vector<std::pair<SignedPerm, SignedPerm>> bipartitions_B(const SignedPerm& w);
std::vector<SignedPerm> all_signed_perms(int n);

// "4 -5 -2 -6 3 1 | -1 -3 6 2 5 -4", the same without the bar, or only the
// positive half "-1 -3 6 2 5 -4"; commas also separate letters.
SignedPerm parse_signed(const std::string& text);
std::string format_signed(const SignedPerm& s);

// Bridge to the Tits representation of B_n (generator 0 on the label-4 edge).
Word reduced_word_B(const SignedPerm& s);
SignedPerm signed_from_word(const Word& word, int n);
GroupElement coxeter_from_signed(const CoxeterSystem& sys, const SignedPerm& s);
SignedPerm signed_from_coxeter(const CoxeterSystem& sys, const GroupElement& g);

struct TypeBSweep {
  int n = 0;
  std::size_t elements = 0;
  std::size_t bipartitions = 0;
  std::size_t conjecture1 = 0;        // d_R additivity
  std::size_t reflection_count = 0;   // |T(sigma)| = l(sigma)
  std::size_t dec_preserved = 0;      // {dec u, dec v} splits dec w
  std::size_t longest_reduction = 0;  // n negative in w, u: the three clauses
  std::size_t cut_shape = 0;          // w = F.. -n | L | n R..
  std::size_t cross_inversions = 0;   // none from F+L to R or from F to L+R
  std::size_t descent_colors = 0;     // every descent stays in one class
  std::size_t extra_descents = 0;     // b .. c across other classes forces b < c
  std::size_t decomposition = 0;      // n positive: splits and descent sums
  std::size_t negative_decomposition = 0;  // n negative: same statements
  std::size_t invs_characterization = 0;   // pair sets vs inversion sets
};
TypeBSweep sweep_type_b(int n, unsigned workers = 1);

}  // namespace coxpart::perm
