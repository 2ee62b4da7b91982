#include "coxpart/perm_b.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <unordered_map>

#include "coxpart/error.hpp"
#include "coxpart/parallel.hpp"
#include "pair_mask.hpp"

namespace coxpart::perm {

using namespace detail;

namespace {

bool has(const PairSet& s, int a, int b) { return s.count({a, b}) != 0; }

// -n..-1, 1..n onto 1..2n, order preserving
int to_index(int a, int n) { return a < 0 ? a + n + 1 : a + n; }

std::vector<int> indexed(const SignedPerm& s) {
  std::vector<int> out;
  for (int a : s.full()) out.push_back(to_index(a, s.n()));
  return out;
}

std::vector<int> signed_letters(int n) {
  std::vector<int> out;
  for (int a = -n; a <= n; ++a)
    if (a) out.push_back(a);
  return out;
}

bool symmetric_mask(const PairIndex& ix, std::uint64_t m) {
  const int top = ix.n + 1;
  for (int i = 1; i <= ix.n; ++i)
    for (int j = i + 1; j <= ix.n; ++j)
      if (i + j != top && ix.has(m, i, j) && !ix.has(m, top - j, top - i)) return false;
  return true;
}

}  // namespace

SignedPerm::SignedPerm(std::vector<int> positive) : pos_(std::move(positive)) {
  const int n = static_cast<int>(pos_.size());
  std::vector<char> seen(n + 1, 0);
  for (int a : pos_) {
    const int m = std::abs(a);
    if (m < 1 || m > n || seen[m]) fail(ErrorKind::precondition, "not a signed permutation of 1.." + std::to_string(n));
    seen[m] = 1;
  }
}

SignedPerm SignedPerm::from_full(const std::vector<int>& full) {
  const std::size_t len = full.size();
  if (len % 2) fail(ErrorKind::set_not_symmetric, "odd number of letters");
  for (std::size_t i = 0; i < len; ++i)
    if (full[len - 1 - i] != -full[i]) fail(ErrorKind::set_not_symmetric, "word is not symmetric");
  return SignedPerm(std::vector<int>(full.begin() + static_cast<std::ptrdiff_t>(len / 2), full.end()));
}

SignedPerm SignedPerm::identity(int n) { return SignedPerm(identity_perm(n)); }

std::vector<int> SignedPerm::full() const {
  std::vector<int> out;
  for (auto it = pos_.rbegin(); it != pos_.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos_.begin(), pos_.end());
  return out;
}

PairSet invs_B(const SignedPerm& s) { return invs(s.full()); }

PairSet reflections_from_invs(const PairSet& inv) {
  PairSet out;
  for (const auto& [a, b] : inv) {
    if (a == -b)
      out.emplace(a, b);
    else
      out.insert(std::min(std::pair(a, b), std::pair(-b, -a)));
  }
  return out;
}

std::string reflection_text(const std::pair<int, int>& r) {
  const auto [a, b] = r;
  if (a == -b) return "(" + std::to_string(a) + " " + std::to_string(b) + ")";
  return "(" + std::to_string(a) + " " + std::to_string(b) + ")(" + std::to_string(-b) + " " + std::to_string(-a) + ")";
}

bool is_inversion_set_B(const PairSet& inv, int n) {
  for (const auto& [a, b] : inv)
    if (a == 0 || b == 0 || a >= b || a < -n || b > n) return false;
  const auto letters = signed_letters(n);
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      for (std::size_t k = j + 1; k < letters.size(); ++k) {
        const int a = letters[i], b = letters[j], c = letters[k];
        if (has(inv, a, b) && has(inv, b, c) && !has(inv, a, c)) return false;
        if (has(inv, a, c) && !has(inv, a, b) && !has(inv, b, c)) return false;
      }
  for (const auto& [a, b] : inv)
    if (std::abs(a) != std::abs(b) && !has(inv, -b, -a)) return false;
  return true;
}

SignedPerm std_B(const InjWord& w) {
  const std::set<int> letters(w.begin(), w.end());
  if (letters.size() != w.size()) fail(ErrorKind::repeated_letter, "repeated letter");
  std::vector<int> magnitudes;
  for (int a : letters) {
    if (a == 0 || !letters.count(-a)) fail(ErrorKind::set_not_symmetric, "letter set is not symmetric");
    if (a > 0) magnitudes.push_back(a);
  }
  std::vector<int> out;
  for (int a : w) {
    const int rank = static_cast<int>(std::lower_bound(magnitudes.begin(), magnitudes.end(), std::abs(a)) - magnitudes.begin()) + 1;
    out.push_back(a < 0 ? -rank : rank);
  }
  return SignedPerm::from_full(out);
}

Perm std_A_restricted(const InjWord& w) {
  const std::set<int> letters(w.begin(), w.end());
  for (int a : letters)
    if (letters.count(-a)) fail(ErrorKind::set_not_antisymmetric, "letter set contains a letter and its negative");
  return standardize(w);
}

SignedPerm dec_B(const SignedPerm& s) {
  if (s.n() < 2) fail(ErrorKind::precondition, "dec needs n >= 2");
  std::vector<int> out;
  for (int a : s.positive())
    if (std::abs(a) != s.n()) out.push_back(a);
  return SignedPerm(out);
}

SignedPerm woB_multiply(const SignedPerm& s) {
  std::vector<int> out = s.positive();
  for (int& a : out) a = -a;
  return SignedPerm(out);
}

std::vector<int> right_descents_B(const SignedPerm& s) {
  std::vector<int> out;
  if (s.n() >= 1 && s.at(1) < 0) out.push_back(0);
  for (int i = 1; i < s.n(); ++i)
    if (s.at(i) > s.at(i + 1)) out.push_back(i);
  return out;
}

std::size_t descents_B(const SignedPerm& s) { return right_descents_B(s).size(); }

bool is_bipartition_B(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v) {
  if (u.n() != w.n() || v.n() != w.n()) return false;
  const PairSet iw = invs_B(w), iu = invs_B(u), iv = invs_B(v);
  if (iu.size() + iv.size() != iw.size()) return false;
  for (const auto& p : iu)
    if (!iw.count(p) || iv.count(p)) return false;
  for (const auto& p : iv)
    if (!iw.count(p)) return false;
  return true;
}

bool n_in_positive_position(const SignedPerm& s) {
  const auto& p = s.positive();
  return std::find(p.begin(), p.end(), s.n()) != p.end();
}

DecompositionB decompose_B(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v) {
  if (!is_bipartition_B(w, u, v)) fail(ErrorKind::not_a_bipartition, "{u, v} does not split invs(w)");
  if (w.n() < 1 || !n_in_positive_position(w)) fail(ErrorKind::n_not_positive, "n is not in positive position in w");
  const int n = w.n();
  const PairSet iw = invs_B(w);
  DecompositionB d;
  for (int a : signed_letters(n))
    if (a == n || (a < n && has(iw, a, n))) d.right.insert(a);
  for (int a : d.right) d.forgotten.insert(-a);
  for (int a : signed_letters(n))
    if (!d.right.count(a) && !d.forgotten.count(a)) d.left.insert(a);
  d.w_left = std_B(restrict_word(w.full(), d.left));
  d.u_left = std_B(restrict_word(u.full(), d.left));
  d.v_left = std_B(restrict_word(v.full(), d.left));
  d.w_right = std_A_restricted(restrict_word(w.full(), d.right));
  d.u_right = std_A_restricted(restrict_word(u.full(), d.right));
  d.v_right = std_A_restricted(restrict_word(v.full(), d.right));
  return d;
}

DecompositionBNegative decompose_B_negative(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v) {
  if (!is_bipartition_B(w, u, v)) fail(ErrorKind::not_a_bipartition, "{u, v} does not split invs(w)");
  if (w.n() < 1 || n_in_positive_position(w)) fail(ErrorKind::n_not_negative, "n is not in negative position in w");
  const int n = w.n();
  const PairSet iw = invs_B(w);
  DecompositionBNegative d;
  for (int a : signed_letters(n))
    if (a < n && !has(iw, a, n)) d.left.insert(a);
  for (int a : d.left) d.forgotten.insert(-a);
  for (int a : signed_letters(n))
    if (!d.left.count(a) && !d.forgotten.count(a)) d.right.insert(a);
  d.w_left = std_A_restricted(restrict_word(w.full(), d.left));
  d.u_left = std_A_restricted(restrict_word(u.full(), d.left));
  d.v_left = std_A_restricted(restrict_word(v.full(), d.left));
  d.w_right = std_B(restrict_word(w.full(), d.right));
  d.u_right = std_B(restrict_word(u.full(), d.right));
  d.v_right = std_B(restrict_word(v.full(), d.right));
  return d;
}

std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<SignedPerm> out;
  for (const Perm& p : all_perms(n))
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> q = p;
      for (int i = 0; i < n; ++i)
        if (signs >> i & 1u) q[i] = -q[i];
      out.emplace_back(q);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct MaskTable {
  PairIndex ix;
  std::vector<SignedPerm> elements;
  std::vector<std::uint64_t> masks;
  std::unordered_map<std::uint64_t, std::size_t> by_mask;

  explicit MaskTable(int n) : ix(2 * n), elements(all_signed_perms(n)) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      masks.push_back(inversion_mask(ix, indexed(elements[i])));
      by_mask.emplace(masks.back(), i);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> splits(std::size_t w) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::uint64_t mw = masks[w];
    for (std::size_t u = 0; u < masks.size(); ++u) {
      const std::uint64_t mu = masks[u];
      if ((mu & ~mw) != 0) continue;
      const std::uint64_t rest = mw & ~mu;
      if (mu > rest || !is_inversion_mask(ix, rest) || !symmetric_mask(ix, rest)) continue;
      out.emplace_back(u, by_mask.at(rest));
    }
    return out;
  }
};

}  // namespace

std::vector<std::pair<SignedPerm, SignedPerm>> bipartitions_B(const SignedPerm& w) {
  if (w.n() > 5) fail(ErrorKind::precondition, "bipartition search supports n <= 5");
  const MaskTable table(w.n());
  const std::size_t wid = static_cast<std::size_t>(
      std::lower_bound(table.elements.begin(), table.elements.end(), w) - table.elements.begin());
  std::vector<std::pair<SignedPerm, SignedPerm>> out;
  for (const auto& [u, v] : table.splits(wid))
    out.emplace_back(std::min(table.elements[u], table.elements[v]), std::max(table.elements[u], table.elements[v]));
  std::sort(out.begin(), out.end());
  return out;
}

SignedPerm parse_signed(const std::string& text) {
  std::string spaced;
  bool bar = false;
  for (char c : text) {
    if (c == '|') bar = true;
    spaced += (c == ',' || c == '|') ? ' ' : c;
  }
  std::istringstream in(spaced);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      letters.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      fail(ErrorKind::malformed_spec, "bad letter '" + tok + "'");
    }
  }
  std::set<int> magnitudes;
  for (int a : letters) magnitudes.insert(std::abs(a));
  if (bar || (magnitudes.size() * 2 == letters.size() && !letters.empty())) return SignedPerm::from_full(letters);
  return SignedPerm(letters);
}

std::string format_signed(const SignedPerm& s) {
  std::string out;
  const auto f = s.full();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += i == f.size() / 2 ? " | " : " ";
    out += std::to_string(f[i]);
  }
  return out.empty() ? "|" : out;
}

namespace {

void apply_generator(std::vector<int>& pos, int s) {
  const int n = static_cast<int>(pos.size());
  if (s < 0 || s >= n) fail(ErrorKind::index_out_of_range, "generator outside B_" + std::to_string(n));
  if (s == 0)
    pos[0] = -pos[0];
  else
    std::swap(pos[s - 1], pos[s]);
}

}  // namespace

Word reduced_word_B(const SignedPerm& s) {
  std::vector<int> pos = s.positive();
  Word stripped;
  for (;;) {
    const auto desc = right_descents_B(SignedPerm(pos));
    if (desc.empty()) break;
    apply_generator(pos, desc.front());
    stripped.push_back(desc.front());
  }
  return {stripped.rbegin(), stripped.rend()};
}

SignedPerm signed_from_word(const Word& word, int n) {
  std::vector<int> pos = identity_perm(n);
  for (int s : word) apply_generator(pos, s);
  return SignedPerm(pos);
}

GroupElement coxeter_from_signed(const CoxeterSystem& sys, const SignedPerm& s) {
  if (static_cast<std::size_t>(s.n()) != sys.rank()) fail(ErrorKind::precondition, "signed permutation size does not match the rank");
  return sys.from_word(reduced_word_B(s));
}

SignedPerm signed_from_coxeter(const CoxeterSystem& sys, const GroupElement& g) {
  return signed_from_word(sys.reduced_word(g), static_cast<int>(sys.rank()));
}

// ------------------------------------------------------------------ sweep

namespace {

enum Color { kForgotten, kLeft, kRight };

template <class Classes>
std::map<int, Color> colors(const Classes& d) {
  std::map<int, Color> c;
  for (int a : d.forgotten) c[a] = kForgotten;
  for (int a : d.left) c[a] = kLeft;
  for (int a : d.right) c[a] = kRight;
  return c;
}

bool cut_ok(const SignedPerm& w, const DecompositionB& d) {
  const auto f = w.full();
  const std::size_t k = d.right.size(), len = f.size();
  if (f[k - 1] != -w.n() || f[len - k] != w.n()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    const std::set<int>& part = i < k ? d.forgotten : i >= len - k ? d.right : d.left;
    if (!part.count(f[i])) return false;
  }
  return true;
}

void check_positive(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v, TypeBSweep& r) {
  const DecompositionB d = decompose_B(w, u, v);
  const auto color = colors(d);
  bool cross = false, desc = false, extra = false;
  for (const SignedPerm* x : {&u, &v}) {
    for (const auto& [a, c] : invs_B(*x)) {
      const Color ca = color.at(a), cc = color.at(c);
      if ((ca != kRight && cc == kRight) || (ca == kForgotten && cc != kForgotten)) cross = true;
    }
    const auto f = x->full();
    for (std::size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i] > f[i + 1] && color.at(f[i]) != color.at(f[i + 1])) desc = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::size_t j = i + 1;
      while (j < f.size() && color.at(f[j]) != color.at(f[i])) ++j;
      if (j < f.size() && j > i + 1 && f[i] > f[j]) extra = true;
    }
  }
  r.cross_inversions += cross;
  r.descent_colors += desc;
  r.extra_descents += extra;

  bool ok = is_bipartition_B(d.w_left, d.u_left, d.v_left) && is_bipartition_A(d.w_right, d.u_right, d.v_right);
  ok = ok && descents_B(w) == descents_B(d.w_left) + descents(d.w_right);
  ok = ok && descents_B(u) == descents_B(d.u_left) + descents(d.u_right);
  ok = ok && descents_B(v) == descents_B(d.v_left) + descents(d.v_right);
  r.decomposition += !ok;
}

void check_negative(const SignedPerm& w, const SignedPerm& u, const SignedPerm& v, TypeBSweep& r) {
  const DecompositionBNegative d = decompose_B_negative(w, u, v);
  bool ok = is_bipartition_A(d.w_left, d.u_left, d.v_left) && is_bipartition_B(d.w_right, d.u_right, d.v_right);
  ok = ok && descents_B(w) == descents(d.w_left) + descents_B(d.w_right);
  ok = ok && descents_B(u) == descents(d.u_left) + descents_B(d.u_right);
  ok = ok && descents_B(v) == descents(d.v_left) + descents_B(d.v_right);
  r.negative_decomposition += !ok;

  // orient so that n is in negative position in the first part
  const bool u_negative = !n_in_positive_position(u);
  const SignedPerm& a = u_negative ? u : v;
  const SignedPerm& b = u_negative ? v : u;
  const SignedPerm a0 = woB_multiply(a), w0 = woB_multiply(w);
  bool clauses = n_in_positive_position(a0) && n_in_positive_position(b) && n_in_positive_position(w0);
  clauses = clauses && is_bipartition_B(a0, w0, b);
  clauses = clauses && ((descents_B(a) + descents_B(b) == descents_B(w)) == (descents_B(w0) + descents_B(b) == descents_B(a0)));
  r.longest_reduction += !clauses;
}

}  // namespace

TypeBSweep sweep_type_b(int n, unsigned workers) {
  if (n < 1 || n > 5) fail(ErrorKind::precondition, "sweep supports 1 <= n <= 5");
  const MaskTable table(n);

  auto parts = parallel_map(table.elements.size(), workers, [&](std::size_t wi) {
    TypeBSweep r;
    const SignedPerm& w = table.elements[wi];
    r.reflection_count += reflections_from_invs(invs_B(w)).size() != reduced_word_B(w).size();
    const bool positive = n_in_positive_position(w);
    for (const auto& [ui, vi] : table.splits(wi)) {
      const SignedPerm& u = table.elements[ui];
      const SignedPerm& v = table.elements[vi];
      ++r.bipartitions;
      r.conjecture1 += descents_B(w) != descents_B(u) + descents_B(v);
      if (n >= 2) r.dec_preserved += !is_bipartition_B(dec_B(w), dec_B(u), dec_B(v));
      if (positive) {
        check_positive(w, u, v, r);
      } else {
        check_negative(w, u, v, r);
      }
    }
    if (positive) {
      const auto d = decompose_B(w, SignedPerm::identity(n), w);
      r.cut_shape += !cut_ok(w, d);
    }
    return r;
  });

  TypeBSweep t;
  t.n = n;
  t.elements = table.elements.size();
  for (const auto& p : parts) {
    t.bipartitions += p.bipartitions;
    t.conjecture1 += p.conjecture1;
    t.reflection_count += p.reflection_count;
    t.dec_preserved += p.dec_preserved;
    t.longest_reduction += p.longest_reduction;
    t.cut_shape += p.cut_shape;
    t.cross_inversions += p.cross_inversions;
    t.descent_colors += p.descent_colors;
    t.extra_descents += p.extra_descents;
    t.decomposition += p.decomposition;
    t.negative_decomposition += p.negative_decomposition;
  }

  const std::size_t pairs = static_cast<std::size_t>(n * (2 * n - 1));
  if (pairs <= 15) {
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << pairs); ++m) {
      const bool passes = is_inversion_mask(table.ix, m) && symmetric_mask(table.ix, m);
      t.invs_characterization += passes != (table.by_mask.count(m) != 0);
    }
  }
  return t;
}

}  // namespace coxpart::perm
