#include "coxpart/perm_a.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "coxpart/error.hpp"
#include "coxpart/parallel.hpp"
#include "pair_mask.hpp"

namespace coxpart::perm {

namespace {

void check_injective(const InjWord& w) {
  std::set<int> seen;
  for (int a : w)
    if (!seen.insert(a).second) fail(ErrorKind::repeated_letter, "letter " + std::to_string(a) + " repeats");
}

void check_perm(const Perm& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  for (int a : w) {
    if (a < 1 || a > n || seen[a]) fail(ErrorKind::precondition, "not a permutation of 1.." + std::to_string(n));
    seen[a] = 1;
  }
}

bool has(const PairSet& s, int a, int b) { return s.count({a, b}) != 0; }

}  // namespace

PairSet invs(const InjWord& w) {
  check_injective(w);
  PairSet out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) out.emplace(w[j], w[i]);
  return out;
}

Perm standardize(const InjWord& w) {
  check_injective(w);
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  Perm out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) - sorted.begin()) + 1;
  return out;
}

InjWord restrict_word(const InjWord& w, const std::set<int>& letters) {
  InjWord out;
  for (int a : w)
    if (letters.count(a)) out.push_back(a);
  return out;
}

std::size_t descents(const InjWord& w) {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

bool is_inversion_set_A(const PairSet& inv, int n) {
  for (const auto& [a, b] : inv)
    if (a < 1 || b > n || a >= b) return false;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (has(inv, a, b) && has(inv, b, c) && !has(inv, a, c)) return false;
        if (has(inv, a, c) && !has(inv, a, b) && !has(inv, b, c)) return false;
      }
  return true;
}

Perm perm_from_invs(const PairSet& inv, int n) {
  if (!is_inversion_set_A(inv, n)) fail(ErrorKind::precondition, "not an inversion set");
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  // x precedes y exactly when the pair is out of natural order iff it is an inversion
  std::sort(w.begin(), w.end(), [&](int x, int y) { return x < y ? !has(inv, x, y) : has(inv, y, x); });
  return w;
}

Perm dec_A(const Perm& w) {
  const int n = static_cast<int>(w.size());
  Perm out;
  for (int a : w)
    if (a != n) out.push_back(a);
  return out;
}

bool is_bipartition_A(const Perm& w, const Perm& u, const Perm& v) {
  if (u.size() != w.size() || v.size() != w.size()) return false;
  const PairSet iw = invs(w), iu = invs(u), iv = invs(v);
  if (iu.size() + iv.size() != iw.size()) return false;
  for (const auto& p : iu)
    if (!iw.count(p) || iv.count(p)) return false;
  for (const auto& p : iv)
    if (!iw.count(p)) return false;
  return true;
}

DecompositionA decompose_A(const Perm& w, const Perm& u, const Perm& v, int pivot) {
  check_perm(w);
  const int n = static_cast<int>(w.size());
  if (!is_bipartition_A(w, u, v)) fail(ErrorKind::not_a_bipartition, "{u, v} does not split invs(w)");
  if (pivot == 0) pivot = n;
  if (pivot < 1 || pivot > n) fail(ErrorKind::index_out_of_range, "pivot letter outside 1..n");
  const PairSet iw = invs(w);
  DecompositionA d;
  for (int a = 1; a <= n; ++a) {
    if (a == pivot || (a < pivot && has(iw, a, pivot)))
      d.right.insert(a);
    else
      d.left.insert(a);
  }
  d.w_left = standardize(restrict_word(w, d.left));
  d.u_left = standardize(restrict_word(u, d.left));
  d.v_left = standardize(restrict_word(v, d.left));
  d.w_right = standardize(restrict_word(w, d.right));
  d.u_right = standardize(restrict_word(u, d.right));
  d.v_right = standardize(restrict_word(v, d.right));
  return d;
}

bool decreasing_check_A(const Perm& u_right, const Perm& v_right) {
  check_perm(u_right);
  check_perm(v_right);
  const int n = static_cast<int>(u_right.size());
  if (n < 2 || static_cast<int>(v_right.size()) != n)
    fail(ErrorKind::precondition, "right words need the same length >= 2");
  const PairSet iu = invs(u_right), iv = invs(v_right);
  PairSet joined = iu;
  for (const auto& p : iv)
    if (!joined.insert(p).second) fail(ErrorKind::precondition, "inversion sets overlap");
  if (!is_inversion_set_A(joined, n)) fail(ErrorKind::precondition, "union is not an inversion set");
  if (perm_from_invs(joined, n).front() != n) fail(ErrorKind::precondition, "joined word does not start with its largest letter");
  return descents(dec_A(u_right)) + descents(dec_A(v_right)) + 1 == descents(u_right) + descents(v_right);
}

// ------------------------------------------------------------ mask helpers

namespace {

using namespace detail;

std::vector<std::pair<std::size_t, std::size_t>> split_indices(const PairIndex& ix, const std::vector<std::uint64_t>& masks,
                                                               const std::unordered_map<std::uint64_t, std::size_t>& by_mask,
                                                               std::size_t w) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::uint64_t mw = masks[w];
  for (std::size_t u = 0; u < masks.size(); ++u) {
    const std::uint64_t mu = masks[u];
    if ((mu & ~mw) != 0) continue;
    const std::uint64_t rest = mw & ~mu;
    if (mu > rest || !is_inversion_mask(ix, rest)) continue;
    out.emplace_back(u, by_mask.at(rest));
  }
  return out;
}

}  // namespace

std::vector<std::pair<Perm, Perm>> bipartitions_A(const Perm& w) {
  check_perm(w);
  const int n = static_cast<int>(w.size());
  if (n > 8) fail(ErrorKind::precondition, "bipartition search supports n <= 8");
  const PairIndex ix(n);
  const std::uint64_t mw = inversion_mask(ix, w);
  std::vector<std::pair<Perm, Perm>> out;
  for (const Perm& u : all_perms(n)) {
    const std::uint64_t mu = inversion_mask(ix, u);
    if ((mu & ~mw) != 0) continue;
    const std::uint64_t rest = mw & ~mu;
    if (mu > rest || !is_inversion_mask(ix, rest)) continue;
    PairSet inv;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (ix.has(rest, a, b)) inv.emplace(a, b);
    Perm v = perm_from_invs(inv, n);
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm identity_perm(int n) {
  Perm p(std::max(n, 0));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm parse_perm(const std::string& text) {
  Perm out;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string part = text.substr(start, end - start);
      try {
        std::size_t used = 0;
        out.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        fail(ErrorKind::malformed_spec, "bad letter '" + part + "'");
      }
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') fail(ErrorKind::malformed_spec, std::string("bad letter '") + c + "'");
      out.push_back(c - '0');
    }
  }
  check_perm(out);
  return out;
}

std::string format_perm(const Perm& w) {
  std::string s;
  const bool wide = w.size() > 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

// ----------------------------------------------------------------- bridge

Word reduced_word_A(const Perm& w) {
  check_perm(w);
  Perm p = w;
  Word stripped;
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < p.size() && p[i] < p[i + 1]) ++i;
    if (i + 1 >= p.size()) break;
    std::swap(p[i], p[i + 1]);
    stripped.push_back(static_cast<int>(i));
  }
  return {stripped.rbegin(), stripped.rend()};
}

Perm perm_from_word(const Word& word, int n) {
  Perm p = identity_perm(n);
  for (int s : word) {
    if (s < 0 || s + 1 >= n) fail(ErrorKind::index_out_of_range, "generator outside A_" + std::to_string(n - 1));
    std::swap(p[s], p[s + 1]);
  }
  return p;
}

GroupElement coxeter_from_perm(const CoxeterSystem& sys, const Perm& w) {
  if (w.size() != sys.rank() + 1) fail(ErrorKind::precondition, "permutation size does not match the rank");
  return sys.from_word(reduced_word_A(w));
}

Perm perm_from_coxeter(const CoxeterSystem& sys, const GroupElement& g) {
  return perm_from_word(sys.reduced_word(g), static_cast<int>(sys.rank()) + 1);
}

// ------------------------------------------------------------------ sweep

namespace {

std::size_t position(const Perm& w, int a) {
  return static_cast<std::size_t>(std::find(w.begin(), w.end(), a) - w.begin());
}

void check_split(const Perm& w, const Perm& u, const Perm& v, TypeASweep& r) {
  const int n = static_cast<int>(w.size());
  r.conjecture1 += descents(w) != descents(u) + descents(v);
  if (n >= 2) r.dec_preserved += !is_bipartition_A(dec_A(w), dec_A(u), dec_A(v));

  const DecompositionA d = decompose_A(w, u, v);
  bool cross = false, classes = false;
  for (const Perm* x : {&u, &v}) {
    for (const auto& [a, c] : invs(*x))
      if (d.left.count(a) && d.right.count(c)) cross = true;
    for (std::size_t i = 0; i + 1 < x->size(); ++i)
      if ((*x)[i] > (*x)[i + 1] && d.right.count((*x)[i]) != d.right.count((*x)[i + 1])) classes = true;
  }
  r.cross_inversions += cross;
  r.descent_classes += classes;

  bool split_ok = is_bipartition_A(d.w_left, d.u_left, d.v_left) && is_bipartition_A(d.w_right, d.u_right, d.v_right);
  split_ok = split_ok && descents(w) == descents(d.w_left) + descents(d.w_right);
  split_ok = split_ok && descents(u) == descents(d.u_left) + descents(d.u_right);
  split_ok = split_ok && descents(v) == descents(d.v_left) + descents(d.v_right);
  r.decomposition += !split_ok;

  if (n >= 2 && w.back() != n) r.decreasing += !decreasing_check_A(d.u_right, d.v_right);

  if (w.front() == n) {
    const std::size_t nu = position(u, n), nv = position(v, n);
    bool mirrored = true;
    for (int a = 1; a < n; ++a)
      if ((position(u, a) < nu) != (position(v, a) > nv)) mirrored = false;
    r.letters_mirror += !mirrored;
  }
}

}  // namespace

TypeASweep sweep_type_a(int n, bool properties, unsigned workers) {
  if (n < 1 || n > 8) fail(ErrorKind::precondition, "sweep supports 1 <= n <= 8");
  const PairIndex ix(n);
  const auto perms = all_perms(n);
  std::vector<std::uint64_t> masks(perms.size());
  std::unordered_map<std::uint64_t, std::size_t> by_mask;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    masks[i] = inversion_mask(ix, perms[i]);
    by_mask.emplace(masks[i], i);
  }

  auto parts = parallel_map(perms.size(), workers, [&](std::size_t w) {
    TypeASweep r;
    for (const auto& [u, v] : split_indices(ix, masks, by_mask, w)) {
      ++r.bipartitions;
      if (properties)
        check_split(perms[w], perms[u], perms[v], r);
      else
        r.conjecture1 += descents(perms[w]) != descents(perms[u]) + descents(perms[v]);
    }
    return r;
  });

  TypeASweep total;
  total.n = n;
  total.permutations = perms.size();
  for (const auto& p : parts) {
    total.bipartitions += p.bipartitions;
    total.conjecture1 += p.conjecture1;
    total.dec_preserved += p.dec_preserved;
    total.cross_inversions += p.cross_inversions;
    total.descent_classes += p.descent_classes;
    total.decomposition += p.decomposition;
    total.decreasing += p.decreasing;
    total.letters_mirror += p.letters_mirror;
  }

  // every pair set that passes the two conditions is some invs(w), and only those
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  if (properties && pairs <= 21) {
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << pairs); ++m)
      total.invs_characterization += is_inversion_mask(ix, m) != (by_mask.count(m) != 0);
  }
  return total;
}

}  // namespace coxpart::perm
