#include "coxpart/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "coxpart/error.hpp"

namespace coxpart {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

// ---------------------------------------------------------------- Root / hashes

std::size_t hash_value(const Root& r) {
  std::size_t h = r.coords.size();
  for (const auto& c : r.coords) h = mix(h, hash_value(c));
  return h;
}

GroupElement::GroupElement(std::size_t rank, std::vector<QuadScalar> entries)
    : rank_(rank), m_(std::move(entries)) {
  if (m_.size() != rank_ * rank_) fail(ErrorKind::precondition, "matrix has wrong size");
}

GroupElement GroupElement::identity(std::size_t rank) {
  std::vector<QuadScalar> m(rank * rank, QuadScalar(0));
  for (std::size_t i = 0; i < rank; ++i) m[i * rank + i] = QuadScalar(1);
  return GroupElement(rank, std::move(m));
}

Root GroupElement::column(std::size_t j) const {
  Root r;
  r.coords.reserve(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r.coords.push_back(at(i, j));
  return r;
}

bool GroupElement::is_identity() const { return *this == identity(rank_); }

std::size_t hash_value(const GroupElement& w) {
  std::size_t h = w.rank();
  for (const auto& c : w.entries()) h = mix(h, hash_value(c));
  return h;
}

// ---------------------------------------------------------------- RootSet

void RootSet::insert(std::size_t id) {
  const std::size_t w = id / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t(1) << (id % 64);
}

void RootSet::erase(std::size_t id) {
  const std::size_t w = id / 64;
  if (w < words_.size()) words_[w] &= ~(std::uint64_t(1) << (id % 64));
}

std::size_t RootSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool RootSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> RootSet::ids() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool RootSet::is_subset_of(const RootSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

bool RootSet::intersects(const RootSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::size_t RootSet::symmetric_difference_size(const RootSet& other) const {
  const std::size_t n = std::max(words_.size(), other.words_.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = i < words_.size() ? words_[i] : 0;
    const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
    c += static_cast<std::size_t>(std::popcount(a ^ b));
  }
  return c;
}

std::size_t RootSet::intersection_size(const RootSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

RootSet& RootSet::operator|=(const RootSet& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

RootSet& RootSet::operator^=(const RootSet& o) {
  if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

RootSet RootSet::minus(const RootSet& o) const {
  RootSet r = *this;
  const std::size_t n = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < n; ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

bool operator==(const RootSet& a, const RootSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = i < a.words_.size() ? a.words_[i] : 0;
    const std::uint64_t y = i < b.words_.size() ? b.words_[i] : 0;
    if (x != y) return false;
  }
  return true;
}

std::size_t hash_value(const RootSet& s) {
  const auto& w = s.words();
  std::size_t last = w.size();
  while (last > 0 && w[last - 1] == 0) --last;
  std::size_t h = 0x51ed27;
  for (std::size_t i = 0; i < last; ++i) h = mix(h, static_cast<std::size_t>(w[i]));
  return h;
}

// ---------------------------------------------------------------- RootRegistry

std::size_t RootRegistry::intern(const Root& r) {
  auto [it, inserted] = index_.try_emplace(r, roots_.size());
  if (inserted) roots_.push_back(r);
  return it->second;
}

std::optional<std::size_t> RootRegistry::find(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RootSet RootRegistry::make_set(const std::vector<Root>& roots) {
  RootSet s(size() + roots.size());
  for (const auto& r : roots) s.insert(intern(r));
  return s;
}

// ---------------------------------------------------------------- CoxeterSystem

CoxeterSystem::CoxeterSystem(CoxeterGraph graph) : graph_(std::move(graph)) {
  if (graph_.rank() > 63) fail(ErrorKind::precondition, "rank above 63 is not supported");
}

GroupElement CoxeterSystem::simple_reflection(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= rank())
    fail(ErrorKind::index_out_of_range, "generator index " + std::to_string(i) + " out of range");
  return right_multiply(identity(), i);
}

GroupElement CoxeterSystem::from_word(const Word& word) const {
  GroupElement w = identity();
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank())
      fail(ErrorKind::index_out_of_range, "generator index " + std::to_string(s) + " out of range");
    w = right_multiply(w, s);
  }
  return w;
}

Root CoxeterSystem::simple_root(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= rank())
    fail(ErrorKind::index_out_of_range, "generator index " + std::to_string(i) + " out of range");
  Root r{std::vector<QuadScalar>(rank(), QuadScalar(0))};
  r.coords[static_cast<std::size_t>(i)] = QuadScalar(1);
  return r;
}

GroupElement CoxeterSystem::multiply(const GroupElement& a, const GroupElement& b) const {
  const std::size_t n = rank();
  std::vector<QuadScalar> m(n * n, QuadScalar(0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const QuadScalar& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const QuadScalar& bkc = b.at(k, c);
        if (!bkc.is_zero()) m[r * n + c] += ark * bkc;
      }
    }
  return GroupElement(n, std::move(m));
}

GroupElement CoxeterSystem::inverse(const GroupElement& a) const {
  Word word = reduced_word(a);
  std::reverse(word.begin(), word.end());
  return from_word(word);
}

Root CoxeterSystem::apply(const GroupElement& a, const Root& r) const {
  const std::size_t n = rank();
  Root out{std::vector<QuadScalar>(n, QuadScalar(0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r.coords[j].is_zero() && !a.at(i, j).is_zero()) out.coords[i] += a.at(i, j) * r.coords[j];
  return out;
}

GroupElement CoxeterSystem::right_multiply(const GroupElement& w, int i) const {
  // (w s_i)(alpha_c) = w(alpha_c) + c_ic w(alpha_i) for c != i, -w(alpha_i) for c = i
  const std::size_t n = rank();
  const auto si = static_cast<std::size_t>(i);
  GroupElement out = w;
  for (std::size_t c = 0; c < n; ++c) {
    if (c == si) continue;
    const QuadScalar& e = graph_.edge_value(si, c);
    if (e.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const QuadScalar& wri = w.at(r, si);
      if (!wri.is_zero()) out.m_[r * n + c] += e * wri;
    }
  }
  for (std::size_t r = 0; r < n; ++r) out.m_[r * n + si] = -w.at(r, si);
  return out;
}

GroupElement CoxeterSystem::left_multiply(int i, const GroupElement& w) const {
  // row i of s_i w is -row_i + sum_{j != i} c_ij row_j
  const std::size_t n = rank();
  const auto si = static_cast<std::size_t>(i);
  GroupElement out = w;
  for (std::size_t c = 0; c < n; ++c) {
    QuadScalar v = -w.at(si, c);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == si) continue;
      const QuadScalar& e = graph_.edge_value(si, j);
      if (!e.is_zero() && !w.at(j, c).is_zero()) v += e * w.at(j, c);
    }
    out.m_[si * n + c] = v;
  }
  return out;
}

Root CoxeterSystem::reflect(int i, const Root& r) const {
  const auto si = static_cast<std::size_t>(i);
  Root out = r;
  QuadScalar v = -r.coords[si];
  for (std::size_t j = 0; j < rank(); ++j) {
    if (j == si) continue;
    const QuadScalar& e = graph_.edge_value(si, j);
    if (!e.is_zero() && !r.coords[j].is_zero()) v += e * r.coords[j];
  }
  out.coords[si] = v;
  return out;
}

Sign CoxeterSystem::root_sign(const Root& r) const {
  Sign seen = Sign::zero;
  for (const auto& c : r.coords) {
    const Sign s = sign(c);
    if (s == Sign::zero) continue;
    if (seen == Sign::zero) seen = s;
    else if (s != seen) fail(ErrorKind::precondition, "vector with mixed coordinate signs is not a root");
  }
  if (seen == Sign::zero) fail(ErrorKind::precondition, "zero vector is not a root");
  return seen;
}

Root CoxeterSystem::positive_representative(const Root& r) const {
  if (is_positive(r)) return r;
  Root out = r;
  for (auto& c : out.coords) c = -c;
  return out;
}

DescentMask CoxeterSystem::right_descents(const GroupElement& w) const {
  DescentMask m = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    if (root_sign(w.column(i)) == Sign::negative) m |= DescentMask(1) << i;
  return m;
}

DescentMask CoxeterSystem::left_descents(const GroupElement& w) const {
  return right_descents(inverse(w));
}

Word CoxeterSystem::reduced_word(const GroupElement& w) const {
  Word peeled;
  GroupElement x = w;
  for (;;) {
    const DescentMask d = right_descents(x);
    if (d == 0) break;
    const int s = std::countr_zero(d);
    x = right_multiply(x, s);
    peeled.push_back(s);
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::size_t CoxeterSystem::length(const GroupElement& w) const { return reduced_word(w).size(); }

std::vector<Root> CoxeterSystem::inversion_roots(const GroupElement& w) const {
  // w = s_1 s_2 ... s_k reduced: s_1 is a left descent and
  // Phi(w) = {alpha_{s_1}} + s_1 Phi(s_1 w), unrolled.
  const Word word = reduced_word(w);
  std::vector<Root> out;
  out.reserve(word.size());
  GroupElement prefix = identity();
  for (int s : word) {
    out.push_back(apply(prefix, simple_root(s)));
    prefix = right_multiply(prefix, s);
  }
  return out;
}

RootSet CoxeterSystem::inversion_set(const GroupElement& w, RootRegistry& registry) const {
  return registry.make_set(inversion_roots(w));
}

std::size_t CoxeterSystem::distance(const GroupElement& u, const GroupElement& v) const {
  return length(multiply(inverse(u), v));
}

GroupElement CoxeterSystem::longest_element(std::size_t cap) const {
  if (cap < 1) fail(ErrorKind::precondition, "cap must be >= 1");
  const DescentMask all = (rank() == 64) ? ~DescentMask(0) : ((DescentMask(1) << rank()) - 1);
  GroupElement w = identity();
  std::size_t len = 0;
  for (;;) {
    const DescentMask d = right_descents(w);
    if (d == all) return w;
    const int s = std::countr_zero(~d & all);
    w = right_multiply(w, s);
    if (++len > cap)
      fail(ErrorKind::cap_exceeded, "no longest element within length " + std::to_string(cap));
  }
}

GroupElement CoxeterSystem::element_from_biclosed(const std::vector<Root>& roots) const {
  std::vector<Root> a = roots;
  for (const auto& r : a)
    if (!is_positive(r)) fail(ErrorKind::not_biclosed, "set contains a non-positive root");
  Word word;
  while (!a.empty()) {
    int found = -1;
    std::size_t where = 0;
    for (std::size_t k = 0; k < a.size() && found < 0; ++k)
      for (std::size_t s = 0; s < rank(); ++s)
        if (a[k] == simple_root(static_cast<int>(s))) {
          found = static_cast<int>(s);
          where = k;
          break;
        }
    if (found < 0) fail(ErrorKind::not_biclosed, "no simple root left to peel");
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(where));
    // s permutes the positive roots other than alpha_s
    for (auto& r : a) r = reflect(found, r);
    word.push_back(found);
  }
  // A = {alpha_s1} + s1 {alpha_s2} + ... = Phi(s1 s2 ... sk)
  return from_word(word);
}

GroupElement CoxeterSystem::element_from_biclosed(const RootSet& set, const RootRegistry& registry) const {
  std::vector<Root> roots;
  for (auto id : set.ids()) roots.push_back(registry.root(id));
  return element_from_biclosed(roots);
}

bool CoxeterSystem::cocycle_check(const GroupElement& u, const GroupElement& v) const {
  std::unordered_set<Root, RootHash> lhs;
  for (auto& r : inversion_roots(multiply(u, v))) lhs.insert(std::move(r));
  std::unordered_set<Root, RootHash> rhs;
  for (auto& r : inversion_roots(u)) rhs.insert(std::move(r));
  for (const auto& beta : inversion_roots(v)) {
    Root t = positive_representative(apply(u, beta));
    // symmetric difference
    if (!rhs.erase(t)) rhs.insert(std::move(t));
  }
  return lhs == rhs;
}

bool CoxeterSystem::preserves_form(const GroupElement& w) const {
  const std::size_t n = rank();
  // Gram matrix of 2B: 2 on the diagonal, -2cos(pi/m_ij) off it.
  auto gram = [&](std::size_t i, std::size_t j) {
    return i == j ? QuadScalar(2) : -graph_.edge_value(i, j);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      QuadScalar acc(0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const QuadScalar& x = w.at(i, a);
          const QuadScalar& y = w.at(j, b);
          if (x.is_zero() || y.is_zero()) continue;
          const QuadScalar g = gram(i, j);
          if (!g.is_zero()) acc += x * g * y;
        }
      if (acc != gram(a, b)) return false;
    }
  return true;
}

}  // namespace coxpart
