#include "coxpart/ball.hpp"

#include <algorithm>
#include <bit>

#include "coxpart/error.hpp"

namespace coxpart {

ElementId Ball::add(GroupElement g, std::int32_t parent, int gen, std::size_t element_cap) {
  if (elements_.size() >= element_cap)
    fail(ErrorKind::resource_cap, "ball exceeds the element cap of " + std::to_string(element_cap));
  const auto id = static_cast<ElementId>(elements_.size());
  RootSet bits;
  std::vector<std::uint32_t> ids;
  std::uint32_t len = 0;
  if (parent >= 0) {
    const auto p = static_cast<ElementId>(parent);
    bits = phi_bits_[p];
    ids = phi_ids_[p];
    const auto rid = static_cast<std::uint32_t>(registry_.intern(elements_[p].column(static_cast<std::size_t>(gen))));
    bits.insert(rid);
    ids.push_back(rid);
    len = lengths_[p] + 1;
  }
  right_desc_.push_back(sys_.right_descents(g));
  index_.emplace(g, id);
  elements_.push_back(std::move(g));
  lengths_.push_back(len);
  parent_.push_back(parent);
  parent_gen_.push_back(static_cast<std::int8_t>(gen));
  phi_bits_.push_back(std::move(bits));
  phi_ids_.push_back(std::move(ids));
  return id;
}

Ball Ball::build(const CoxeterGraph& graph, std::size_t radius, std::size_t element_cap) {
  Ball b{CoxeterSystem(graph)};
  b.radius_ = radius;
  const std::size_t n = b.rank();
  for (std::size_t s = 0; s < n; ++s) b.registry_.intern(b.sys_.simple_root(static_cast<int>(s)));

  b.add(b.sys_.identity(), -1, -1, element_cap);
  std::size_t begin = 0;
  for (std::size_t len = 0; len < radius; ++len) {
    const std::size_t end = b.elements_.size();
    for (std::size_t id = begin; id < end; ++id) {
      for (std::size_t s = 0; s < n; ++s) {
        if (b.right_desc_[id] >> s & 1u) continue;
        GroupElement x = b.sys_.right_multiply(b.elements_[id], static_cast<int>(s));
        if (b.index_.count(x)) continue;
        b.add(std::move(x), static_cast<std::int32_t>(id), static_cast<int>(s), element_cap);
      }
    }
    begin = end;
    if (begin == b.elements_.size()) break;  // finite group exhausted
  }
  b.finish();
  return b;
}

Ball Ball::from_words(const CoxeterGraph& graph, std::size_t radius, const std::vector<Word>& words) {
  Ball b{CoxeterSystem(graph)};
  b.radius_ = radius;
  const std::size_t n = b.rank();
  for (std::size_t s = 0; s < n; ++s) b.registry_.intern(b.sys_.simple_root(static_cast<int>(s)));
  auto bad = [](const std::string& why) { fail(ErrorKind::cache_error, "cached ball rejected: " + why); };

  if (words.empty() || !words.front().empty()) bad("first word must be the identity");
  b.add(b.sys_.identity(), -1, -1, words.size());
  for (std::size_t k = 1; k < words.size(); ++k) {
    const Word& w = words[k];
    if (w.empty() || w.size() > radius || w.size() < words[k - 1].size()) bad("lengths out of order");
    const int gen = w.back();
    if (gen < 0 || static_cast<std::size_t>(gen) >= n) bad("generator out of range");
    const auto parent = b.find(b.sys_.from_word(Word(w.begin(), w.end() - 1)));
    if (!parent || b.lengths_[*parent] + 1 != w.size()) bad("word is not reduced");
    if (b.right_desc_[*parent] >> gen & 1u) bad("word is not reduced");
    GroupElement x = b.sys_.right_multiply(b.elements_[*parent], gen);
    if (b.index_.count(x)) bad("duplicate element");
    b.add(std::move(x), static_cast<std::int32_t>(*parent), gen, words.size());
  }
  b.finish();
  for (std::size_t id = 0; id < b.size(); ++id)
    if (b.lengths_[id] < radius)
      for (std::size_t s = 0; s < n; ++s)
        if (b.neighbour(static_cast<ElementId>(id), s) == kOutside) bad("ball is incomplete");
  return b;
}

void Ball::finish() {
  const std::size_t n = rank();
  const std::size_t count = elements_.size();

  std::size_t max_len = 0;
  for (auto l : lengths_) max_len = std::max<std::size_t>(max_len, l);
  level_offsets_.assign(max_len + 2, 0);
  for (auto l : lengths_) ++level_offsets_[l + 1];
  for (std::size_t l = 1; l < level_offsets_.size(); ++l) level_offsets_[l] += level_offsets_[l - 1];
  // a finite group exhausted below the radius still answers level queries
  while (level_offsets_.size() < radius_ + 2) level_offsets_.push_back(static_cast<ElementId>(count));

  nbr_.assign(count * n, kOutside);
  edge_root_.assign(count * n, kOutside);
  left_desc_.assign(count, 0);
  for (std::size_t id = 0; id < count; ++id) {
    for (std::size_t s = 0; s < n; ++s) {
      if (phi_bits_[id].contains(s)) left_desc_[id] |= DescentMask(1) << s;
      const bool down = right_desc_[id] >> s & 1u;
      Root r = elements_[id].column(s);
      if (down)
        for (auto& c : r.coords) c = -c;
      if (auto rid = registry_.find(r)) edge_root_[id * n + s] = static_cast<std::int32_t>(*rid);
      if (!down && lengths_[id] == radius_) continue;
      if (auto x = find(sys_.right_multiply(elements_[id], static_cast<int>(s))))
        nbr_[id * n + s] = static_cast<std::int32_t>(*x);
    }
    std::sort(phi_ids_[id].begin(), phi_ids_[id].end());
    set_index_.emplace(phi_bits_[id], static_cast<ElementId>(id));
  }

  const std::size_t roots = registry_.size();
  reflect_.assign(n * roots, kOutside);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t rid = 0; rid < roots; ++rid) {
      if (rid == s) continue;
      if (auto img = registry_.find(sys_.reflect(static_cast<int>(s), registry_.root(rid))))
        reflect_[s * roots + rid] = static_cast<std::int32_t>(*img);
    }
}

Word Ball::word(ElementId id) const {
  Word w;
  for (std::int32_t cur = static_cast<std::int32_t>(id); parent_[static_cast<std::size_t>(cur)] >= 0;
       cur = parent_[static_cast<std::size_t>(cur)])
    w.push_back(parent_gen_[static_cast<std::size_t>(cur)]);
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<ElementId> Ball::find(const GroupElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ElementId> Ball::find_by_set(const RootSet& phi) const {
  auto it = set_index_.find(phi);
  if (it == set_index_.end()) return std::nullopt;
  return it->second;
}

ElementId Ball::id_of_word(const Word& word) const {
  ElementId id = 0;
  GroupElement g = sys_.identity();
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank())
      fail(ErrorKind::index_out_of_range, "generator " + std::to_string(s + 1) + " out of range");
    g = sys_.right_multiply(g, s);
  }
  auto found = find(g);
  if (!found)
    fail(ErrorKind::index_out_of_range, "element is longer than the ball radius " + std::to_string(radius_));
  id = *found;
  return id;
}

std::optional<ElementId> Ball::element_from_biclosed(const std::vector<std::uint32_t>& ids) const {
  if (ids.size() > radius_) return std::nullopt;
  std::vector<std::uint32_t> cur = ids;
  const std::size_t n = rank();
  ElementId at = 0;
  while (!cur.empty()) {
    auto it = std::find_if(cur.begin(), cur.end(), [n](std::uint32_t r) { return r < n; });
    if (it == cur.end()) return std::nullopt;
    const std::size_t s = *it;
    cur.erase(it);
    for (auto& r : cur) {
      const std::int32_t img = reflect_root(s, r);
      if (img == kOutside) return std::nullopt;
      r = static_cast<std::uint32_t>(img);
    }
    const std::int32_t next = neighbour(at, s);
    if (next == kOutside) return std::nullopt;
    at = static_cast<ElementId>(next);
  }
  return at;
}

std::vector<std::uint64_t> Ball::growth() const {
  std::vector<std::uint64_t> g(radius_ + 1, 0);
  for (auto l : lengths_) ++g[l];
  return g;
}

// ---------------------------------------------------------------- intervals

bool Interval::contains(ElementId id) const { return std::binary_search(members.begin(), members.end(), id); }

bool below(const Ball& ball, ElementId u, ElementId w) {
  if (ball.length(u) > ball.length(w)) return false;
  const auto& bits = ball.inversion_set(w);
  for (auto r : ball.inversion_ids(u))
    if (!bits.contains(r)) return false;
  return true;
}

namespace {

// Upward search from `bottom`, keeping w*s whenever the root it adds lies in
// Phi(top).
std::vector<ElementId> grow_inside(const Ball& ball, ElementId bottom, ElementId top) {
  const auto& bits = ball.inversion_set(top);
  const std::size_t n = ball.rank();
  std::vector<ElementId> members{bottom};
  std::vector<ElementId> level{bottom}, next;
  while (!level.empty()) {
    next.clear();
    for (ElementId g : level)
      for (std::size_t s = 0; s < n; ++s) {
        if (ball.right_descents(g) >> s & 1u) continue;
        const std::int32_t r = ball.edge_root(g, s);
        if (r == kOutside || !bits.contains(static_cast<std::size_t>(r))) continue;
        const std::int32_t x = ball.neighbour(g, s);
        if (x != kOutside) next.push_back(static_cast<ElementId>(x));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    members.insert(members.end(), next.begin(), next.end());
    std::swap(level, next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

Interval interval(const Ball& ball, ElementId top) { return interval(ball, 0, top); }

Interval interval(const Ball& ball, ElementId bottom, ElementId top) {
  if (!below(ball, bottom, top)) fail(ErrorKind::not_a_prefix, "bottom is not below top in the weak order");
  return Interval{bottom, top, grow_inside(ball, bottom, top)};
}

std::vector<ElementId> prefix_set_by_descents(const Ball& ball, ElementId top) {
  std::vector<ElementId> members{top};
  std::vector<ElementId> level{top}, next;
  while (!level.empty()) {
    next.clear();
    for (ElementId g : level) {
      DescentMask d = ball.right_descents(g);
      while (d) {
        const auto s = static_cast<std::size_t>(std::countr_zero(d));
        d &= d - 1;
        next.push_back(static_cast<ElementId>(ball.neighbour(g, s)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    members.insert(members.end(), next.begin(), next.end());
    std::swap(level, next);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementId> atoms(const Ball& ball, const Interval& iv) {
  std::vector<ElementId> out;
  const std::size_t want = ball.length(iv.bottom) + 1;
  for (ElementId g : iv.members)
    if (ball.length(g) == want) out.push_back(g);
  return out;
}

std::vector<ElementId> coatoms(const Ball& ball, const Interval& iv) {
  std::vector<ElementId> out;
  if (iv.bottom == iv.top) return out;
  const std::size_t want = ball.length(iv.top) - 1;
  for (ElementId g : iv.members)
    if (ball.length(g) == want) out.push_back(g);
  return out;
}

std::size_t atom_count(const Ball& ball, ElementId bottom, ElementId top) {
  // Phi(u) + {r} for the roots r of Phi(w) \ Phi(u) that give an inversion set
  const auto& lo = ball.inversion_set(bottom);
  std::size_t count = 0;
  for (auto r : ball.inversion_ids(top)) {
    if (lo.contains(r)) continue;
    RootSet s = lo;
    s.insert(r);
    if (ball.find_by_set(s)) ++count;
  }
  return count;
}

std::size_t coatom_count(const Ball& ball, ElementId top) {
  std::size_t count = 0;
  for (auto r : ball.inversion_ids(top)) {
    RootSet s = ball.inversion_set(top);
    s.erase(r);
    if (ball.find_by_set(s)) ++count;
  }
  return count;
}

std::vector<ElementPair> diameters(const Ball& ball, ElementId top) {
  const auto members = grow_inside(ball, 0, top);
  const std::size_t len = ball.length(top);
  std::vector<ElementPair> out;
  if (len <= 64) {
    // Phi(g) as bits over the positions of Phi(w)
    const auto& top_ids = ball.inversion_ids(top);
    std::vector<std::uint64_t> masks;
    masks.reserve(members.size());
    for (ElementId g : members) {
      std::uint64_t m = 0;
      for (auto r : ball.inversion_ids(g)) {
        const auto pos = std::lower_bound(top_ids.begin(), top_ids.end(), r) - top_ids.begin();
        m |= std::uint64_t(1) << pos;
      }
      masks.push_back(m);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j)
        if (static_cast<std::size_t>(std::popcount(masks[i] ^ masks[j])) == len)
          out.emplace_back(members[i], members[j]);
  } else {
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size(); ++j)
        if (ball.inversion_set(members[i]).symmetric_difference_size(ball.inversion_set(members[j])) == len)
          out.emplace_back(members[i], members[j]);
  }
  return out;
}

std::size_t distance(const Ball& ball, ElementId u, ElementId v) {
  return ball.inversion_set(u).symmetric_difference_size(ball.inversion_set(v));
}

ElementId meet(const Ball& ball, const std::vector<ElementId>& xs) {
  if (xs.empty()) fail(ErrorKind::precondition, "meet of an empty family");
  std::vector<ElementId> lower;
  for (ElementId g : grow_inside(ball, 0, xs.front())) {
    bool all = true;
    for (ElementId x : xs) all = all && below(ball, g, x);
    if (all) lower.push_back(g);
  }
  std::size_t best = 0;
  for (ElementId g : lower) best = std::max(best, ball.length(g));
  std::vector<ElementId> tops;
  for (ElementId g : lower)
    if (ball.length(g) == best) tops.push_back(g);
  if (tops.size() != 1) fail(ErrorKind::lattice_violation, "common lower bounds have no unique maximum");
  for (ElementId g : lower)
    if (!below(ball, g, tops.front())) fail(ErrorKind::lattice_violation, "meet is not above every lower bound");
  return tops.front();
}

ElementId join_bounded(const Ball& ball, const std::vector<ElementId>& xs, ElementId top) {
  for (ElementId x : xs)
    if (!below(ball, x, top)) fail(ErrorKind::not_a_prefix, "join argument is not below the bound");
  std::vector<ElementId> upper;
  for (ElementId g : grow_inside(ball, 0, top)) {
    bool all = true;
    for (ElementId x : xs) all = all && below(ball, x, g);
    if (all) upper.push_back(g);
  }
  std::size_t best = ball.length(top);
  for (ElementId g : upper) best = std::min(best, ball.length(g));
  std::vector<ElementId> bottoms;
  for (ElementId g : upper)
    if (ball.length(g) == best) bottoms.push_back(g);
  if (bottoms.size() != 1) fail(ErrorKind::lattice_violation, "common upper bounds have no unique minimum");
  for (ElementId g : upper)
    if (!below(ball, bottoms.front(), g)) fail(ErrorKind::lattice_violation, "join is not below every upper bound");
  return bottoms.front();
}

GroupElement phi_map(const Ball& ball, ElementId top, ElementId g) {
  if (!below(ball, g, top)) fail(ErrorKind::not_a_prefix, "element is not a prefix of the top");
  const auto& sys = ball.system();
  return sys.multiply(sys.inverse(ball.element(top)), ball.element(g));
}

}  // namespace coxpart
