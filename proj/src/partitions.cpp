#include "coxpart/partitions.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "json.hpp"

#include "coxpart/error.hpp"
#include "coxpart/parallel.hpp"

namespace coxpart {

namespace {

std::vector<std::uint32_t> difference(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t descents(const Ball& ball, ElementId id) {
  return static_cast<std::size_t>(popcount(ball.right_descents(id)));
}

}  // namespace

std::optional<ElementId> complement_in(const Ball& ball, ElementId w, ElementId u) {
  if (!below(ball, u, w)) fail(ErrorKind::not_a_prefix, "part is not a prefix of the element");
  return ball.element_from_biclosed(difference(ball.inversion_ids(w), ball.inversion_ids(u)));
}

std::vector<Bipartition> bipartitions(const Ball& ball, ElementId w) {
  const std::size_t half = ball.length(w) / 2;
  std::vector<Bipartition> out;
  for (ElementId u : interval(ball, w).members) {
    if (ball.length(u) > half) break;
    if (auto v = complement_in(ball, w, u)) {
      const ElementId a = std::min(u, *v), b = std::max(u, *v);
      out.push_back({a, b, a != 0});
    }
  }
  std::sort(out.begin(), out.end(), [](const Bipartition& x, const Bipartition& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_proper_bipartition(const Ball& ball, ElementId w) {
  const std::size_t half = ball.length(w) / 2;
  for (ElementId u : interval(ball, w).members) {
    if (ball.length(u) > half) break;
    if (u != 0 && complement_in(ball, w, u)) return true;
  }
  return false;
}

bool is_partition_irreducible(const Ball& ball, ElementId w) { return !has_proper_bipartition(ball, w); }

namespace {

void split(const Ball& ball, ElementId rest, std::size_t k, ElementId lo, std::vector<ElementId>& parts,
           std::vector<std::vector<ElementId>>& out) {
  if (k == 1) {
    if (rest >= lo) {
      parts.push_back(rest);
      out.push_back(parts);
      parts.pop_back();
    }
    return;
  }
  for (ElementId u : interval(ball, rest).members) {
    if (u < lo) continue;
    auto v = complement_in(ball, rest, u);
    if (!v || *v <= u) continue;
    parts.push_back(u);
    split(ball, *v, k - 1, u + 1, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<std::vector<ElementId>> k_partitions(const Ball& ball, ElementId w, std::size_t k) {
  if (k < 1) fail(ErrorKind::precondition, "k must be >= 1");
  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> parts;
  split(ball, w, k, 0, parts, out);
  return out;
}

bool is_bipartition_of(const Ball& ball, ElementId w, ElementId u, ElementId v) {
  const auto& a = ball.inversion_set(u);
  const auto& b = ball.inversion_set(v);
  if (a.intersects(b)) return false;
  RootSet joined = a;
  joined |= b;
  return joined == ball.inversion_set(w);
}

// ---------------------------------------------------------------- reports

std::string word_text(const Ball& ball, ElementId id) { return word_text(ball.word(id), ball.rank()); }

std::string word_text(const Word& w, std::size_t rank) {
  if (w.empty()) return "e";
  const bool wide = rank > 9;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) s += ',';
    s += std::to_string(w[i] + 1);
  }
  return s;
}

Word parse_word_labels(const std::string& text, std::size_t rank) {
  Word out;
  if (text.empty() || text == "e") return out;
  auto push = [&](const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::malformed_spec, "bad generator label '" + tok + "'");
    const unsigned long label = std::stoul(tok);
    if (label < 1 || label > rank)
      fail(ErrorKind::index_out_of_range, "generator label " + tok + " outside 1.." + std::to_string(rank));
    out.push_back(static_cast<int>(label) - 1);
  };
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t end = text.find(',', start);
      push(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
      if (end == std::string::npos) break;
      start = end + 1;
    }
  } else {
    for (char c : text) push(std::string(1, c));
  }
  return out;
}

std::string Report::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["radius"] = radius;
  j["conjecture"] = conjecture;
  j["checked_elements"] = checked_elements;
  j["checked_pairs"] = checked_pairs;
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : violations)
    vs.push_back({{"w", v.top}, {"u", v.u}, {"v", v.v}, {"detail", v.detail}});
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

namespace {

void record(const Ball& ball, ElementId w, ElementId u, ElementId v, std::string detail, std::vector<Violation>& out) {
  out.push_back({word_text(ball, w), word_text(ball, u), word_text(ball, v), std::move(detail)});
}

std::string sum_text(std::size_t a, std::size_t b, std::size_t c) {
  return std::to_string(a) + " != " + std::to_string(b) + " + " + std::to_string(c);
}

}  // namespace

std::size_t check_conjecture1(const Ball& ball, ElementId w, std::vector<Violation>& out) {
  const auto pairs = bipartitions(ball, w);
  const std::size_t dw = descents(ball, w);
  for (const auto& p : pairs) {
    const std::size_t du = descents(ball, p.u), dv = descents(ball, p.v);
    if (dw != du + dv) record(ball, w, p.u, p.v, "d_R: " + sum_text(dw, du, dv), out);
  }
  return pairs.size();
}

std::size_t check_conjecture2(const Ball& ball, ElementId w, std::vector<Violation>& out) {
  const auto pairs = diameters(ball, w);
  const std::size_t cw = coatom_count(ball, w);
  for (const auto& [u, v] : pairs) {
    const std::size_t cu = coatom_count(ball, u), cv = coatom_count(ball, v);
    if (cw != cu + cv) record(ball, w, u, v, "coatoms: " + sum_text(cw, cu, cv), out);
  }
  return pairs.size();
}

std::size_t check_conjecture3(const Ball& ball, ElementId w, std::vector<Violation>& out) {
  const auto pairs = diameters(ball, w);
  const std::size_t aw = atom_count(ball, 0, w);
  for (const auto& [u, v] : pairs) {
    const std::size_t au = atom_count(ball, u, w), av = atom_count(ball, v, w);
    if (aw != au + av) record(ball, w, u, v, "atoms: " + sum_text(aw, au, av), out);
  }
  return pairs.size();
}

namespace {

struct Partial {
  std::size_t pairs = 0;
  std::vector<Violation> violations;
};

template <class Check>
Report run_all(const Ball& ball, std::string name, unsigned workers, Check check) {
  const auto start = std::chrono::steady_clock::now();
  auto parts = parallel_map(ball.size(), workers, [&](std::size_t i) {
    Partial p;
    p.pairs = check(static_cast<ElementId>(i), p.violations);
    return p;
  });
  Report r;
  r.group = ball.graph().name().empty() ? ball.graph().canonical() : ball.graph().name();
  r.radius = ball.radius();
  r.conjecture = std::move(name);
  r.checked_elements = ball.size();
  for (auto& p : parts) {
    r.checked_pairs += p.pairs;
    for (auto& v : p.violations) r.violations.push_back(std::move(v));
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

Report verify_conjecture(const Ball& ball, int conjecture, unsigned workers) {
  switch (conjecture) {
    case 1:
      return run_all(ball, "1", workers, [&](ElementId w, auto& out) { return check_conjecture1(ball, w, out); });
    case 2:
      return run_all(ball, "2", workers, [&](ElementId w, auto& out) { return check_conjecture2(ball, w, out); });
    case 3:
      return run_all(ball, "3", workers, [&](ElementId w, auto& out) { return check_conjecture3(ball, w, out); });
    default:
      break;
  }
  fail(ErrorKind::precondition, "conjecture must be 1, 2 or 3");
}

Report verify_diameters_match(const Ball& ball, unsigned workers) {
  return run_all(ball, "diameters", workers, [&](ElementId w, std::vector<Violation>& out) {
    const auto bips = bipartitions(ball, w);
    std::vector<ElementPair> from_complements;
    for (const auto& b : bips) from_complements.emplace_back(b.u, b.v);
    const auto scanned = diameters(ball, w);
    if (scanned != from_complements)
      record(ball, w, w, w,
             std::to_string(from_complements.size()) + " bipartitions vs " + std::to_string(scanned.size()) +
                 " diameters",
             out);
    return scanned.size();
  });
}

ElementId longest_in_ball(const Ball& ball) {
  const DescentMask all = (DescentMask(1) << ball.rank()) - 1;
  const auto top = static_cast<ElementId>(ball.size() - 1);
  if (ball.right_descents(top) != all)
    fail(ErrorKind::precondition, "ball does not contain the longest element of a finite group");
  return top;
}

LongestReport verify_longest(const Ball& ball) {
  const ElementId top = longest_in_ball(ball);
  const auto& sys = ball.system();
  LongestReport r;
  r.group_order = ball.size();
  const auto bips = bipartitions(ball, top);
  r.total = bips.size();
  r.proper = static_cast<std::size_t>(std::count_if(bips.begin(), bips.end(), [](const Bipartition& b) { return b.proper; }));

  std::set<ElementPair> cosets;
  for (ElementId u = 0; u < ball.size(); ++u) {
    const ElementId v = *ball.find(sys.multiply(ball.element(u), ball.element(top)));
    cosets.emplace(std::min(u, v), std::max(u, v));
  }
  std::set<ElementPair> found;
  r.descents_add_up = true;
  for (const auto& b : bips) {
    found.emplace(b.u, b.v);
    if (descents(ball, b.u) + descents(ball, b.v) != ball.rank()) r.descents_add_up = false;
  }
  r.matches_coset_pairs = found == cosets;
  return r;
}

ReductionClauses verify_reduction_longest(const Ball& ball, ElementId w, ElementId u, ElementId v) {
  const ElementId top = longest_in_ball(ball);
  const auto& sys = ball.system();
  auto times_w0 = [&](ElementId g) { return *ball.find(sys.multiply(ball.element(g), ball.element(top))); };
  ReductionClauses c;
  c.i = is_bipartition_of(ball, w, u, v);
  c.ii = is_bipartition_of(ball, times_w0(v), u, times_w0(w));
  c.iii = is_bipartition_of(ball, times_w0(u), times_w0(w), v);
  return c;
}

ThreePartitionReport three_partition_check(const Ball& ball) {
  const ElementId top = longest_in_ball(ball);
  const auto& sys = ball.system();
  ThreePartitionReport r;
  const auto triples = k_partitions(ball, top, 3);
  r.partitions = triples.size();
  for (const auto& t : triples) {
    const bool proper = t.front() != 0;
    const std::size_t sum = descents(ball, t[0]) + descents(ball, t[1]) + descents(ball, t[2]);
    if (proper) ++r.proper_partitions;
    if (sum != ball.rank()) {
      ++r.violations;
      if (proper) ++r.proper_violations;
    }
  }
  // Each 3-partition gives three (u3, {u1, u2}) with {u1, u2} a bipartition
  // of u3 w0, and every such bipartition with distinct parts arises this way.
  std::size_t marked = 0;
  for (ElementId u3 = 0; u3 < ball.size(); ++u3) {
    const ElementId w = *ball.find(sys.multiply(ball.element(u3), ball.element(top)));
    for (const auto& b : bipartitions(ball, w)) {
      if (b.u == u3 || b.v == u3 || b.u == b.v) continue;
      ++marked;
    }
  }
  r.bijection_holds = marked == 3 * triples.size();
  return r;
}

}  // namespace coxpart
