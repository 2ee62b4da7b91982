// Acceptance run: one PASS/FAIL line per criterion, exact integer tolerances.
// Exit status is 0 when every criterion passes, or when the only failures are
// the pinned table rows listed in kPinnedRows and the engine still computes
// exactly the pinned values for them.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coxpart/ball.hpp"
#include "coxpart/enumeration.hpp"
#include "coxpart/graph.hpp"
#include "coxpart/partitions.hpp"
#include "coxpart/perm_a.hpp"
#include "coxpart/perm_b.hpp"

using namespace coxpart;
using namespace coxpart::perm;

namespace {

struct Row {
  const char* group;
  std::size_t k;
  const char* bip;
  const char* pirr;
};

// Reference rows in TeX-like notation (parse_poly drops the braces).
const std::vector<Row> kRows = {
    {"A2", 3, "q^3", "1+2q+2q^2"},
    {"A3", 6, "q^2 + 2q^3 + 4q^4 + 3q^5 + q^6", "1 + 3q + 4q^2 + 4q^3 + q^4"},
    {"A4", 10, "3q^2 + 7q^3 + 10q^4 + 16q^5 + 16q^6 + 15q^7 + 9q^8 + 4q^9 + q^{10}",
     "1 + 4q + 6q^2 + 8q^3 + 10q^4 + 6q^5 + 4q^6"},
    {"A5", 15,
     "6q^2 + 17q^3 + 30q^4 + 43q^5 + 62q^6 + 78q^7 + 74q^8 + 79q^9+ 67q^{10} + 49q^{11} + 29q^{12} + 14q^{13} + 5q^{14} "
     "+ q^{15}",
     "1 + 5q + 8q^2 + 12q^3 + 19q^4 + 28q^5 + 28q^6 + 23q^7 + 27q^8 + 11q^9 + 4q^{10}"},
    {"B2", 4, "q^4", "1 + 2q + 2q^2 + 2q^3"},
    {"B3", 9, "q^2 + q^3 + 3q^4 + 2q^5 + 4q^6 + 4q^7 + 3q^8 + q^9", "1 + 3q + 4q^2 + 6q^3 + 5q^4 + 6q^5 + 3q^6 + q^7"},
    {"B4", 16,
     "3q^2 + 6q^3 + 10q^4 + 12q^5 + 19q^6 + 17q^7 + 21q^8 + 19q^9 + 22q^{10} + 23q^{11} + 19q^{12} + 16q^{13} + 9q^{14} "
     "+ 4q^{15} + q^{16}",
     "1 + 4q + 6q^2 + 10q^3 + 14q^4 + 20q^5 + 20q^6 + 27q^7 + 25q^8 + 25q^9 + 17q^{10} + 9q^{11} + 5q^{12}"},
    {"D4", 12, "3q^2 + 4q^3 + 12q^4 + 15q^5 + 15q^6 + 15q^7 + 21q^8 + 15q^9 + 9q^{10} + 4q^{11} + q^{12}",
     "1 + 4q + 6q^2 + 12q^3 + 11q^4 + 13q^5 + 15q^6 + 13q^7 + 2q^8 + q^9"},
    {"D5", 20,
     "6q^2 + 14q^3 + 26q^4 + 44q^5 + 65q^6 + 78q^7 + 99q^8 + 114q^9 + 103q^{10} + 115q^{11} + 122q^{12} + 101q^{13} + "
     "100q^{14} + 80q^{15} + 54q^{16} + 30q^{17} + 14q^{18} + 5q^{19} + q^{20}",
     "1 + 5q + 8q^2 + 16q^3 + 28q^4 + 41q^5 + 55q^6 + 77q^7 + 86q^8 + 91q^9+ 109q^{10} + 90q^{11} + 63q^{12} + 54q^{13} "
     "+ 20q^{14} + 5q^{15}"},
    {"F4", 24,
     "3q^2 + 6q^3 + 7q^4 + 12q^5 + 10q^6 + 20q^7 + 24q^8 + 26q^9 + 26q^{10} + 22q^{11} + 28q^{12} + 22q^{13} + 26q^{14} "
     "+ 26q^{15} + 28q^{16} + 24q^{17}+ 26q^{18} + 20q^{19} + 21q^{20} + 16q^{21} + 9q^{22} + 4q^{23} + q^{24}",
     "1 + 4q + 6q^2 + 10q^3 + 18q^4 + 24q^5 + 38q^6 + 40q^7 + 47q^8+ 54q^9 + 61q^{10} + 70q^{11} + 66q^{12} + 70q^{13} "
     "+ 61q^{14} + 54q^{15} + 43q^{16} + 36q^{17} + 22q^{18} + 16q^{19} + 4q^{20}"},
    {"H3", 15,
     "q^2 + q^3 + 2q^4 + q^5 + 3q^6 + 2q^7 + 4q^8 + 2q^9 + 3q^{10} + 2q^{11} + 4q^{12} + 4q^{13} + 3q^{14} + q^{15}",
     "1 + 3q + 4q^2 + 6q^3 + 7q^4 + 10q^5 + 9q^6 + 10q^7 + 8q^8 + 10q^9 + 8q^{10} + 7q^{11} + 3q^{12} + q^{13}"},
    {"affineA2", 12, "3q^3 + 6q^5 + 6q^7 + 6q^9 + 6q^{11}",
     "1 + 3q + 6q^2 + 6q^3 + 12q^4 + 9q^5 + 18q^6 + 15q^7 + 24q^8 + 21q^9 + 30q^{10} + 27q^{11} + 36q^{12}"},
    {"affineB2", 12, "2q^2 + 4q^3 + 16q^4 + 20q^5 + 12q^6 + 32q^7 + 44q^8 + 24q^9 + 44q^{10} + 56q^{11} + 36q^{12}",
     "1 + 3q + 4q^2 + 8q^3 + 9q^4 + 9q^5 + 14q^6 + 17q^7 + 19q^8 + 20q^9 + 23q^{10} + 29q^{11} + 30q^{12}"},
    {"affineG2", 12, "q^2 + 2q^4 + 4q^5 + 2q^6 + 2q^7 + 2q^8 + 4q^9 + 4q^{10} + 2q^{12}",
     "1 + 3q + 4q^2 + 6q^3 + 7q^4 + 12q^5 + 13q^6 + 15q^7 + 16q^8 + 19q^9 + 23q^{10} + 23q^{11} + 27q^{12}"},
    {"tri(3,3,4)", 12, "2q^3 + q^4 + 2q^5 + 4q^6 + 6q^8+ 4q^{10} + 2q^{11} + 2q^{12}",
     "1 + 3q + 6q^2 + 8q^3 + 14q^4 + 20q^5 + 27q^6 + 44q^7 + 56q^8+ 87q^9 + 118q^{10} + 169q^{11} + 238q^{12}"},
    {"paw", 12, "2q^2 + 6q^3 + 9q^4 + 16q^5 + 16q^6 + 22q^7 + 27q^8 + 28q^9 + 32q^{10} + 40q^{11} + 50q^{12}",
     "1 + 4q + 8q^2 + 14q^3 + 26q^4 + 41q^5 + 73q^6 + 114q^7 + 178q^8+ 278q^9 + 422q^{10} + 631q^{11} + 939q^{12}"},
};

// Reference bip rows that disagree with the engine, with the engine's values.
// Both are inconsistent with the reference pirr rows and the growth series
// (bip + pirr must equal the number of elements of each length).
const std::map<std::string, std::string> kPinnedRows = {
    {"affineB2", "q^2 + 2*q^4 + 4*q^5 + 2*q^6 + 2*q^7 + 2*q^8 + 4*q^9 + 4*q^10 + 2*q^12"},
    {"affineG2", "q^2 + q^3 + 2*q^4 + 2*q^6 + 2*q^7 + 3*q^8 + 2*q^9 + q^10 + 4*q^11 + 2*q^12"},
};

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool pinned_only = false;  // every failure is a pinned row that still computes the pinned value

  void check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

unsigned kWorkers = 4;

struct Computed {
  const Row* row;
  Ball ball;
  SplitCounts counts;
  GenPoly growth;
};

std::vector<Computed>& computed_rows() {
  static std::vector<Computed> rows = [] {
    std::vector<Computed> out;
    for (const Row& r : kRows) {
      Ball ball = Ball::build(parse_graph(r.group), r.k);
      SplitCounts counts = split_counts(ball, kWorkers);
      GenPoly growth = growth_series(ball);
      out.push_back({&r, std::move(ball), std::move(counts), std::move(growth)});
    }
    return out;
  }();
  return rows;
}

Outcome table_bip() {
  Outcome o;
  bool all_pinned = true;
  for (const Computed& c : computed_rows()) {
    const GenPoly expected = parse_poly(c.row->bip, c.row->k);
    if (c.counts.bip == expected) continue;
    const auto pin = kPinnedRows.find(c.row->group);
    const bool pinned = pin != kPinnedRows.end() && format_poly(c.counts.bip) == pin->second;
    all_pinned = all_pinned && pinned;
    o.failures.push_back(std::string(c.row->group) + ": computed " + format_poly(c.counts.bip) + ", reference " +
                         format_poly(expected) + (pinned ? " (pinned)" : ""));
  }
  for (const Computed& c : computed_rows())
    if (std::string(c.row->group) == "affineA2")
      o.notes.push_back("affineA2 q^12 coefficient computed " + std::to_string(c.counts.bip.coeffs[12]));
  o.pinned_only = !o.failures.empty() && all_pinned;
  return o;
}

Outcome table_pirr() {
  Outcome o;
  for (const Computed& c : computed_rows()) {
    const GenPoly expected = parse_poly(c.row->pirr, c.row->k);
    o.check(c.counts.pirr == expected, std::string(c.row->group) + ": computed " + format_poly(c.counts.pirr) +
                                          ", reference " + format_poly(expected));
  }
  return o;
}

Outcome complementarity() {
  Outcome o;
  for (const Computed& c : computed_rows()) {
    GenPoly sum = c.counts.bip;
    sum += c.counts.pirr;
    o.check(sum == c.growth, std::string(c.row->group) + ": bip + pirr != growth");
    // the standalone functions agree with the joint pass
    o.check(bip_genfun(c.ball, kWorkers) == c.counts.bip, std::string(c.row->group) + ": bip_genfun");
    o.check(pirr_genfun(c.ball, kWorkers) == c.counts.pirr, std::string(c.row->group) + ": pirr_genfun");
  }
  return o;
}

ElementId id_of(const Ball& b, const std::string& digits) { return b.id_of_word(parse_word_labels(digits, b.system().rank())); }

std::size_t d_r(const Ball& b, ElementId x) { return static_cast<std::size_t>(popcount(b.right_descents(x))); }

Outcome figure_interval() {
  Outcome o;
  const Ball b = Ball::build(parse_graph("D4-fig1"), 5);
  const ElementId w = id_of(b, "42131");
  const Interval iv = interval(b, w);
  std::vector<ElementId> want_atoms{id_of(b, "1"), id_of(b, "2"), id_of(b, "4")};
  std::sort(want_atoms.begin(), want_atoms.end());
  o.check(atoms(b, iv) == want_atoms, "atoms");
  o.check(coatoms(b, iv).size() == 2, "coatom count");
  const ElementId one = id_of(b, "1"), other = id_of(b, "4231");
  const std::vector<ElementPair> want{{0, w}, {std::min(one, other), std::max(one, other)}};
  o.check(diameters(b, w) == want, "diameters");
  o.check(coatom_count(b, w) == 2 && coatom_count(b, one) == 1 && coatom_count(b, other) == 1, "coatoms 2 = 1 + 1");
  o.check(atom_count(b, 0, w) == 3 && atom_count(b, one, w) == 2 && atom_count(b, other, w) == 1, "atoms 3 = 2 + 1");
  return o;
}

Outcome conjectures() {
  Outcome o;
  std::size_t elements = 0;
  for (const Computed& c : computed_rows())
    for (int k = 1; k <= 3; ++k) {
      const Report r = verify_conjecture(c.ball, k, kWorkers);
      elements += r.checked_elements;
      o.check(r.violations.empty(), std::string(c.row->group) + " conjecture " + std::to_string(k) + ": " +
                                        std::to_string(r.violations.size()) + " violations");
      o.check(r.checked_elements == c.ball.size(), std::string(c.row->group) + ": not every element checked");
    }
  const std::map<std::string, std::size_t> orders{{"A2", 6},   {"A3", 24},   {"A4", 120}, {"A5", 720},
                                                  {"B2", 8},   {"B3", 48},   {"B4", 384}, {"D4", 192},
                                                  {"D5", 1920}, {"F4", 1152}, {"H3", 120}};
  for (const Computed& c : computed_rows()) {
    const auto it = orders.find(c.row->group);
    if (it != orders.end()) o.check(c.ball.size() == it->second, std::string(c.row->group) + ": not the whole group");
  }
  o.notes.push_back(std::to_string(elements) + " element checks");
  return o;
}

Outcome worked_examples() {
  Outcome o;
  {
    const Ball b = Ball::build(parse_graph("A3"), 6);
    const ElementId w = id_of(b, "32123");
    std::set<std::pair<ElementId, ElementId>> proper;
    for (const auto& x : bipartitions(b, w))
      if (x.proper) proper.emplace(x.u, x.v);
    auto pair = [&](const char* x, const char* y) {
      const ElementId a = id_of(b, x), c = id_of(b, y);
      return std::pair(std::min(a, c), std::max(a, c));
    };
    o.check(proper == std::set{pair("12", "321"), pair("32", "123")}, "A3 32123 bipartitions");
    o.check(d_r(b, w) == 2 && d_r(b, id_of(b, "12")) == 1 && d_r(b, id_of(b, "321")) == 1 &&
                d_r(b, id_of(b, "32")) == 1 && d_r(b, id_of(b, "123")) == 1,
            "A3 32123 descents 2 = 1 + 1");
  }
  {
    const Perm w = parse_perm("526341"), u = parse_perm("234561"), v = parse_perm("152634");
    o.check(is_bipartition_A(w, u, v), "526341 bipartition");
    o.check(descents(w) == 3 && descents(u) == 1 && descents(v) == 2, "526341 descents 3 = 1 + 2");
    const auto d = decompose_A(w, u, v);
    o.check(d.left == std::set<int>{2, 5} && d.right == std::set<int>{1, 3, 4, 6}, "526341 letter classes");
    o.check(d.w_left == parse_perm("21") && d.u_left == parse_perm("12") && d.v_left == parse_perm("21"),
            "526341 left words");
    o.check(d.w_right == parse_perm("4231") && d.u_right == parse_perm("2341") && d.v_right == parse_perm("1423"),
            "526341 right words");
  }
  const SignedPerm sigma = parse_signed("4 -5 -2 -6 3 1 | -1 -3 6 2 5 -4");
  o.check(reduced_word_B(sigma).size() == 16, "signed example length 16");
  o.check(invs_B(sigma).size() == 29, "signed example 29 inversions");
  o.check(reflections_from_invs(invs_B(sigma)).size() == 16, "signed example 16 reflections");
  o.check(descents_B(sigma) == 4, "signed example d_R 4");
  auto S = [](const char* s) { return parse_signed(s); };
  auto P = [](const char* s) { return parse_perm(s); };
  {
    const SignedPerm u = S("4 -5 -2 -6 3 -1 | 1 -3 6 2 5 -4"), v = S("-6 -5 -4 -3 -2 1 | -1 2 3 4 5 6");
    const auto d = decompose_B(sigma, u, v);
    o.check(is_bipartition_B(sigma, u, v) && descents_B(u) == 3 && descents_B(v) == 1, "positive 1 split");
    o.check(d.left == std::set<int>{-3, -1, 1, 3} && d.forgotten == std::set<int>{4, -2, -5, -6} &&
                d.right == std::set<int>{-4, 2, 5, 6},
            "positive 1 classes");
    o.check(d.w_left == S("2 1 | -1 -2") && d.u_left == S("2 -1 | 1 -2") && d.v_left == S("-2 1 | -1 2"),
            "positive 1 left words");
    o.check(d.w_right == P("4231") && d.u_right == P("4231") && d.v_right == P("1234"), "positive 1 right words");
  }
  {
    const SignedPerm w = S("1 -4 -3 -6 -2 -5 | 5 2 6 3 4 -1"), u = S("-4 -3 -6 -2 -5 -1 | 1 5 2 6 3 4"),
                     v = S("1 -6 -5 -4 -3 -2 | 2 3 4 5 6 -1");
    const auto d = decompose_B(w, u, v);
    o.check(d.left == std::set<int>{-5, -2, 2, 5} && d.right == std::set<int>{-1, 3, 4, 6}, "positive 2 classes");
    o.check(d.w_left == S("-1 -2 | 2 1") && d.u_left == S("-1 -2 | 2 1") && d.v_left == S("-2 -1 | 1 2"),
            "positive 2 left words");
    o.check(d.w_right == P("4231") && d.u_right == P("1423") && d.v_right == P("2341"), "positive 2 right words");
  }
  {
    const SignedPerm w = S("2 -1 -3 -4 5 -6 | 6 -5 4 3 1 -2"), u = S("2 -1 -4 -3 5 -6 | 6 -5 3 4 1 -2"),
                     v = S("-6 -5 -3 -4 -2 -1 | 1 2 4 3 5 6");
    const auto d = decompose_B(w, u, v);
    o.check(d.left.empty() && d.w_left.n() == 0, "positive 3 no left letters");
    o.check(d.w_right == P("615432") && d.u_right == P("614532") && d.v_right == P("123546"),
            "positive 3 right words");
  }
  {
    const SignedPerm w = S("1 -3 6 2 -4 -5 | 5 4 -2 -6 3 -1"), u = S("1 -3 6 2 -5 -4 | 4 5 -2 -6 3 -1"),
                     v = S("-6 -4 -5 -3 -2 -1 | 1 2 3 5 4 6");
    const auto d = decompose_B_negative(w, u, v);
    o.check(d.left == std::set<int>{-3, 1} && d.forgotten == std::set<int>{-1, 3} &&
                d.right == std::set<int>{-6, -5, -4, -2, 2, 4, 5, 6},
            "negative 1 classes");
    o.check(d.w_left == P("21") && d.u_left == P("21") && d.v_left == P("12"), "negative 1 left words");
    o.check(d.w_right == S("4 1 -2 -3 | 3 2 -1 -4") && d.u_right == S("4 1 -3 -2 | 2 3 -1 -4") &&
                d.v_right == S("-4 -2 -3 -1 | 1 3 2 4"),
            "negative 1 right words");
  }
  {
    const SignedPerm w = S("6 5 -3 4 -1 2 | -2 1 -4 3 -5 -6"), u = S("-5 6 -3 4 -2 -1 | 1 2 -4 3 -6 5"),
                     v = S("5 -6 -4 -3 -1 2 | -2 1 3 4 6 -5");
    const auto d = decompose_B_negative(w, u, v);
    o.check(is_bipartition_B(w, u, v), "negative 2 split");
    o.check(d.left.empty() && d.forgotten.empty() && d.w_right == w && d.u_right == u && d.v_right == v,
            "negative 2 no left letters");
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::size_t checks = 0;
  for (const char* name : {"A3", "B3"}) {
    CoxeterSystem sys(parse_graph(name));
    const Ball b = Ball::build(sys.graph(), 9);
    for (ElementId u = 0; u < b.size(); ++u)
      for (ElementId v = 0; v < b.size(); ++v, ++checks)
        o.check(sys.cocycle_check(b.element(u), b.element(v)), std::string(name) + " cocycle");
  }
  for (const char* name : {"A3", "B2", "B3"}) {
    const Ball b = Ball::build(parse_graph(name), 9);
    const auto& sys = b.system();
    for (ElementId u = 0; u < b.size(); ++u)
      for (ElementId v = 0; v < b.size(); ++v, ++checks) {
        const std::size_t d = sys.distance(b.element(u), b.element(v));
        o.check(d == b.inversion_set(u).symmetric_difference_size(b.inversion_set(v)),
                std::string(name) + " distance as symmetric difference");
        o.check((d == b.length(u) + b.length(v)) == !b.inversion_set(u).intersects(b.inversion_set(v)),
                std::string(name) + " distance and disjointness");
      }
  }
  for (const char* name : {"A3", "B3", "D4"}) {
    const Ball b = Ball::build(parse_graph(name), 12);
    for (ElementId w = 0; w < b.size(); ++w)
      for (std::size_t k = 1; k <= 4; ++k)
        for (const auto& parts : k_partitions(b, w, k)) {
          ++checks;
          DescentMask left = 0;
          std::size_t len = 0, dr = 0;
          bool disjoint = true, all_below = true;
          for (ElementId u : parts) {
            disjoint = disjoint && (left & b.left_descents(u)) == 0;
            left |= b.left_descents(u);
            len += b.length(u);
            dr += d_r(b, u);
            all_below = all_below && below(b, u, w);
          }
          const std::string tag = std::string(name) + " " + std::to_string(k) + "-partition";
          o.check(disjoint && left == b.left_descents(w), tag + " left descents");
          o.check(len == b.length(w), tag + " lengths");
          o.check(dr == d_r(b, w), tag + " right descents");
          o.check(all_below, tag + " below w");
          o.check(meet(b, parts) == (k == 1 ? w : 0), tag + " meet");
          o.check(join_bounded(b, parts, w) == w, tag + " join");
        }
  }
  for (const Computed& c : computed_rows()) {
    const Report r = verify_diameters_match(c.ball, kWorkers);
    checks += r.checked_elements;
    o.check(r.violations.empty(), std::string(c.row->group) + " diameters vs complements");
  }
  for (int n = 2; n <= 6; ++n) {
    const CoxeterSystem sys(parse_graph("A" + std::to_string(n - 1)));
    const Ball ball = Ball::build(sys.graph(), static_cast<std::size_t>(n * (n - 1) / 2));
    o.check(ball.size() == all_perms(n).size(), "S_" + std::to_string(n) + " size");
    for (const Perm& w : all_perms(n)) {
      ++checks;
      const ElementId wid = *ball.find(coxeter_from_perm(sys, w));
      o.check(ball.length(wid) == invs(w).size(), "S_n length");
      std::set<std::pair<ElementId, ElementId>> from_perms, from_ball;
      for (const auto& [u, v] : bipartitions_A(w)) {
        const ElementId a = *ball.find(coxeter_from_perm(sys, u)), b = *ball.find(coxeter_from_perm(sys, v));
        from_perms.emplace(std::min(a, b), std::max(a, b));
      }
      for (const auto& b : bipartitions(ball, wid)) from_ball.emplace(b.u, b.v);
      o.check(from_perms == from_ball, "S_" + std::to_string(n) + " bipartitions");
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const CoxeterSystem sys(parse_graph("B" + std::to_string(n)));
    const Ball ball = Ball::build(sys.graph(), static_cast<std::size_t>(n * n));
    o.check(ball.size() == all_signed_perms(n).size(), "B_" + std::to_string(n) + " size");
    for (const SignedPerm& w : all_signed_perms(n)) {
      ++checks;
      const ElementId wid = *ball.find(coxeter_from_signed(sys, w));
      o.check(ball.length(wid) == reflections_from_invs(invs_B(w)).size(), "B_n length");
      std::set<std::pair<ElementId, ElementId>> from_perms, from_ball;
      for (const auto& [u, v] : bipartitions_B(w)) {
        const ElementId a = *ball.find(coxeter_from_signed(sys, u)), b = *ball.find(coxeter_from_signed(sys, v));
        from_perms.emplace(std::min(a, b), std::max(a, b));
      }
      for (const auto& b : bipartitions(ball, wid)) from_ball.emplace(b.u, b.v);
      o.check(from_perms == from_ball, "B_" + std::to_string(n) + " bipartitions");
    }
  }
  const TypeASweep a = sweep_type_a(6, true, kWorkers);
  o.check(a.permutations == 720, "S_6 sweep size");
  o.check(a.conjecture1 + a.dec_preserved + a.cross_inversions + a.descent_classes + a.decomposition + a.decreasing +
                  a.letters_mirror + a.invs_characterization ==
              0,
          "S_6 decomposition statements");
  const TypeBSweep bs = sweep_type_b(4, kWorkers);
  o.check(bs.elements == 384, "B_4 sweep size");
  o.check(bs.conjecture1 + bs.reflection_count + bs.dec_preserved + bs.longest_reduction + bs.cut_shape +
                  bs.cross_inversions + bs.descent_colors + bs.extra_descents + bs.decomposition +
                  bs.negative_decomposition + bs.invs_characterization ==
              0,
          "B_4 decomposition statements");
  o.notes.push_back(std::to_string(checks) + " checks, " + std::to_string(a.bipartitions) + " S_6 and " +
                    std::to_string(bs.bipartitions) + " B_4 bipartitions");
  return o;
}

Outcome longest_counts() {
  Outcome o;
  const std::vector<std::pair<const char*, std::size_t>> want{{"A2", 2}, {"B2", 3}, {"A3", 11}, {"B3", 23}};
  for (const auto& [name, proper] : want) {
    const Ball b = Ball::build(parse_graph(name), 9);
    const LongestReport r = verify_longest(b);
    o.check(r.proper == proper && r.proper == r.group_order / 2 - 1,
            std::string(name) + ": " + std::to_string(r.proper) + " proper bipartitions of the longest element");
    o.check(r.matches_coset_pairs && r.descents_add_up, std::string(name) + ": longest element structure");
    const ThreePartitionReport t = three_partition_check(b);
    o.check(t.partitions > 0 && t.violations == 0 && t.proper_violations == 0,
            std::string(name) + ": rank additivity on 3-partitions");
    o.notes.push_back(std::string(name) + " " + std::to_string(t.partitions) + " 3-partitions");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) kWorkers = static_cast<unsigned>(std::max(1, std::atoi(argv[1])));
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"bip generating functions match the reference rows", table_bip},
      {"pirr generating functions match the reference rows", table_pirr},
      {"bip + pirr = growth series", complementarity},
      {"D4 interval [e, 42131]", figure_interval},
      {"conjectures 1-3 have no violations", conjectures},
      {"worked examples", worked_examples},
      {"property suites", property_suites},
      {"longest element counts and 3-partitions", longest_counts},
  };
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = out.failures.empty();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds_since(t0));
    std::cout << "criterion " << (i + 1) << " " << (pass ? "PASS" : "FAIL") << "  " << criteria[i].first
              << "  (exact, " << timing << ")\n";
    for (const auto& n : out.notes) std::cout << "    " << n << "\n";
    for (const auto& f : out.failures) std::cout << "    mismatch: " << f << "\n";
    if (!pass && out.pinned_only) std::cout << "    every mismatch is a pinned row\n";
    ok = ok && (pass || out.pinned_only);
  }
  std::cout << (ok ? "acceptance: ok" : "acceptance: regression") << "\n";
  return ok ? 0 : 1;
}
