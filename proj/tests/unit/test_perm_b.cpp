#include <random>

#include "coxpart/ball.hpp"
#include "coxpart/error.hpp"
#include "coxpart/graph.hpp"
#include "coxpart/partitions.hpp"
#include "coxpart/perm_b.hpp"
#include "doctest.h"

using namespace coxpart;
using namespace coxpart::perm;

namespace {

SignedPerm S(const std::string& s) { return parse_signed(s); }
Perm P(const std::string& s) { return parse_perm(s); }

const char* kSigma = "4 -5 -2 -6 3 1 | -1 -3 6 2 5 -4";

}  // namespace

TEST_CASE("signed permutation storage") {
  const SignedPerm s = S(kSigma);
  CHECK(s.n() == 6);
  CHECK(s.at(-6) == 4);
  CHECK(s.at(6) == -4);
  CHECK(s.at(1) == -1);
  CHECK(s.positive() == std::vector<int>{-1, -3, 6, 2, 5, -4});
  CHECK(s == S("-1 -3 6 2 5 -4"));
  CHECK(s == S("4,-5,-2,-6,3,1,-1,-3,6,2,5,-4"));
  CHECK(format_signed(s) == kSigma);
  CHECK_THROWS_AS(S("1 2 | 2 1"), Error);
  CHECK_THROWS_AS(SignedPerm({1, -1}), Error);
  CHECK_THROWS_AS(S("1 x"), Error);
  try {
    SignedPerm::from_full({2, 1, 1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::set_not_symmetric);
  }
}

TEST_CASE("signed inversions and reflections") {
  const SignedPerm s = S(kSigma);
  const PairSet inv = invs_B(s);
  CHECK(inv.size() == 29);
  for (std::pair<int, int> p : {std::pair(-1, 1), {-3, 3}, {-4, 4}, {-4, 5}, {-5, 4}, {-4, -2}, {2, 4}, {5, 6}, {-6, -5},
                                {-3, -1}, {1, 3}, {2, 3}, {-3, -2}})
    CHECK(inv.count(p));
  const PairSet t = reflections_from_invs(inv);
  CHECK(t.size() == 16);
  CHECK(t.count({-5, 4}));
  CHECK(reflection_text({-5, 4}) == "(-5 4)(-4 5)");
  CHECK(reflection_text({-1, 1}) == "(-1 1)");
  CHECK(invs_B(SignedPerm::identity(4)).empty());
  CHECK(reflections_from_invs({}).empty());
  for (const SignedPerm& x : all_signed_perms(3)) {
    const int a = std::abs(x.at(1));
    CHECK(invs_B(x).count({-a, a}) == (x.at(1) < 0));
  }
}

TEST_CASE("signed inversion set characterization") {
  std::mt19937 rng(3);
  for (int t = 0; t < 1000; ++t) {
    Perm p = identity_perm(4);
    std::shuffle(p.begin(), p.end(), rng);
    for (int& a : p)
      if (rng() & 1u) a = -a;
    CHECK(is_inversion_set_B(invs_B(SignedPerm(p)), 4));
  }
  CHECK_FALSE(is_inversion_set_B({{1, 2}}, 2));
  CHECK(is_inversion_set_B({{1, 2}, {-2, -1}}, 2));
  CHECK(is_inversion_set_B({}, 2));
}

TEST_CASE("type B standardization") {
  const SignedPerm w = S(kSigma);
  CHECK(restrict_word(w.full(), {-5, -2, 4, 6}) == InjWord{4, -5, -2, 6});
  CHECK(std_A_restricted({4, -5, -2, 6}) == P("3124"));
  CHECK(restrict_word(w.full(), {-6, -3, -2, 2, 3, 6}) == InjWord{-2, -6, 3, -3, 6, 2});
  CHECK(std_B({-2, -6, 3, -3, 6, 2}) == S("-1 -3 2 | -2 3 1"));
  CHECK(std_B({-7, -2, 2, 7}) == SignedPerm::identity(2));
  CHECK(std_B({}).n() == 0);
  CHECK_THROWS_AS(std_A_restricted({3, -3}), Error);
  CHECK_THROWS_AS(std_B({1, 2}), Error);
  try {
    std_B({-1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::set_not_symmetric);
  }
  try {
    std_A_restricted({-2, 1, 2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::set_not_antisymmetric);
  }
}

TEST_CASE("signed decreased word and the longest element") {
  CHECK(dec_B(S(kSigma)) == S("4 -5 -2 3 1 | -1 -3 2 5 -4"));
  CHECK(dec_B(SignedPerm::identity(4)) == SignedPerm::identity(3));
  CHECK_THROWS_AS(dec_B(SignedPerm::identity(1)), Error);
  const SignedPerm w0 = woB_multiply(SignedPerm::identity(3));
  CHECK(w0 == S("3 2 1 | -1 -2 -3"));
  CHECK(descents_B(w0) == 3);
  std::mt19937 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 5);
    Perm p = identity_perm(n);
    std::shuffle(p.begin(), p.end(), rng);
    for (int& a : p)
      if (rng() & 1u) a = -a;
    const SignedPerm s(p);
    CHECK(woB_multiply(woB_multiply(s)) == s);
    CHECK(descents_B(woB_multiply(s)) == static_cast<std::size_t>(n) - descents_B(s));
    CHECK(n_in_positive_position(s) != n_in_positive_position(woB_multiply(s)));
  }
}

TEST_CASE("signed descents and words") {
  const SignedPerm s = S(kSigma);
  CHECK(right_descents_B(s) == std::vector<int>{0, 1, 3, 5});
  CHECK(descents_B(s) == 4);
  const Word given{0, 2, 1, 0, 3, 2, 1, 0, 2, 1, 2, 3, 4, 5, 4, 3};
  CHECK(signed_from_word(given, 6) == s);
  CHECK(reduced_word_B(s).size() == 16);
  CHECK(signed_from_word(reduced_word_B(s), 6) == s);
  CHECK(signed_from_word({0}, 3) == SignedPerm({-1, 2, 3}));
  CHECK_THROWS_AS(signed_from_word({3}, 3), Error);
}

TEST_CASE("positive decompositions") {
  SUBCASE("three classes") {
    const SignedPerm w = S(kSigma), u = S("4 -5 -2 -6 3 -1 | 1 -3 6 2 5 -4"), v = S("-6 -5 -4 -3 -2 1 | -1 2 3 4 5 6");
    REQUIRE(is_bipartition_B(w, u, v));
    CHECK(descents_B(w) == descents_B(u) + descents_B(v));
    const auto d = decompose_B(w, u, v);
    CHECK(d.right == std::set<int>{-4, 2, 5, 6});
    CHECK(d.forgotten == std::set<int>{4, -2, -5, -6});
    CHECK(d.left == std::set<int>{-3, -1, 1, 3});
    CHECK(d.w_left == S("2 1 | -1 -2"));
    CHECK(d.u_left == S("2 -1 | 1 -2"));
    CHECK(d.v_left == S("-2 1 | -1 2"));
    CHECK(d.w_right == P("4231"));
    CHECK(d.u_right == P("4231"));
    CHECK(d.v_right == P("1234"));
    CHECK(descents_B(w) == 4);
    CHECK(descents_B(d.w_left) == 2);
    CHECK(descents(d.w_right) == 2);
    CHECK(descents_B(u) == 3);
    CHECK(descents_B(d.u_left) == 1);
    CHECK(descents_B(v) == 1);
    CHECK(descents_B(d.v_left) == 1);
    CHECK(descents(d.v_right) == 0);
  }
  SUBCASE("second") {
    const SignedPerm w = S("1 -4 -3 -6 -2 -5 | 5 2 6 3 4 -1"), u = S("-4 -3 -6 -2 -5 -1 | 1 5 2 6 3 4"),
                     v = S("1 -6 -5 -4 -3 -2 | 2 3 4 5 6 -1");
    const auto d = decompose_B(w, u, v);
    CHECK(d.right == std::set<int>{-1, 3, 4, 6});
    CHECK(d.left == std::set<int>{-5, -2, 2, 5});
    CHECK(d.w_left == S("-1 -2 | 2 1"));
    CHECK(d.u_left == S("-1 -2 | 2 1"));
    CHECK(d.v_left == S("-2 -1 | 1 2"));
    CHECK(d.w_right == P("4231"));
    CHECK(d.u_right == P("1423"));
    CHECK(d.v_right == P("2341"));
  }
  SUBCASE("n in first position") {
    const SignedPerm w = S("2 -1 -3 -4 5 -6 | 6 -5 4 3 1 -2"), u = S("2 -1 -4 -3 5 -6 | 6 -5 3 4 1 -2"),
                     v = S("-6 -5 -3 -4 -2 -1 | 1 2 4 3 5 6");
    const auto d = decompose_B(w, u, v);
    CHECK(d.left.empty());
    CHECK(d.w_left.n() == 0);
    CHECK(d.w_right == P("615432"));
    CHECK(d.u_right == P("614532"));
    CHECK(d.v_right == P("123546"));
    CHECK(descents(d.w_right) == descents_B(w));
  }
  SUBCASE("errors") {
    const SignedPerm w = S("1 -3 6 2 -4 -5 | 5 4 -2 -6 3 -1");
    CHECK_THROWS_AS(decompose_B(w, w, SignedPerm::identity(6)), Error);
    try {
      decompose_B(w, w, SignedPerm::identity(6));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::n_not_positive);
    }
    try {
      decompose_B(S(kSigma), S(kSigma), S(kSigma));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_a_bipartition);
    }
  }
}

TEST_CASE("negative decompositions") {
  SUBCASE("mixed") {
    const SignedPerm w = S("1 -3 6 2 -4 -5 | 5 4 -2 -6 3 -1"), u = S("1 -3 6 2 -5 -4 | 4 5 -2 -6 3 -1"),
                     v = S("-6 -4 -5 -3 -2 -1 | 1 2 3 5 4 6");
    REQUIRE(is_bipartition_B(w, u, v));
    const auto d = decompose_B_negative(w, u, v);
    CHECK(d.left == std::set<int>{-3, 1});
    CHECK(d.forgotten == std::set<int>{-1, 3});
    CHECK(d.right == std::set<int>{-6, -5, -4, -2, 2, 4, 5, 6});
    CHECK(d.w_left == P("21"));
    CHECK(d.u_left == P("21"));
    CHECK(d.v_left == P("12"));
    CHECK(d.w_right == S("4 1 -2 -3 | 3 2 -1 -4"));
    CHECK(d.u_right == S("4 1 -3 -2 | 2 3 -1 -4"));
    CHECK(d.v_right == S("-4 -2 -3 -1 | 1 3 2 4"));
  }
  SUBCASE("n first") {
    const SignedPerm w = S("6 5 -3 4 -1 2 | -2 1 -4 3 -5 -6"), u = S("-5 6 -3 4 -2 -1 | 1 2 -4 3 -6 5"),
                     v = S("5 -6 -4 -3 -1 2 | -2 1 3 4 6 -5");
    REQUIRE(is_bipartition_B(w, u, v));
    const auto d = decompose_B_negative(w, u, v);
    CHECK(d.left.empty());
    CHECK(d.forgotten.empty());
    CHECK(d.w_right == w);
    CHECK(d.u_right == u);
    CHECK(d.v_right == v);
  }
  SUBCASE("n must be negative") {
    const SignedPerm e = SignedPerm::identity(3);
    try {
      decompose_B_negative(e, e, e);
    } catch (const Error& ex) {
      CHECK(ex.kind() == ErrorKind::n_not_negative);
    }
    CHECK_THROWS_AS(decompose_B_negative(e, e, e), Error);
  }
}

TEST_CASE("bridge to the signed reflection representation") {
  for (int n = 2; n <= 4; ++n) {
    const CoxeterSystem sys(parse_graph("B" + std::to_string(n)));
    const Ball ball = Ball::build(sys.graph(), static_cast<std::size_t>(n * n));
    REQUIRE(ball.size() == all_signed_perms(n).size());
    for (const SignedPerm& s : all_signed_perms(n)) {
      const GroupElement g = coxeter_from_signed(sys, s);
      CHECK(signed_from_coxeter(sys, g) == s);
      CHECK(sys.length(g) == reflections_from_invs(invs_B(s)).size());
      DescentMask desc = 0;
      for (int i : right_descents_B(s)) desc |= DescentMask(1) << i;
      CHECK(desc == sys.right_descents(g));
    }
  }
}

TEST_CASE("signed bipartitions agree with the reflection representation") {
  for (int n = 2; n <= 4; ++n) {
    const CoxeterSystem sys(parse_graph("B" + std::to_string(n)));
    const Ball ball = Ball::build(sys.graph(), static_cast<std::size_t>(n * n));
    for (const SignedPerm& w : all_signed_perms(n)) {
      const ElementId wid = *ball.find(coxeter_from_signed(sys, w));
      std::set<std::pair<ElementId, ElementId>> from_perms, from_ball;
      for (const auto& [u, v] : bipartitions_B(w)) {
        CHECK(is_bipartition_B(w, u, v));
        const ElementId a = *ball.find(coxeter_from_signed(sys, u)), b = *ball.find(coxeter_from_signed(sys, v));
        from_perms.emplace(std::min(a, b), std::max(a, b));
      }
      for (const auto& b : bipartitions(ball, wid)) from_ball.emplace(b.u, b.v);
      CHECK(from_perms == from_ball);
    }
  }
}

TEST_CASE("type B statements on B_n") {
  for (int n = 1; n <= 4; ++n) {
    const TypeBSweep r = sweep_type_b(n, 4);
    INFO("n = " << n);
    CHECK(r.bipartitions > 0);
    CHECK(r.conjecture1 == 0);
    CHECK(r.reflection_count == 0);
    CHECK(r.dec_preserved == 0);
    CHECK(r.longest_reduction == 0);
    CHECK(r.cut_shape == 0);
    CHECK(r.cross_inversions == 0);
    CHECK(r.descent_colors == 0);
    CHECK(r.extra_descents == 0);
    CHECK(r.decomposition == 0);
    CHECK(r.negative_decomposition == 0);
    CHECK(r.invs_characterization == 0);
  }
  CHECK(sweep_type_b(3, 1).bipartitions == sweep_type_b(3, 8).bipartitions);
}
