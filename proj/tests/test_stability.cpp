#include <algorithm>

#include "doctest.h"
#include "git1/errors.hpp"
#include "git1/stability.hpp"
#include "support.hpp"

using namespace git1;
using testing::curve;
using testing::Gen;
using testing::q;

namespace {

const char* kSmooth3 = R"({"n":3,"core":{"kind":"smooth"},"core_marks":[[1,2,3]]})";
const char* kFold3 = R"({"n":3,"core":{"kind":"fold","m":3},"core_marks":[[1],[2],[3]]})";
const char* kCusp1 = R"({"n":1,"core":{"kind":"fold","m":1},"core_marks":[[1]]})";
const char* kSmoothTail =
    R"({"n":2,"core":{"kind":"smooth"},"core_marks":[[1]],"tails":[{"anchor":{"kind":"smooth","component":0},"components":[[2]],"joints":[{"base":"anchor","attached":[0]}]}]})";

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// The inequalities evaluated directly from the index sets.
bool direct_semistable(const IndexSets& s, const RatVec& chi) {
  Rational sum_i = 0, sum_i0 = 0;
  for (std::size_t k = 0; k < chi.size(); ++k) {
    const int mark = static_cast<int>(k) + 1;
    if (chi[k] < 0) return false;
    if (!contains(s.I, mark) && !contains(s.J, mark) && chi[k] != 0) return false;
    if (contains(s.I, mark)) sum_i += chi[k];
    if (contains(s.I0, mark)) sum_i0 += chi[k];
  }
  return sum_i >= 1 && (s.I0.empty() || sum_i0 <= 1);
}

RatVec chi_near_faces(Gen& g, int n) {
  RatVec chi(n);
  for (auto& a : chi) {
    switch (g.range(0, 3)) {
      case 0: a = 0; break;
      case 1: a = Rational(1, g.range(1, n + 1)); break;
      default: a = g.rational(-1, 3, 6);
    }
  }
  return chi;
}

}  // namespace

TEST_CASE("semistability polytope examples") {
  auto smooth = semistability_polytope(curve(kSmooth3));
  CHECK(smooth.contains({q("1/3"), q("1/3"), q("1/3")}));
  CHECK(smooth.contains({q("5"), q("0"), q("0")}));
  CHECK_FALSE(smooth.contains({q("1/3"), q("1/3"), q("0")}));

  auto fold = semistability_polytope(curve(kFold3));
  CHECK(fold.contains({q("1/3"), q("1/3"), q("1/3")}));
  CHECK(fold.contains({q("1"), q("0"), q("0")}));
  CHECK_FALSE(fold.contains({q("1/2"), q("1/2"), q("1/2")}));

  auto tailed = semistability_polytope(curve(kSmoothTail));
  CHECK(tailed.contains({q("1"), q("0")}));
  CHECK(tailed.contains({q("7/2"), q("0")}));
  CHECK_FALSE(tailed.contains({q("1"), q("1/5")}));
  CHECK_FALSE(tailed.contains({q("1/2"), q("0")}));
}

TEST_CASE("semistability verdict examples") {
  CHECK(is_semistable(curve(kFold3), {q("1/3"), q("1/3"), q("1/3")}).semistable);
  for (const char* a : {"0", "1/2", "1", "3/2", "2"})
    CHECK(is_semistable(curve(kCusp1), {q(a)}).semistable == (q(a) == 1));
  auto neg = is_semistable(curve(kSmooth3), {q("2"), q("-1/5"), q("1")});
  CHECK_FALSE(neg.semistable);
  CHECK_FALSE(neg.violations.empty());
  CHECK_THROWS_AS(is_semistable(curve(kSmooth3), {q("1")}), Error);
}

TEST_CASE("stability verdict examples") {
  CHECK(is_stable(curve(kSmooth3), {q("2"), q("2"), q("2")}).stable);
  Gen g(23);
  for (int k = 0; k < 20; ++k) CHECK_FALSE(is_stable(curve(kFold3), g.vec(3, 0, 2, 5)).stable);
  auto on_wall = is_stable(curve(kSmooth3), {q("1/2"), q("1/4"), q("1/4")});
  CHECK(on_wall.semistable);
  CHECK_FALSE(on_wall.stable);
}

TEST_CASE("finite reduced stabilizer") {
  CHECK_FALSE(has_finite_reduced_stabilizer(curve(kFold3)));
  CHECK(has_finite_reduced_stabilizer(curve(R"({"n":3,"core":{"kind":"fold","m":2},"core_marks":[[1,2],[3]]})")));
  CHECK_FALSE(has_finite_reduced_stabilizer(curve(kSmoothTail)));
  CHECK(has_finite_reduced_stabilizer(curve(kSmooth3)));
}

TEST_CASE("omega sets examples") {
  CHECK(omega_sets(curve(R"({"n":2,"core":{"kind":"fold","m":2},"core_marks":[[1],[2]]})")).omega0_rays.empty());
  CHECK(omega_sets(curve(R"({"n":2,"core":{"kind":"fold","m":1},"core_marks":[[1,2]]})")).omega0_rays ==
        std::vector<int>{1, 2});
  auto ngon = omega_sets(curve(R"({"n":2,"core":{"kind":"ngon","m":2},"core_marks":[[1],[2]]})"));
  CHECK(ngon.omega0_rays == std::vector<int>{1, 2});
  CHECK(ngon.omega1 == std::vector<int>{1, 2});
}

TEST_CASE("membership LP examples") {
  CHECK(membership_lp({q("1")}, {{1}, {}}, 1));
  CHECK(membership_lp({q("1/2"), q("1/2")}, {{1, 2}, {}}, 2));
  CHECK_FALSE(membership_lp({q("1/3"), q("1/3")}, {{1, 2}, {}}, 2));
  CHECK(membership_lp({q("2"), q("0"), q("0")}, {{1}, {1}}, 3));
  CHECK_FALSE(membership_lp({q("2"), q("1"), q("0")}, {{1}, {1}}, 3));
}

TEST_CASE("verdicts agree with the direct inequalities and the LP oracle (property)") {
  Gen g(29);
  for (int n = 1; n <= 3; ++n) {
    for (const Curve& c : enumerate_curves(n)) {
      const IndexSets s = stability_index_sets(c);
      const OmegaSets om = omega_sets(c);
      for (int k = 0; k < 40; ++k) {
        const RatVec chi = chi_near_faces(g, n);
        const StabilityVerdict v = is_stable(c, chi);
        CHECK(v.semistable == direct_semistable(s, chi));
        CHECK(v.semistable == membership_lp(chi, om, n));
        CHECK(v.semistable == semistability_polytope(c).contains(chi));
        if (v.stable) {
          CHECK(v.semistable);
          CHECK(v.finite_reduced_stabilizer);
        }
      }
    }
  }
}

TEST_CASE("finite stabilizer agrees with the index-set characterization (property)") {
  for (int n = 1; n <= 4; ++n) {
    for (const Curve& c : enumerate_curves(n)) {
      const IndexSets s = stability_index_sets(c);
      const bool covers = static_cast<int>(s.I.size() + s.J.size()) == n;
      CHECK(has_finite_reduced_stabilizer(c) == (covers && s.I0 != s.I));
    }
  }
}
