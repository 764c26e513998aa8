#include <algorithm>
#include <set>

#include "doctest.h"
#include "git1/chambers.hpp"
#include "git1/smyth.hpp"
#include "git1/stability.hpp"
#include "support.hpp"

using namespace git1;
using testing::curve;
using testing::Gen;
using testing::q;

namespace {

// Sign vectors seen on an offset rational grid, computed from the wall equations directly.
std::set<std::string> grid_sign_vectors(int n, const Rational& lo, const Rational& hi, int steps) {
  const auto walls = wall_arrangement(n);
  std::set<std::string> out;
  std::vector<int> idx(n, 0);
  const Rational step = (hi - lo) / steps, offset = Rational(1, 997);
  for (;;) {
    RatVec x(n);
    for (int k = 0; k < n; ++k) x[k] = lo + step * idx[k] + offset * (k + 1);
    std::string s;
    bool on_wall = false;
    for (const Wall& w : walls) {
      Rational v;
      if (w.kind == Wall::Kind::Axis) {
        v = x[w.axis - 1];
      } else {
        v = -1;
        for (int i : w.subset) v += x[i - 1];
      }
      if (v == 0) on_wall = true;
      s += v > 0 ? '+' : '-';
    }
    if (!on_wall) out.insert(s);
    int k = 0;
    while (k < n && ++idx[k] == steps) idx[k++] = 0;
    if (k == n) break;
  }
  return out;
}

std::set<std::string> sign_strings(const std::vector<Chamber>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(c.sign_string());
  return out;
}

}  // namespace

TEST_CASE("wall counts") {
  for (int n = 1; n <= 4; ++n) CHECK(wall_arrangement(n).size() == static_cast<std::size_t>(n + (1 << n) - 1));
  std::vector<std::string> labels;
  for (const auto& w : wall_arrangement(2)) labels.push_back(w.label());
  CHECK(labels == std::vector<std::string>{"a1=0", "a2=0", "a1=1", "a2=1", "a1+a2=1"});
}

TEST_CASE("chamber counts match a grid sign-vector oracle") {
  CHECK(enumerate_chambers(1).size() == 3);
  CHECK(enumerate_chambers(2).size() == 12);
  for (int n = 1; n <= 3; ++n) {
    const auto chambers = enumerate_chambers(n);
    CHECK(sign_strings(chambers) == grid_sign_vectors(n, Rational(-1), Rational(n + 1), n == 3 ? 40 : 60));
  }
}

TEST_CASE("witnesses lie strictly inside their chambers") {
  for (int n = 1; n <= 3; ++n) {
    const auto walls = wall_arrangement(n);
    const Box box = Box::standard(n);
    for (const auto& ch : enumerate_chambers(n)) CHECK(strictly_inside(ch, walls, box, ch.witness));
  }
}

TEST_CASE("a box that misses a region drops its chamber") {
  Box clipped{{q("-1"), q("-1")}, {q("1/2"), q("3")}};
  const auto chambers = enumerate_chambers(2, clipped);
  CHECK(chambers.size() < 12);
  for (const auto& ch : chambers) CHECK(ch.witness[0] < 1);
}

TEST_CASE("chamber classification examples") {
  const AtlasReport r1 = atlas_report(1, 1);
  REQUIRE(r1.chambers.size() == 3);
  for (std::size_t c = 0; c < r1.chambers.size(); ++c) {
    const Rational a = r1.chambers[c].witness[0];
    std::set<std::string> stable;
    for (std::size_t k = 0; k < r1.curves.size(); ++k)
      if (r1.stable[c][k]) stable.insert(r1.classes[k]);
    if (a > 1) {
      CHECK(stable == std::set<std::string>{canonical_form(curve(R"({"n":1,"core":{"kind":"smooth"},"core_marks":[[1]]})")),
                                            canonical_form(curve(R"({"n":1,"core":{"kind":"ngon","m":1},"core_marks":[[1]]})"))});
    } else {
      CHECK(stable.empty());
    }
  }

  const AtlasReport r2 = atlas_report(2, 1);
  const std::set<std::string> expected = {
      canonical_form(curve(R"({"n":2,"core":{"kind":"smooth"},"core_marks":[[1,2]]})")),
      canonical_form(curve(R"({"n":2,"core":{"kind":"ngon","m":1},"core_marks":[[1,2]]})")),
      canonical_form(curve(R"({"n":2,"core":{"kind":"ngon","m":2},"core_marks":[[1],[2]]})")),
      canonical_form(curve(R"({"n":2,"core":{"kind":"fold","m":1},"core_marks":[[1,2]]})")),
  };
  bool found = false;
  for (std::size_t c = 0; c < r2.chambers.size(); ++c) {
    if (r2.chambers[c].sign_string() != "+++++") continue;
    found = true;
    std::set<std::string> stable;
    for (std::size_t k = 0; k < r2.curves.size(); ++k) {
      if (r2.stable[c][k]) stable.insert(r2.classes[k]);
      CHECK(r2.stable[c][k] == is_zu_stable(r2.curves[k]));
    }
    CHECK(stable == expected);
  }
  CHECK(found);
}

TEST_CASE("wall-crossing flips") {
  const AtlasReport r1 = atlas_report(1, 1);
  const std::string cusp = canonical_form(curve(R"({"n":1,"core":{"kind":"fold","m":1},"core_marks":[[1]]})"));
  for (const auto& f : r1.flips) {
    if (r1.walls[f.wall].label() != "a1=1") continue;
    std::set<std::string> entered;
    for (int k : f.entered) entered.insert(r1.classes[k]);
    CHECK(entered.size() == 2);
    CHECK(entered.count(cusp) == 0);
    CHECK(f.left.empty());
  }
  // The cusp is semistable only on the wall itself and never stable.
  const Curve c = curve(R"({"n":1,"core":{"kind":"fold","m":1},"core_marks":[[1]]})");
  CHECK(is_stable(c, {q("1")}).semistable);
  CHECK_FALSE(is_stable(c, {q("1")}).stable);
  CHECK_FALSE(is_semistable(c, {q("99/100")}).semistable);
  CHECK_FALSE(is_semistable(c, {q("101/100")}).semistable);

  const AtlasReport r2 = atlas_report(2, 1);
  int crossings = 0;
  for (const auto& f : r2.flips) {
    if (r2.walls[f.wall].label() != "a1+a2=1") continue;
    ++crossings;
    CHECK(f.left.empty());
    for (std::size_t k = 0; k < r2.curves.size(); ++k) CHECK_FALSE(r2.stable[f.below][k]);
  }
  CHECK(crossings > 0);
}

TEST_CASE("classification is constant on random interior points (property)") {
  Gen g(41);
  std::mt19937_64 rng(41);
  for (int n = 1; n <= 3; ++n) {
    const auto walls = wall_arrangement(n);
    const Box box = Box::standard(n);
    const auto curves = enumerate_curves(n);
    for (const auto& ch : enumerate_chambers(n)) {
      const auto base = classify_chamber(ch, walls, box, curves, 0, rng);
      for (const RatVec& x : sample_interior(ch, walls, box, 4, rng)) {
        REQUIRE(strictly_inside(ch, walls, box, x));
        for (std::size_t k = 0; k < curves.size(); ++k) {
          const auto v = is_stable(curves[k], x);
          CHECK(v.stable == base[k]);
          CHECK(v.stable == v.semistable);
        }
      }
    }
  }
}
