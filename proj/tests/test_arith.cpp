#include <functional>

#include "doctest.h"
#include "git1/errors.hpp"
#include "git1/lp.hpp"
#include "git1/rational_function.hpp"
#include "git1/symbolic.hpp"
#include "support.hpp"

using namespace git1;
using testing::Gen;
using testing::q;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational_list("1/2, 1/3,2") == RatVec{Rational(1, 2), Rational(1, 3), Rational(2)});
  for (const char* bad : {"", "1/0", "abc", "1.5", "1/2/3"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

namespace {

UPoly<Rational> random_poly(Gen& g, int max_deg) {
  std::vector<Rational> c;
  for (int i = 0, d = static_cast<int>(g.range(0, max_deg)); i <= d; ++i) c.push_back(g.rational(-5, 5, 4));
  return UPoly<Rational>(c);
}

// Product of linear factors: the only denominators the function-field code builds.
RF<Rational> random_rf(Gen& g) {
  RF<Rational> r(random_poly(g, 3), UPoly<Rational>(Rational(1)));
  for (int k = 0, poles = static_cast<int>(g.range(0, 2)); k < poles; ++k) {
    const Rational root(g.range(-3, 3));
    r = r / RF<Rational>(UPoly<Rational>(std::vector<Rational>{-root, Rational(1)}), UPoly<Rational>(Rational(1)));
  }
  return r;
}

}  // namespace

TEST_CASE("rational functions agree with pointwise evaluation (property)") {
  Gen g(3);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    RF<Rational> a = random_rf(g), b = random_rf(g);
    const Rational t = g.rational(-9, 9, 7) + Rational(1, 101);  // avoid the integer poles
    const Rational at = a.num().eval(t) / a.den().eval(t), bt = b.num().eval(t) / b.den().eval(t);
    CHECK(a.eval(t) == at);
    CHECK((a + b).eval(t) == at + bt);
    CHECK((a - b).eval(t) == at - bt);
    CHECK((a * b).eval(t) == at * bt);
    if (!b.is_zero() && b.num().degree() <= 1 && bt != 0) {
      CHECK((a / b).eval(t) == at / bt);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("rational function residues, pole orders and derivatives") {
  using R = RF<Rational>;
  using P = UPoly<Rational>;
  const R inv_w = R(P(Rational(1)), P::w());  // 1/w
  const R f = R(P(std::vector<Rational>{Rational(3), Rational(2)}), P::w()) * inv_w;  // (2w+3)/w^2
  CHECK(f.pole_order(Rational(0)) == 2);
  CHECK(f.regular_at(Rational(1)));
  CHECK(inv_w.residue(Rational(0)) == 1);
  // d/dw (2w+3)/w^2 = -2/w^2 - 6/w^3, checked pointwise.
  for (int k = 1; k <= 5; ++k) {
    Rational t(k, 3);
    t.canonicalize();
    CHECK(f.derivative().eval(t) == Rational(-2) / (t * t) - Rational(6) / (t * t * t));
  }
  CHECK_THROWS_AS(R(P(Rational(1)), P()), Error);
  CHECK_THROWS_AS(R(P(Rational(1)), P::w() * P::w()), Error);
}

TEST_CASE("symbolic fractions agree with evaluation at random points (property)") {
  Gen g(5);
  const int vars = 3;
  auto random_sym = [&](Gen& gen) {
    Sym s(Rational(gen.range(-3, 3)));
    for (int k = 0; k < 3; ++k) {
      Sym term = Sym::variable(static_cast<int>(gen.range(0, vars - 1))) + Sym(Rational(gen.range(-2, 2)));
      switch (gen.range(0, 2)) {
        case 0: s = s + term; break;
        case 1: s = s * term; break;
        default: s = s / (term + Sym::variable(static_cast<int>(gen.range(0, vars - 1)))); break;
      }
    }
    return s;
  };
  for (int trial = 0; trial < 150; ++trial) {
    Sym a = random_sym(g), b = random_sym(g);
    RatVec pt;
    for (int v = 0; v < vars; ++v) pt.push_back(g.rational(-7, 7, 5) + Rational(1, 37 + v));
    const Rational da = a.den().eval(pt), db = b.den().eval(pt);
    if (da == 0 || db == 0) continue;
    const Rational av = a.eval(pt), bv = b.eval(pt);
    CHECK(av == a.num().eval(pt) / da);
    CHECK((a + b).eval(pt) == av + bv);
    CHECK((a - b).eval(pt) == av - bv);
    CHECK((a * b).eval(pt) == av * bv);
    CHECK((a - a).is_zero());
    if (!b.is_zero() && bv != 0) CHECK(((a / b) * b) == a);
  }
}

TEST_CASE("polynomial gcd divides both inputs") {
  const Poly x = Poly::variable(0), y = Poly::variable(1);
  const Poly common = x * y + Poly(1);
  const Poly f = common * (x - y), h = common * (x + Poly(2));
  const Poly d = Poly::gcd(f, h);
  CHECK(Poly::divide_exact(f, d).has_value());
  CHECK(Poly::divide_exact(h, d).has_value());
  CHECK(Poly::divide_exact(d, common).has_value());
  CHECK(Poly::gcd(x, y).is_constant());
}

namespace {

// Brute-force LP oracle for two variables: optimum over pairwise intersections
// of constraint boundaries (the feasible sets used here are bounded).
std::optional<Rational> vertex_max(const RatVec& obj, const std::vector<lp::Constraint>& cons) {
  auto feasible_pt = [&](const RatVec& x) {
    for (const auto& c : cons) {
      const Rational v = c.coeffs[0] * x[0] + c.coeffs[1] * x[1];
      if ((c.rel == lp::Relation::LE && v > c.rhs) || (c.rel == lp::Relation::GE && v < c.rhs) ||
          (c.rel == lp::Relation::EQ && v != c.rhs))
        return false;
    }
    return true;
  };
  std::optional<Rational> best;
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto &a = cons[i].coeffs, &b = cons[j].coeffs;
      const Rational det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      RatVec x = {(cons[i].rhs * b[1] - a[1] * cons[j].rhs) / det, (a[0] * cons[j].rhs - cons[i].rhs * b[0]) / det};
      if (!feasible_pt(x)) continue;
      const Rational v = obj[0] * x[0] + obj[1] * x[1];
      if (!best || v > *best) best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("simplex matches vertex enumeration on random bounded 2D programs (property)") {
  Gen g(17);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<lp::Constraint> cons = {
        {{Rational(1), Rational(0)}, lp::Relation::LE, Rational(g.range(1, 6))},
        {{Rational(1), Rational(0)}, lp::Relation::GE, Rational(g.range(-6, 0))},
        {{Rational(0), Rational(1)}, lp::Relation::LE, Rational(g.range(1, 6))},
        {{Rational(0), Rational(1)}, lp::Relation::GE, Rational(g.range(-6, 0))},
    };
    for (int k = 0, extra = static_cast<int>(g.range(0, 3)); k < extra; ++k) {
      const auto rel = static_cast<lp::Relation>(g.range(0, 2));
      cons.push_back({{g.rational(-3, 3, 3), g.rational(-3, 3, 3)}, rel, g.rational(-4, 4, 3)});
    }
    const RatVec obj = {g.rational(-3, 3, 4), g.rational(-3, 3, 4)};
    const auto oracle = vertex_max(obj, cons);
    const lp::Result r = lp::maximize(obj, cons, true);
    CHECK(lp::feasible(2, cons, true) == oracle.has_value());
    if (!oracle) {
      CHECK(r.status == lp::Status::Infeasible);
      continue;
    }
    ++feasible;
    REQUIRE(r.status == lp::Status::Optimal);
    CHECK(r.value == *oracle);
  }
  CHECK(feasible > 100);
}

TEST_CASE("simplex reports unbounded programs") {
  std::vector<lp::Constraint> cons = {{{Rational(1), Rational(-1)}, lp::Relation::LE, Rational(0)}};
  CHECK(lp::maximize({Rational(1), Rational(1)}, cons, true).status == lp::Status::Unbounded);
}
