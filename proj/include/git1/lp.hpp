#pragma once

#include <vector>

#include "git1/rational.hpp"

namespace git1::lp {

enum class Relation { LE, GE, EQ };

struct Constraint {
  RatVec coeffs;
  Relation rel = Relation::LE;
  Rational rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;
  RatVec x;
};

// Exact two-phase simplex with Bland's rule. Maximizes objective . x.
// With free_vars the variables are unrestricted in sign, otherwise x >= 0.
Result maximize(const RatVec& objective, const std::vector<Constraint>& cons, bool free_vars);

bool feasible(std::size_t nvars, const std::vector<Constraint>& cons, bool free_vars);

}  // namespace git1::lp
