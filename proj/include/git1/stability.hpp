#pragma once

#include <string>
#include <vector>

#include "git1/curve.hpp"
#include "git1/lp.hpp"
#include "git1/rational.hpp"

namespace git1 {

struct HPolytope {
  int n = 0;
  std::vector<lp::Constraint> constraints;
  std::vector<std::string> names;  // parallel to constraints

  bool contains(const RatVec& x) const;
};

// Basis vectors are identified by their mark label.
struct OmegaSets {
  std::vector<int> omega1;
  std::vector<int> omega0_rays;
};

struct StabilityVerdict {
  bool semistable = false;
  bool stable = false;
  bool finite_reduced_stabilizer = false;
  IndexSets index_sets;
  std::vector<std::string> violations;  // failed semistability constraints
  std::vector<std::string> strict_violations;  // reasons stability fails
  std::vector<std::string> tight;       // semistability constraints holding with equality
};

HPolytope semistability_polytope(const Curve& c);

StabilityVerdict is_semistable(const Curve& c, const RatVec& chi);
StabilityVerdict is_stable(const Curve& c, const RatVec& chi);

bool has_finite_reduced_stabilizer(const Curve& c);

OmegaSets omega_sets(const Curve& c);

// Is chi in Cone(omega0) + Conv(omega1)? Exact LP feasibility.
bool membership_lp(const RatVec& chi, const OmegaSets& omega, int n);

}  // namespace git1
