#pragma once

#include <optional>
#include <string>
#include <vector>

#include "git1/curve.hpp"
#include "git1/rational.hpp"

namespace git1 {

// Curves may carry unmarked components; tails must be nodal trees attached at
// smooth core points. Throws InvalidForMStability otherwise.
bool is_m_stable(const Curve& c, int m);

// Every rational component has at least 3 special points on its normalization.
bool is_zu_stable(const Curve& c);

// Contracts each connected unmarked subcurve to a point. Identity on fully
// marked curves. The result validates as a full curve.
Curve contract_unmarked(const Curve& c);

enum class InclusionMode { NMinus1, NMinus2, NMinus3 };

std::optional<InclusionMode> parse_inclusion_mode(const std::string& s);
std::string inclusion_mode_name(InclusionMode mode);
int inclusion_m(InclusionMode mode, int n);

// Throws HypothesisViolated when chi is outside the mode's region.
void check_inclusion_hypothesis(InclusionMode mode, const RatVec& chi, int n);

struct InclusionViolation {
  std::string source;  // canonical form of the m-stable curve
  std::string image;   // canonical form of its contraction
  std::vector<std::string> failed;
};

struct InclusionReport {
  InclusionMode mode = InclusionMode::NMinus1;
  int n = 0;
  int m = 0;
  RatVec chi;
  std::size_t classes_checked = 0;
  std::vector<InclusionViolation> violations;
};

// Enumeration used for m-stable checks: nodal tails at smooth points, at most
// `max_unmarked` unmarked components.
std::vector<Curve> enumerate_m_stable(int n, int m, int max_unmarked = 2, std::uint64_t budget = 0);

InclusionReport check_inclusion(InclusionMode mode, const RatVec& chi, int n, int max_unmarked = 2);

struct ChiWindow {
  std::optional<Rational> lower;  // nullopt: unbounded
  std::optional<Rational> upper;
  bool empty() const { return lower && upper && *lower > *upper; }
};

// {a : a*(1,...,1) semistable for the full curve}.
ChiWindow uniform_window_of(const Curve& full);

// Intersection over contractions of the given curves; (-inf, inf) for no curves.
ChiWindow uniform_chi_window(const std::vector<Curve>& curves, int m);

// Whether some chi (not necessarily uniform) is semistable for every contraction.
bool common_chi_exists(const std::vector<Curve>& curves);

}  // namespace git1
