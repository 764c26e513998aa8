#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "git1/curve.hpp"
#include "git1/rational.hpp"
#include "git1/rational_function.hpp"
#include "git1/symbolic.hpp"

namespace git1 {

// Coordinates on a degenerate core. Fold: each branch has coordinate w with
// the singular point at w = 0. Ngon: component k meets component k+1 at
// w = +1 on k and at w = -1 on k+1. A single-component tail has coordinate
// z with its attaching point at z = 0.
struct CoordinatizedCurve {
  Curve base;
  std::map<int, Rational> positions;  // mark -> coordinate on its component
  std::map<int, Rational> scalings;   // mark -> tangent scaling
  std::vector<Rational> anchor_positions;  // per tail: coordinate of the attaching point on the core
};

// Fold or Ngon core, every tail a single component attached at a smooth point.
bool coordinate_realizable(const Curve& c);

// Throws Unsupported, PositionClash or ZeroScaling.
void validate_coordinatized(const CoordinatizedCurve& cc);

CoordinatizedCurve random_coordinatized(const Curve& c, std::mt19937_64& rng);

// Marks 1..n-t spread round-robin over the m core components, marks
// n-t+1..n on one tail attached to component 0.
Curve standard_core_curve(CoreKind kind, int m, int n, int tail_marks = 0);

template <class K>
using Fn = std::vector<RF<K>>;  // restriction to each component: core first, then tails

// Parameters over a field K: exact rationals or indeterminates.
template <class K>
struct Params {
  Curve base;
  std::vector<K> position;  // indexed by mark, entry 0 unused
  std::vector<K> scaling;
  std::vector<K> anchor;    // per tail
};

template <class K>
struct Table {
  int n = 0;
  int core_components = 0;
  int total_components = 0;
  CoreKind core = CoreKind::Fold;
  std::vector<int> component;  // per mark
  std::vector<char> chart;     // per mark: 1 when the mark lies on the core
  std::vector<K> x;
  std::vector<std::vector<K>> a, b, e;        // [i][j]
  std::vector<K> pi, s;                       // [i]
  std::vector<std::vector<std::vector<K>>> c;  // c[i][j][j'] = h_ij(p_j')
  std::vector<Fn<K>> f, h;                    // [i]
  std::vector<std::vector<Fn<K>>> hij;        // [i][j]
};

template <class K>
struct Globals {
  std::vector<std::vector<K>> B, E;            // [i][j]
  std::vector<K> Pi, S;                        // [i]
  std::vector<std::vector<std::vector<K>>> C;  // C[i][j][j'] = C_{jj'}(i)
};

struct IdentityCheck {
  std::string tag;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string witness;  // first failing instance
  bool holds() const { return failures == 0; }
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_hold() const;
  std::vector<std::pair<std::string, bool>> status() const;
  IdentityCheck& entry(const std::string& tag);
  void merge(const IdentityReport& other);
};

Params<Rational> numeric_params(const CoordinatizedCurve& cc);

// Positions, scalings and anchors become independent indeterminates.
Params<Sym> symbolic_params(const Curve& base);

// Builds the chart functions and evaluates the chart quantities.
template <class K>
Table<K> realize(const Params<K>& p);

// Gluing at the singular point or nodes, tail attachment, pole normalization.
template <class K>
IdentityReport realization_checks(const Params<K>& p, const Table<K>& t);

// Global sections from every valid chart; agreement is recorded in `report` when given.
template <class K>
Globals<K> global_sections(const Table<K>& t, IdentityReport* report = nullptr);

template <class K>
IdentityReport verify_identities(const Table<K>& t);

// Scales every quantity by the product of lambda_i^(weight_i). Throws ZeroLambda.
template <class K>
Table<K> weight_act(const Table<K>& t, const std::vector<K>& lambda);

// Adds 1 to the first c value, falling back to the first b value and then to
// s_i when a single mark leaves no pairs. Used as a negative control for
// verify_identities.
template <class K>
Table<K> mutate_one_value(const Table<K>& t);

struct VanishingProfile {
  std::vector<int> omega1;
  std::vector<int> omega0;
};

VanishingProfile vanishing_profile(const Table<Rational>& t);

// Throws ChartInvalid when mark i lies on a tail.
void require_chart(const Table<Rational>& t, int i);

struct IdentityRun {
  std::string core;
  int m = 0;
  int n = 0;
  int tail_marks = 0;
  int draws = 0;
  bool symbolic = false;
  IdentityReport report;
  bool constants_ok = true;  // chart constants (pi, s) as expected for the core type
  std::string constants_note;
};

// Random rational draws on standard_core_curve, plus a symbolic pass when asked.
IdentityRun run_identity_suite(CoreKind kind, int m, int n, int tail_marks, std::uint64_t seed, int draws,
                               bool symbolic);

}  // namespace git1
