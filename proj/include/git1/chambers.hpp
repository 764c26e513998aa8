#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "git1/curve.hpp"
#include "git1/rational.hpp"

namespace git1 {

struct Wall {
  enum class Kind { Axis, Level };
  Kind kind = Kind::Axis;
  int axis = 0;               // 1-based, for Axis
  std::vector<int> subset;    // 1-based labels, for Level

  // Signed distance numerator: a_i for Axis, sum_S a_i - 1 for Level.
  Rational value(const RatVec& x) const;
  std::string label() const;
};

// n axis walls, then the 2^n - 1 level walls ordered by subset size, then lexicographically.
std::vector<Wall> wall_arrangement(int n);

struct Box {
  RatVec lo, hi;
  static Box standard(int n);  // [-1, n+1]^n
};

struct Chamber {
  std::vector<int> signs;  // +1 / -1 per wall, in wall_arrangement order
  RatVec witness;          // strictly inside, exact
  Rational slack;          // witness clearance used for sampling
  std::string sign_string() const;
};

std::vector<Chamber> enumerate_chambers(int n, const Box& box, std::uint64_t budget = 0);
std::vector<Chamber> enumerate_chambers(int n);

// Strictly interior random points; deterministic in the generator state.
std::vector<RatVec> sample_interior(const Chamber& ch, const std::vector<Wall>& walls, const Box& box, int count,
                                    std::mt19937_64& rng);

bool strictly_inside(const Chamber& ch, const std::vector<Wall>& walls, const Box& box, const RatVec& x);

// Stable/unstable verdict per curve (off the walls semistable == stable),
// re-checked at `extra_points` interior points. Throws ConstancyViolation.
std::vector<bool> classify_chamber(const Chamber& ch, const std::vector<Wall>& walls, const Box& box,
                                   const std::vector<Curve>& curves, int extra_points, std::mt19937_64& rng);

struct WallFlip {
  int wall = 0;
  int below = 0;  // chamber index on the negative side
  int above = 0;  // chamber index on the positive side
  std::vector<int> entered;  // curve indices stable above but not below
  std::vector<int> left;     // curve indices stable below but not above
};

struct AtlasReport {
  int n = 0;
  std::vector<Wall> walls;
  std::vector<Chamber> chambers;
  std::vector<Curve> curves;
  std::vector<std::string> classes;       // canonical forms, parallel to curves
  std::vector<std::vector<bool>> stable;  // [chamber][curve]
  std::vector<WallFlip> flips;
};

AtlasReport atlas_report(int n, std::uint64_t seed = 0, int extra_points = 5);

std::string atlas_tsv(const AtlasReport& r);
std::string chambers_tsv(const std::vector<Wall>& walls, const std::vector<Chamber>& chambers);

}  // namespace git1
