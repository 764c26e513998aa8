#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "git1/json_io.hpp"
#include "git1/rational.hpp"

namespace testing {

inline git1::Curve curve(const std::string& json, bool allow_unmarked = false) {
  return git1::curve_from_json(git1::parse_json(json), allow_unmarked);
}

inline git1::Rational q(const char* s) { return git1::parse_rational(s); }

// splitmix64: small, seedable, independent of the library's generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  // Uniform-ish in [lo, hi] with denominator at most max_den.
  git1::Rational rational(long lo, long hi, long max_den) {
    const long den = range(1, max_den);
    git1::Rational r(range(lo * den, hi * den), den);
    r.canonicalize();
    return r;
  }
  git1::Rational nonzero(long lo, long hi, long max_den) {
    for (;;) {
      git1::Rational r = rational(lo, hi, max_den);
      if (r != 0) return r;
    }
  }
  git1::RatVec vec(int n, long lo, long hi, long max_den) {
    git1::RatVec v;
    for (int i = 0; i < n; ++i) v.push_back(rational(lo, hi, max_den));
    return v;
  }

 private:
  std::uint64_t s_;
};

}  // namespace testing
