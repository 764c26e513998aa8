#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace git1 {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// Comma separated list, e.g. "1/2,1/2".
RatVec parse_rational_list(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);

std::string to_string(const RatVec& v);

int sign(const Rational& q);

}  // namespace git1
