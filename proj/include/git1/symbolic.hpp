#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "git1/rational.hpp"

namespace git1 {

// Sparse multivariate polynomial over Q. Monomials are exponent vectors with
// trailing zeros trimmed, so std::vector's lexicographic order is lex order
// with x0 > x1 > ...; terms are stored leading term first.
class Poly {
 public:
  using Mono = std::vector<int>;
  using Terms = std::map<Mono, Rational, std::greater<Mono>>;

  Poly() = default;
  Poly(long c);  // NOLINT: implicit constant
  explicit Poly(const Rational& c);
  static Poly variable(int v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Terms& terms() const { return terms_; }
  const Mono& leading_mono() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }
  int max_variable() const;  // -1 for constants
  int degree_in(int v) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& q) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Quotient when g divides f exactly.
  static std::optional<Poly> divide_exact(const Poly& f, const Poly& g);
  // Monic (leading coefficient 1) greatest common divisor; gcd(0, 0) = 0.
  static Poly gcd(const Poly& f, const Poly& g);

  Rational eval(const RatVec& point) const;
  std::string str() const;

  void add_term(Mono m, const Rational& c);

 private:
  Terms terms_;
};

// Element of Q(x0, x1, ...) as num / prod atom^e. Atoms are monic
// polynomials interned in a process-wide table and kept pairwise coprime, so
// cancellation is trial division by atoms and never needs a gcd of the
// numerator. Equality and zero tests are exact.
class Sym {
 public:
  using Factors = std::vector<std::pair<int, int>>;  // (atom id, exponent), sorted by id

  Sym() = default;
  Sym(long c) : num_(c) {}  // NOLINT: implicit constant
  Sym(const Rational& c);   // NOLINT: implicit constant
  Sym(const Poly& num, const Poly& den);
  static Sym variable(int v);

  const Poly& num() const { return num_; }
  Poly den() const;
  bool is_zero() const { return num_.is_zero(); }

  Sym operator-() const;
  friend Sym operator+(const Sym& a, const Sym& b);
  friend Sym operator-(const Sym& a, const Sym& b);
  friend Sym operator*(const Sym& a, const Sym& b);
  friend Sym operator/(const Sym& a, const Sym& b);
  Sym& operator+=(const Sym& o) { return *this = *this + o; }
  Sym& operator-=(const Sym& o) { return *this = *this - o; }
  Sym& operator*=(const Sym& o) { return *this = *this * o; }
  Sym& operator/=(const Sym& o) { return *this = *this / o; }
  bool operator==(const Sym& o) const;

  Rational eval(const RatVec& point) const;
  std::string str() const;

 private:
  void reduce();

  Poly num_;
  Factors den_;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Sym& s) { return s.is_zero(); }
inline std::string scalar_str(const Rational& q) { return to_string(q); }
inline std::string scalar_str(const Sym& s) { return s.str(); }

}  // namespace git1
