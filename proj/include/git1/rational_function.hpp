#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "git1/errors.hpp"
#include "git1/symbolic.hpp"

namespace git1 {

// Univariate polynomial in a component coordinate w over a field K
// (Rational or Sym). Coefficients are stored lowest degree first, trimmed.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  UPoly(const K& c) {  // NOLINT: implicit constant
    if (!git1::is_zero(c)) c_.push_back(c);
  }
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly w() { return UPoly(std::vector<K>{K(0), K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const K& coeff(int i) const { return c_[i]; }
  const K& leading() const { return c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  UPoly scaled(const K& k) const {
    UPoly r = *this;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  K eval(const K& x) const {
    K s(0);
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
  }

  UPoly derivative() const {
    std::vector<K> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * K(static_cast<long>(i)));
    return UPoly(std::move(r));
  }

  // (q, r) with a = q*b + r.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    std::vector<K> q(std::max(0, a.degree() - b.degree() + 1), K(0));
    UPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const int shift = r.degree() - b.degree();
      K t = r.leading() / b.leading();
      q[shift] = t;
      std::vector<K> sub(shift + b.c_.size(), K(0));
      for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = b.c_[i] * t;
      r = r - UPoly(std::move(sub));
    }
    return {UPoly(std::move(q)), r};
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(K(1) / a.leading());
  }

  // Divides by (w - x) assuming x is a root.
  UPoly deflate(const K& x) const {
    std::vector<K> q(c_.size() - 1, K(0));
    K carry(0);
    for (std::size_t i = c_.size(); i-- > 1;) {
      carry = c_[i] + carry * x;
      q[i - 1] = carry;
    }
    return UPoly(std::move(q));
  }

 private:
  void trim() {
    while (!c_.empty() && git1::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// Rational function of w over K whose denominator splits into linear
// factors: num / prod (w - r)^e, kept in lowest terms. Cancellation only
// needs evaluation and synthetic division, so no polynomial gcd over K.
template <class K>
class RF {
 public:
  using Pole = std::pair<K, int>;

  RF() = default;
  RF(const K& c) : num_(c) {}      // NOLINT: implicit constant
  RF(long c) : RF(K(c)) {}         // NOLINT: implicit constant
  // Throws Unsupported when den has degree above one.
  RF(UPoly<K> num, const UPoly<K>& den) : num_(std::move(num)) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (den.degree() > 1) throw Error(ErrorKind::Unsupported, "denominator must be linear");
    num_ = num_.scaled(K(1) / den.leading());
    if (den.degree() == 1) poles_.push_back({-den.coeff(0) / den.coeff(1), 1});
    reduce();
  }
  static RF w() { return RF(UPoly<K>::w(), UPoly<K>(K(1))); }

  const UPoly<K>& num() const { return num_; }
  const std::vector<Pole>& poles() const { return poles_; }
  UPoly<K> den() const { return expand(poles_); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return poles_.empty() && num_.degree() <= 0; }
  K constant_value() const { return num_.is_zero() ? K(0) : num_.coeff(0); }

  RF operator-() const {
    RF r = *this;
    r.num_ = -num_;
    return r;
  }
  friend RF operator+(const RF& a, const RF& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RF r;
    r.poles_ = a.poles_;
    for (const auto& [x, e] : b.poles_) {
      int* slot = find(r.poles_, x);
      if (!slot) {
        r.poles_.push_back({x, e});
      } else if (*slot < e) {
        *slot = e;
      }
    }
    r.num_ = a.num_ * expand(missing(r.poles_, a.poles_)) + b.num_ * expand(missing(r.poles_, b.poles_));
    r.reduce();
    return r;
  }
  friend RF operator-(const RF& a, const RF& b) { return a + (-b); }
  friend RF operator*(const RF& a, const RF& b) {
    if (a.is_zero() || b.is_zero()) return RF();
    RF r;
    r.num_ = a.num_ * b.num_;
    r.poles_ = a.poles_;
    for (const auto& [x, e] : b.poles_) {
      int* slot = find(r.poles_, x);
      if (slot) {
        *slot += e;
      } else {
        r.poles_.push_back({x, e});
      }
    }
    r.reduce();
    return r;
  }
  // Throws Unsupported when b has more than one zero.
  friend RF operator/(const RF& a, const RF& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
    return a * RF(expand(b.poles_), b.num_);
  }
  RF& operator+=(const RF& o) { return *this = *this + o; }
  RF& operator-=(const RF& o) { return *this = *this - o; }
  RF& operator*=(const RF& o) { return *this = *this * o; }
  bool operator==(const RF& o) const {
    if (!(num_ == o.num_) || poles_.size() != o.poles_.size()) return false;
    for (const auto& [x, e] : poles_) {
      const int* slot = find(o.poles_, x);
      if (!slot || *slot != e) return false;
    }
    return true;
  }

  RF pow(int e) const {
    RF r(K(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  int pole_order(const K& x) const {
    const int* slot = find(poles_, x);
    return slot ? *slot : 0;
  }
  bool regular_at(const K& x) const { return pole_order(x) == 0; }

  K eval(const K& x) const {
    if (!regular_at(x)) throw Error(ErrorKind::DivisionByZero, "pole at evaluation point");
    return num_.eval(x) / expand(poles_).eval(x);
  }

  // Coefficient of 1/(w - x) in the Laurent expansion at x (simple poles).
  K residue(const K& x) const {
    const int order = pole_order(x);
    if (order == 0) return K(0);
    if (order > 1) throw Error(ErrorKind::Unsupported, "pole of order above one");
    std::vector<Pole> rest;
    for (const auto& p : poles_)
      if (!(p.first == x)) rest.push_back(p);
    return num_.eval(x) / expand(rest).eval(x);
  }

  RF derivative() const {
    // (N/D)' = (N' R - N sum_k e_k R/(w - r_k)) / (D R), R = prod_k (w - r_k).
    std::vector<Pole> radical;
    for (const auto& [x, e] : poles_) radical.push_back({x, 1});
    UPoly<K> sum;
    for (std::size_t k = 0; k < poles_.size(); ++k) {
      std::vector<Pole> others;
      for (std::size_t l = 0; l < poles_.size(); ++l)
        if (l != k) others.push_back(radical[l]);
      sum = sum + expand(others).scaled(K(static_cast<long>(poles_[k].second)));
    }
    RF r;
    r.num_ = num_.derivative() * expand(radical) - num_ * sum;
    r.poles_ = poles_;
    for (auto& p : r.poles_) ++p.second;
    r.reduce();
    return r;
  }

  std::string str() const {
    auto ps = [](const UPoly<K>& p) {
      if (p.is_zero()) return std::string("0");
      std::string s;
      for (int i = p.degree(); i >= 0; --i) {
        if (git1::is_zero(p.coeff(i))) continue;
        if (!s.empty()) s += " + ";
        s += "(" + scalar_str(p.coeff(i)) + ")";
        if (i) s += i == 1 ? "*w" : "*w^" + std::to_string(i);
      }
      return s;
    };
    if (poles_.empty()) return ps(num_);
    return "[" + ps(num_) + "]/[" + ps(den()) + "]";
  }

 private:
  static UPoly<K> expand(const std::vector<Pole>& poles) {
    UPoly<K> r(K(1));
    for (const auto& [x, e] : poles)
      for (int i = 0; i < e; ++i) r = r * UPoly<K>(std::vector<K>{-x, K(1)});
    return r;
  }
  // Factors of `all` not present in `part`.
  static std::vector<Pole> missing(const std::vector<Pole>& all, const std::vector<Pole>& part) {
    std::vector<Pole> out;
    for (const auto& [x, e] : all) {
      const int* slot = find(part, x);
      const int have = slot ? *slot : 0;
      if (e > have) out.push_back({x, e - have});
    }
    return out;
  }
  static int* find(std::vector<Pole>& poles, const K& x) {
    for (auto& p : poles)
      if (p.first == x) return &p.second;
    return nullptr;
  }
  static const int* find(const std::vector<Pole>& poles, const K& x) {
    for (const auto& p : poles)
      if (p.first == x) return &p.second;
    return nullptr;
  }

  void reduce() {
    if (num_.is_zero()) {
      poles_.clear();
      return;
    }
    std::vector<Pole> kept;
    for (auto [x, e] : poles_) {
      while (e > 0 && git1::is_zero(num_.eval(x))) {
        num_ = num_.deflate(x);
        --e;
      }
      if (e > 0) kept.push_back({x, e});
    }
    poles_ = std::move(kept);
  }

  UPoly<K> num_;
  std::vector<Pole> poles_;
};

}  // namespace git1
