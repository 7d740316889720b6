#pragma once

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "ordlat/rational.hpp"

namespace ordlat {

// Closed interval [lo, hi] with outward-rounded MPFR endpoints.
class Interval {
 public:
  static constexpr mpfr_prec_t kPrecision = 512;

  Interval();
  explicit Interval(const Rational& x);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }
  mpfr_t& lo() { return lo_; }
  mpfr_t& hi() { return hi_; }

  bool positive() const;
  double midpoint() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  // Requires a positive interval.
  Interval pow(long num, unsigned long den) const;

 private:
  mpfr_t lo_, hi_;
};

enum class Cmp { Less, Equal, Greater, Unknown };

// A positive-or-signed real that is exact when possible: base^(1/root) with rational base,
// otherwise only an enclosing interval.
class Real {
 public:
  Real() : Real(Rational(0)) {}
  Real(const Rational& x);  // NOLINT(google-explicit-constructor)
  Real(long x) : Real(Rational(x)) {}  // NOLINT(google-explicit-constructor)
  static Real root(const Rational& base, unsigned long n);
  static Real from_interval(const Interval& iv);

  bool is_exact() const { return exact_.has_value(); }
  bool is_rational() const { return exact_ && root_ == 1; }
  const Rational& rational() const;
  const Interval& interval() const { return iv_; }
  // (base, root) with value base^(1/root), when known exactly.
  std::optional<std::pair<Rational, unsigned long>> exact_form() const;
  double approx() const { return iv_.midpoint(); }

  // x^(p/q) for x >= 0.
  Real pow(long p, unsigned long q = 1) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  std::string to_string() const;

 private:
  std::optional<Rational> exact_;
  unsigned long root_ = 1;
  Interval iv_;
  void normalize();
  void refresh_interval();
};

Cmp compare(const Real& a, const Real& b);
inline bool certainly_le(const Real& a, const Real& b) {
  Cmp c = compare(a, b);
  return c == Cmp::Less || c == Cmp::Equal;
}
Real max(const Real& a, const Real& b);

}  // namespace ordlat
