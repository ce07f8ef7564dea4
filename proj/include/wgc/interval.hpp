#pragma once

#include "wgc/rational.hpp"

#include <mpfr.h>

#include <string>

namespace wgc {

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed interval [lo, hi] with outward-rounded MPFR endpoints. All
// operations produce enclosures of the exact result.
class Interval {
 public:
  explicit Interval(long prec = 128);
  Interval(const Interval& o);
  Interval& operator=(const Interval& o);
  ~Interval();

  static Interval of_rational(const Rational& r, long prec);
  static Interval of_long(long v, long prec);
  // sqrt(v) for a nonnegative integer v.
  static Interval sqrt_of_long(long v, long prec);

  long precision() const { return prec_; }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // o must not contain 0
  Interval operator-() const;
  Interval pow_int(long e) const;  // e < 0 requires 0 outside the interval

  bool contains_zero() const;
  double lo() const;
  double hi() const;
  double mid() const;
  double width() const;

  // Certain comparisons against a rational bound; false means "not provably".
  bool abs_certainly_below(const Rational& eps) const;
  bool abs_certainly_above(const Rational& eps) const;

  Interval minus_rational(const Rational& r) const;
  Interval over_rational(const Rational& r) const;  // r != 0
  Interval times_rational(const Rational& r) const;

  std::string str() const;

 private:
  long prec_;
  mpfr_t lo_, hi_;
};

}  // namespace wgc
