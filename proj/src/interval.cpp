#include "wgc/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgc {

Interval::Interval(long prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.prec_);
  mpfr_set_prec(hi_, o.prec_);
  prec_ = o.prec_;
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::of_rational(const Rational& r, long prec) {
  Interval x(prec);
  mpfr_set_q(x.lo_, r.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x.hi_, r.raw().get_mpq_t(), MPFR_RNDU);
  return x;
}

Interval Interval::of_long(long v, long prec) {
  Interval x(prec);
  mpfr_set_si(x.lo_, v, MPFR_RNDD);
  mpfr_set_si(x.hi_, v, MPFR_RNDU);
  return x;
}

Interval Interval::sqrt_of_long(long v, long prec) {
  if (v < 0) throw std::domain_error("sqrt_of_long: negative argument");
  Interval x(prec);
  mpfr_sqrt_ui(x.lo_, static_cast<unsigned long>(v), MPFR_RNDD);
  mpfr_sqrt_ui(x.hi_, static_cast<unsigned long>(v), MPFR_RNDU);
  return x;
}

Interval Interval::operator+(const Interval& o) const {
  Interval x(std::max(prec_, o.prec_));
  mpfr_add(x.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(x.hi_, hi_, o.hi_, MPFR_RNDU);
  return x;
}

Interval Interval::operator-(const Interval& o) const {
  Interval x(std::max(prec_, o.prec_));
  mpfr_sub(x.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(x.hi_, hi_, o.lo_, MPFR_RNDU);
  return x;
}

Interval Interval::operator-() const {
  Interval x(prec_);
  mpfr_neg(x.lo_, hi_, MPFR_RNDD);
  mpfr_neg(x.hi_, lo_, MPFR_RNDU);
  return x;
}

Interval Interval::operator*(const Interval& o) const {
  Interval x(std::max(prec_, o.prec_));
  mpfr_t c;
  mpfr_init2(c, x.prec_);
  // lo: minimum of the four products rounded down
  bool first = true;
  const mpfr_t* as[2] = {&lo_, &hi_};
  const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
  for (auto a : as)
    for (auto b : bs) {
      mpfr_mul(c, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(c, x.lo_) < 0) mpfr_set(x.lo_, c, MPFR_RNDD);
      first = false;
    }
  first = true;
  for (auto a : as)
    for (auto b : bs) {
      mpfr_mul(c, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(c, x.hi_) > 0) mpfr_set(x.hi_, c, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(c);
  return x;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.contains_zero()) throw std::domain_error("Interval division by interval containing 0");
  Interval x(std::max(prec_, o.prec_));
  mpfr_t c;
  mpfr_init2(c, x.prec_);
  bool first = true;
  const mpfr_t* as[2] = {&lo_, &hi_};
  const mpfr_t* bs[2] = {&o.lo_, &o.hi_};
  for (auto a : as)
    for (auto b : bs) {
      mpfr_div(c, *a, *b, MPFR_RNDD);
      if (first || mpfr_cmp(c, x.lo_) < 0) mpfr_set(x.lo_, c, MPFR_RNDD);
      first = false;
    }
  first = true;
  for (auto a : as)
    for (auto b : bs) {
      mpfr_div(c, *a, *b, MPFR_RNDU);
      if (first || mpfr_cmp(c, x.hi_) > 0) mpfr_set(x.hi_, c, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(c);
  return x;
}

Interval Interval::pow_int(long e) const {
  if (e == 0) return of_long(1, prec_);
  if (e < 0) return of_long(1, prec_) / pow_int(-e);
  Interval acc = of_long(1, prec_);
  Interval base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

double Interval::lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid() const { return (lo() + hi()) / 2; }
double Interval::width() const { return hi() - lo(); }

bool Interval::abs_certainly_below(const Rational& eps) const {
  Rational neg = -eps;
  return mpfr_cmp_q(hi_, eps.raw().get_mpq_t()) < 0 &&
         mpfr_cmp_q(lo_, neg.raw().get_mpq_t()) > 0;
}

bool Interval::abs_certainly_above(const Rational& eps) const {
  Rational neg = -eps;
  return mpfr_cmp_q(lo_, eps.raw().get_mpq_t()) > 0 ||
         mpfr_cmp_q(hi_, neg.raw().get_mpq_t()) < 0;
}

Interval Interval::minus_rational(const Rational& r) const {
  return *this - of_rational(r, prec_);
}

Interval Interval::over_rational(const Rational& r) const {
  if (r.is_zero()) throw std::domain_error("Interval: division by zero rational");
  return *this / of_rational(r, prec_);
}

Interval Interval::times_rational(const Rational& r) const {
  return *this * of_rational(r, prec_);
}

std::string Interval::str() const {
  std::ostringstream os;
  os.precision(17);
  os << "[" << lo() << ", " << hi() << "]";
  return os.str();
}

}  // namespace wgc
