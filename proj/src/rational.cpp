#include "wgc/rational.hpp"

#include <ostream>

namespace wgc {

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("Rational::parse: bad rational '" + std::string(s) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (r.is_zero()) throw std::domain_error("pow: 0 to a negative power");
    return pow(Rational(1) / r, -e);
  }
  Rational acc(1), base(r);
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rational ipow(long n, long e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n),
                static_cast<unsigned long>(e));
  if (n < 0 && (e & 1L)) z = -z;
  return Rational(z);
}

}  // namespace wgc
