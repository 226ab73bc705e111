#include "twoloop/rational.hpp"

#include <limits>
#include <stdexcept>

namespace twoloop {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no int64_t constructor on every platform; go through a string
  // only for values outside long's range.
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    return mpz_class(static_cast<long>(v));
  }
  return mpz_class(std::to_string(v));
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::string Rational::to_fraction_string() const {
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::overflow_error("Rational::to_int64: not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw std::overflow_error("Rational::to_int64: out of range");
  return n.get_si();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

}  // namespace twoloop
