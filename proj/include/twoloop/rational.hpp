#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace twoloop {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n);  // NOLINT: implicit from integers is intended
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;
  /// Always "p/q", used by the JSON matrix dumps.
  [[nodiscard]] std::string to_fraction_string() const;

  /// Narrowing conversion; throws std::overflow_error if not a small integer.
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

}  // namespace twoloop
