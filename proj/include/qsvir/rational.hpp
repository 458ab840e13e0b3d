#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsvir {

/// Exact rational number with arbitrary-precision integer parts.
///
/// Always kept in lowest terms with a positive denominator. Every
/// operation is exact; there is no rounding anywhere in this type.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  /// Parses "n" or "n/d" with optional sign.
  explicit Rational(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Value as a machine integer; throws if not an integer or out of range.
  long long to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer");
    if (!v_.get_num().fits_slong_p())
      throw std::domain_error("Rational: integer out of machine range");
    return v_.get_num().get_si();
  }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  /// Exact integer power; negative exponents invert (zero base -> domain error).
  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
      if (e < 0) throw std::domain_error("Rational: zero to a negative power");
      return Rational(0);
    }
    mpq_class base = e > 0 ? v_ : mpq_class(v_.get_den(), v_.get_num());
    base.canonicalize();
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), k);
    mpq_class r(num, den);
    r.canonicalize();
    return Rational(r);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace qsvir
