#ifndef GINCALC_RATIONAL_HPP
#define GINCALC_RATIONAL_HPP

#include <string>

namespace gincalc {

/// Exact rational on 64-bit numerator/denominator, normalized with a
/// positive denominator. Intermediate products run through 128-bit
/// arithmetic and overflow of the reduced result throws.
class Rational {
public:
  Rational() = default;
  Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  Rational zero_like() const { return Rational(0); }
  Rational one_like() const { return Rational(1); }
  /// Throws unless the value is an integer.
  long long as_integer() const;

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  Rational operator/(const Rational& rhs) const;

  bool operator==(const Rational& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
  bool operator<(const Rational& rhs) const;
  bool operator<=(const Rational& rhs) const { return *this < rhs || *this == rhs; }
  bool operator>(const Rational& rhs) const { return rhs < *this; }
  bool operator>=(const Rational& rhs) const { return rhs <= *this; }

  /// "13" or "57/2".
  std::string str() const;

private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gincalc

#endif
