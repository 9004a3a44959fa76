#include "gincalc/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace gincalc {

namespace {

long long narrow(__int128 v) {
  if (v > static_cast<__int128>(0x7FFFFFFFFFFFFFFFLL) ||
      v < -static_cast<__int128>(0x7FFFFFFFFFFFFFFFLL) - 1)
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a == 0 ? 1 : a;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

long long Rational::as_integer() const {
  if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
  return num_;
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& rhs) const {
  __int128 n = static_cast<__int128>(num_) * rhs.den_ +
               static_cast<__int128>(rhs.num_) * den_;
  __int128 d = static_cast<__int128>(den_) * rhs.den_;
  __int128 g = gcd128(n, d);
  return Rational(narrow(n / g), narrow(d / g));
}

Rational Rational::operator-(const Rational& rhs) const { return *this + (-rhs); }

Rational Rational::operator*(const Rational& rhs) const {
  __int128 n = static_cast<__int128>(num_) * rhs.num_;
  __int128 d = static_cast<__int128>(den_) * rhs.den_;
  __int128 g = gcd128(n, d);
  return Rational(narrow(n / g), narrow(d / g));
}

Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.num_ == 0) throw std::invalid_argument("division by zero");
  return *this * Rational(rhs.den_, rhs.num_);
}

bool Rational::operator<(const Rational& rhs) const {
  return static_cast<__int128>(num_) * rhs.den_ <
         static_cast<__int128>(rhs.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gincalc
