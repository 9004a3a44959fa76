#include "gincalc/fp.hpp"

#include <stdexcept>

namespace gincalc {

namespace {

void check_same(const Fp& a, const Fp& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("mixed field moduli");
}

}  // namespace

Fp::Fp(long long value, std::uint32_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2");
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::operator+(const Fp& rhs) const {
  check_same(*this, rhs);
  std::uint64_t s = static_cast<std::uint64_t>(v_) + rhs.v_;
  if (s >= p_) s -= p_;
  return Fp(static_cast<long long>(s), p_);
}

Fp Fp::operator-(const Fp& rhs) const {
  check_same(*this, rhs);
  return *this + (-rhs);
}

Fp Fp::operator*(const Fp& rhs) const {
  check_same(*this, rhs);
  std::uint64_t s = static_cast<std::uint64_t>(v_) * rhs.v_ % p_;
  return Fp(static_cast<long long>(s), p_);
}

Fp Fp::operator/(const Fp& rhs) const {
  check_same(*this, rhs);
  return *this * rhs.inverse();
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::invalid_argument("inverse of zero");
  return pow(p_ - 2);
}

Fp Fp::pow(std::uint64_t e) const {
  Fp base = *this;
  Fp acc = one_like();
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace gincalc
