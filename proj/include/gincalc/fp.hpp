#ifndef GINCALC_FP_HPP
#define GINCALC_FP_HPP

#include <cstdint>
#include <string>

namespace gincalc {

constexpr std::uint32_t kDefaultPrime = 32003;

/// Element of a prime field F_p with runtime modulus. Every element carries
/// its modulus; mixing moduli throws. No floating point anywhere.
class Fp {
public:
  Fp(long long value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp zero_like() const { return Fp(0, p_); }
  Fp one_like() const { return Fp(1, p_); }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator+(const Fp& rhs) const;
  Fp operator-(const Fp& rhs) const;
  Fp operator*(const Fp& rhs) const;
  Fp operator/(const Fp& rhs) const;
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  bool operator==(const Fp& rhs) const { return v_ == rhs.v_ && p_ == rhs.p_; }
  bool operator!=(const Fp& rhs) const { return !(*this == rhs); }

  std::string str() const { return std::to_string(v_); }

private:
  std::uint32_t v_;
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p);

}  // namespace gincalc

#endif
