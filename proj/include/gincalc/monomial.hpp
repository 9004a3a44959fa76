#ifndef GINCALC_MONOMIAL_HPP
#define GINCALC_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gincalc {

/// A monomial in variables x0..x{arity-1}, stored as its exponent tuple.
/// Immutable after construction; all mutating operations return new values.
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents);

  /// The constant monomial 1 in the given number of variables.
  static Monomial one(int arity);
  /// The variable x_i.
  static Monomial variable(int arity, int var);

  int arity() const { return static_cast<int>(exps_.size()); }
  int exponent(int var) const { return exps_[static_cast<size_t>(var)]; }
  const std::vector<int>& exponents() const& { return exps_; }
  std::vector<int> exponents() && { return std::move(exps_); }

  int degree() const;

  /// Largest variable index with positive exponent, or -1 for the constant 1.
  int max_var() const;

  bool divides(const Monomial& other) const;

  Monomial times_var(int var, int power = 1) const;
  /// Exponent of `var` set to zero (used by saturation).
  Monomial without_var(int var) const;
  /// Same exponents, zero-padded to a larger ambient ring.
  Monomial extended(int new_arity) const;
  /// Drop trailing variables; their exponents must be zero.
  Monomial restricted(int new_arity) const;

  /// Render as "x0^2*x1"; the constant renders as "1".
  std::string str() const;

  bool operator==(const Monomial& rhs) const { return exps_ == rhs.exps_; }
  bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

private:
  std::vector<int> exps_;
};

/// Graded reverse-lexicographic comparison: lower total degree is smaller;
/// on equal degree the monomial with the larger exponent in the last
/// differing variable is smaller. Throws on arity mismatch.
bool revlex_less(const Monomial& a, const Monomial& b);

/// Strict-weak orders usable with ordered containers.
struct RevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_less(a, b);
  }
};
struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_less(b, a);
  }
};

/// The elementary Borel exchange m * x_i / x_j for i < j.
/// Requires exponent(j) > 0; degree is preserved.
Monomial borel_move(const Monomial& m, int i, int j);

std::size_t hash_value(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return hash_value(m); }
};

}  // namespace gincalc

#endif
