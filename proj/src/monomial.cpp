#include "gincalc/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gincalc {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty()) throw std::invalid_argument("monomial needs at least one variable");
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(int arity) {
  return Monomial(std::vector<int>(static_cast<size_t>(arity), 0));
}

Monomial Monomial::variable(int arity, int var) {
  if (var < 0 || var >= arity) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(static_cast<size_t>(arity), 0);
  e[static_cast<size_t>(var)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

int Monomial::max_var() const {
  for (int i = arity() - 1; i >= 0; --i)
    if (exps_[static_cast<size_t>(i)] > 0) return i;
  return -1;
}

bool Monomial::divides(const Monomial& other) const {
  if (arity() != other.arity()) throw std::invalid_argument("arity mismatch");
  for (int i = 0; i < arity(); ++i)
    if (exps_[static_cast<size_t>(i)] > other.exps_[static_cast<size_t>(i)]) return false;
  return true;
}

Monomial Monomial::times_var(int var, int power) const {
  if (var < 0 || var >= arity()) throw std::invalid_argument("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<int> e = exps_;
  e[static_cast<size_t>(var)] += power;
  return Monomial(std::move(e));
}

Monomial Monomial::without_var(int var) const {
  if (var < 0 || var >= arity()) throw std::invalid_argument("variable index out of range");
  std::vector<int> e = exps_;
  e[static_cast<size_t>(var)] = 0;
  return Monomial(std::move(e));
}

Monomial Monomial::extended(int new_arity) const {
  if (new_arity < arity()) throw std::invalid_argument("extension must not shrink arity");
  std::vector<int> e = exps_;
  e.resize(static_cast<size_t>(new_arity), 0);
  return Monomial(std::move(e));
}

Monomial Monomial::restricted(int new_arity) const {
  if (new_arity < 1 || new_arity > arity())
    throw std::invalid_argument("bad restriction arity");
  for (int i = new_arity; i < arity(); ++i)
    if (exps_[static_cast<size_t>(i)] != 0)
      throw std::invalid_argument("restriction would drop a used variable");
  std::vector<int> e(exps_.begin(), exps_.begin() + new_arity);
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::string out;
  for (int i = 0; i < arity(); ++i) {
    int e = exps_[static_cast<size_t>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

bool revlex_less(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch in revlex");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (int i = a.arity() - 1; i >= 0; --i) {
    int ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb;
  }
  return false;
}

Monomial borel_move(const Monomial& m, int i, int j) {
  if (i < 0 || j >= m.arity() || i >= j)
    throw std::invalid_argument("borel move needs 0 <= i < j < arity");
  if (m.exponent(j) <= 0)
    throw std::invalid_argument("borel move needs a positive exponent at x_j");
  std::vector<int> e = m.exponents();
  --e[static_cast<size_t>(j)];
  ++e[static_cast<size_t>(i)];
  return Monomial(std::move(e));
}

std::size_t hash_value(const Monomial& m) {
  // FNV-1a over the exponents; stable across platforms.
  std::uint64_t h = 1469598103934665603ULL;
  for (int e : m.exponents()) {
    h ^= static_cast<std::uint64_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gincalc
