#ifndef GINCALC_POLY_HPP
#define GINCALC_POLY_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "gincalc/monomial.hpp"

namespace gincalc {

/// Sparse multivariate polynomial over a field F (Fp or Rational). Terms are
/// kept in descending revlex order, so the leading term is the first entry;
/// zero coefficients are never stored.
template <class F>
class Polynomial {
public:
  using TermMap = std::map<Monomial, F, RevlexGreater>;

  explicit Polynomial(int arity) : arity_(arity) {}

  static Polynomial term(const Monomial& m, const F& c) {
    Polynomial p(m.arity());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
  }

  int arity() const { return arity_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw std::domain_error("leading term of zero");
    return terms_.begin()->first;
  }
  const F& leading_coeff() const {
    if (is_zero()) throw std::domain_error("leading term of zero");
    return terms_.begin()->second;
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  void add_term(const Monomial& m, const F& c) {
    if (m.arity() != arity_) throw std::invalid_argument("term arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
  }

  Polynomial operator-(const Polynomial& rhs) const {
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, -c);
    return out;
  }

  Polynomial scaled(const F& c) const {
    Polynomial out(arity_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
  }

  /// this * c * x^shift
  Polynomial shifted(const Monomial& shift, const F& c) const {
    Polynomial out(arity_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) {
      std::vector<int> e = m.exponents();
      for (int i = 0; i < arity_; ++i) e[static_cast<size_t>(i)] += shift.exponent(i);
      out.terms_.emplace(Monomial(std::move(e)), coeff * c);
    }
    return out;
  }

  Polynomial operator*(const Polynomial& rhs) const {
    Polynomial out(arity_);
    for (const auto& [m, c] : rhs.terms_) out = out + shifted(m, c);
    return out;
  }

  /// Scaled so the leading coefficient is one.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().one_like() / leading_coeff());
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      if (m.degree() > 0) {
        out += "*";
        out += m.str();
      }
    }
    return out;
  }

  bool operator==(const Polynomial& rhs) const {
    return arity_ == rhs.arity_ && terms_ == rhs.terms_;
  }

private:
  int arity_;
  TermMap terms_;
};

}  // namespace gincalc

#endif
