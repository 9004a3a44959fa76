#ifndef GINCALC_GROEBNER_HPP
#define GINCALC_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "gincalc/ideal.hpp"
#include "gincalc/linalg.hpp"
#include "gincalc/poly.hpp"

namespace gincalc {

template <class F>
struct GroebnerBasis {
  std::vector<Polynomial<F>> elements;  // monic, sorted by leading monomial
  std::optional<int> degree_cap;
};

namespace detail {

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(static_cast<size_t>(a.arity()));
  for (int i = 0; i < a.arity(); ++i)
    e[static_cast<size_t>(i)] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(std::move(e));
}

inline Monomial monomial_quotient(const Monomial& num, const Monomial& den) {
  std::vector<int> e(static_cast<size_t>(num.arity()));
  for (int i = 0; i < num.arity(); ++i)
    e[static_cast<size_t>(i)] = num.exponent(i) - den.exponent(i);
  return Monomial(std::move(e));
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.arity(); ++i)
    if (a.exponent(i) > 0 && b.exponent(i) > 0) return false;
  return true;
}

}  // namespace detail

/// Full normal form: the remainder of f under repeated division by the
/// first basis element whose leading monomial divides the current one.
template <class F>
Polynomial<F> normal_form(Polynomial<F> f, const std::vector<Polynomial<F>>& basis) {
  Polynomial<F> remainder(f.arity());
  while (!f.is_zero()) {
    const Monomial lm = f.leading_monomial();
    const F lc = f.leading_coeff();
    bool reduced = false;
    for (const Polynomial<F>& g : basis) {
      if (g.is_zero()) continue;
      if (!g.leading_monomial().divides(lm)) continue;
      f = f - g.shifted(detail::monomial_quotient(lm, g.leading_monomial()),
                        lc / g.leading_coeff());
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return remainder;
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
  Monomial lcm = detail::monomial_lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial<F> left =
      f.shifted(detail::monomial_quotient(lcm, f.leading_monomial()),
                f.leading_coeff().one_like() / f.leading_coeff());
  Polynomial<F> right =
      g.shifted(detail::monomial_quotient(lcm, g.leading_monomial()),
                g.leading_coeff().one_like() / g.leading_coeff());
  return left - right;
}

/// Buchberger with the normal pair-selection strategy (lowest lcm degree,
/// then revlex on the lcm). Homogeneous inputs only. With a degree cap the
/// basis is complete through that degree; without one it is a full reduced
/// Groebner basis. Deterministic.
template <class F>
GroebnerBasis<F> buchberger(std::vector<Polynomial<F>> gens,
                            std::optional<int> degree_cap = std::nullopt) {
  std::vector<Polynomial<F>> basis;
  for (Polynomial<F>& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("buchberger expects homogeneous input");
    basis.push_back(g.monic());
  }
  std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    return revlex_less(a.leading_monomial(), b.leading_monomial());
  });

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.push_back(Pair{i, j,
                           detail::monomial_lcm(basis[i].leading_monomial(),
                                                basis[j].leading_monomial())});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (revlex_less(a.lcm, b.lcm) ||
          (a.lcm == b.lcm && (a.i < b.i || (a.i == b.i && a.j < b.j))))
        best = k;
    }
    Pair pair = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (degree_cap && pair.lcm.degree() > *degree_cap) continue;
    if (detail::coprime(basis[pair.i].leading_monomial(),
                        basis[pair.j].leading_monomial()))
      continue;
    Polynomial<F> s = s_polynomial(basis[pair.i], basis[pair.j]);
    Polynomial<F> r = normal_form(std::move(s), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs(basis.size() - 1);
  }

  // Reduce to the unique minimal reduced basis (within the cap).
  std::vector<Polynomial<F>> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j)
      if (i != j && basis[j].leading_monomial().divides(basis[i].leading_monomial()))
        redundant = (basis[j].leading_monomial() != basis[i].leading_monomial()) || j < i;
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial<F> reduced = normal_form(minimal[i], others);
    if (!reduced.is_zero()) minimal[i] = reduced.monic();
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return revlex_less(a.leading_monomial(), b.leading_monomial());
  });
  GroebnerBasis<F> out;
  out.elements = std::move(minimal);
  out.degree_cap = degree_cap;
  return out;
}

/// Minimalized leading-term ideal of a (cap-complete) basis.
template <class F>
MonomialIdeal initial_ideal(const GroebnerBasis<F>& basis) {
  if (basis.elements.empty()) throw std::invalid_argument("empty basis");
  int arity = basis.elements.front().arity();
  std::vector<Monomial> lts;
  lts.reserve(basis.elements.size());
  for (const Polynomial<F>& g : basis.elements) lts.push_back(g.leading_monomial());
  return MonomialIdeal(arity, std::move(lts));
}

/// All monomials of the given degree, revlex-descending. The column order
/// of every exact-linear-algebra computation below.
std::vector<Monomial> monomials_of_degree(int arity, int degree);

/// Dimension of the degree-t piece of the ideal generated by `gens`,
/// computed as the rank of the multiplication matrix. Independent of the
/// Buchberger path; Macaulay-style oracle.
template <class F>
long long graded_ideal_dim(const std::vector<Polynomial<F>>& gens, int t,
                           const F& sample) {
  if (gens.empty()) return 0;
  int arity = gens.front().arity();
  std::vector<Monomial> cols = monomials_of_degree(arity, t);
  std::map<Monomial, size_t, RevlexGreater> col_of;
  for (size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);
  std::vector<std::vector<F>> rows;
  for (const Polynomial<F>& g : gens) {
    if (g.is_zero()) continue;
    int dg = g.degree();
    if (dg > t) continue;
    for (const Monomial& m : monomials_of_degree(arity, t - dg)) {
      Polynomial<F> prod = g.shifted(m, sample.one_like());
      std::vector<F> row(cols.size(), sample.zero_like());
      for (const auto& [mon, c] : prod.terms()) row[col_of.at(mon)] = c;
      rows.push_back(std::move(row));
    }
  }
  return row_reduce(rows);
}

/// Initial ideal through degree `cap` by degreewise row reduction: the
/// leading terms of a reduced basis of each graded piece. Avoids Buchberger
/// entirely, trading S-pairs for Gaussian elimination.
template <class F>
MonomialIdeal initial_ideal_by_linear_algebra(const std::vector<Polynomial<F>>& gens,
                                              int cap, const F& sample) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  int arity = gens.front().arity();
  std::vector<Monomial> lts;
  for (int t = 0; t <= cap; ++t) {
    std::vector<Monomial> cols = monomials_of_degree(arity, t);
    std::map<Monomial, size_t, RevlexGreater> col_of;
    for (size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);
    std::vector<std::vector<F>> rows;
    for (const Polynomial<F>& g : gens) {
      if (g.is_zero() || g.degree() > t) continue;
      for (const Monomial& m : monomials_of_degree(arity, t - g.degree())) {
        Polynomial<F> prod = g.shifted(m, sample.one_like());
        std::vector<F> row(cols.size(), sample.zero_like());
        for (const auto& [mon, c] : prod.terms()) row[col_of.at(mon)] = c;
        rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) continue;
    row_reduce(rows);
    size_t r = 0;
    for (size_t c = 0; c < cols.size() && r < rows.size(); ++c)
      if (!rows[r][c].is_zero()) {
        lts.push_back(cols[c]);
        ++r;
      }
  }
  return MonomialIdeal(arity, std::move(lts));
}

}  // namespace gincalc

#endif
