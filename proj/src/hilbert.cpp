#include "gincalc/hilbert.hpp"

#include <stdexcept>

namespace gincalc {

long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

/// Counts degree-`remaining` completions over variables var..arity-1 that no
/// active generator divides. `active` holds the generators compatible with
/// the exponents already chosen; a generator with nothing left to require
/// divides every completion, and with no generators left every completion
/// is standard (stars and bars).
long long count_standard_pruned(const std::vector<const int*>& active, int var,
                                int arity, int remaining) {
  std::vector<const int*> next;
  next.reserve(active.size());
  if (var + 1 == arity) {
    for (const int* g : active)
      if (g[var] <= remaining) return 0;
    return 1;
  }
  long long total = 0;
  for (int e = 0; e <= remaining; ++e) {
    next.clear();
    bool dead = false;
    for (const int* g : active) {
      if (g[var] > e) continue;
      bool exhausted = true;
      for (int j = var + 1; j < arity; ++j)
        if (g[j] > 0) {
          exhausted = false;
          break;
        }
      if (exhausted) {
        dead = true;  // this generator already divides the prefix
        break;
      }
      next.push_back(g);
    }
    if (dead) continue;
    if (next.empty())
      total += binomial(remaining - e + arity - var - 2, arity - var - 2);
    else
      total += count_standard_pruned(next, var + 1, arity, remaining - e);
  }
  return total;
}

std::vector<const int*> generator_rows(const MonomialIdeal& ideal) {
  std::vector<const int*> rows;
  rows.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) rows.push_back(g.exponents().data());
  return rows;
}

}  // namespace

long long hilbert_function_serial(const MonomialIdeal& ideal, int t) {
  if (t < 0) throw std::invalid_argument("negative degree");
  for (const Monomial& g : ideal.generators())
    if (g.degree() == 0) return 0;
  return count_standard_pruned(generator_rows(ideal), 0, ideal.arity(), t);
}

long long hilbert_function(const MonomialIdeal& ideal, int t, ExecMode mode) {
  if (t < 0) throw std::invalid_argument("negative degree");
  // Splitting the first exponent across threads only pays off once the
  // ambient monomial count dwarfs the fork cost; below that the pruned
  // serial counter wins outright.
  if (mode == ExecMode::serial || ideal.arity() == 1 ||
      binomial(t + ideal.arity() - 1, ideal.arity() - 1) < (1 << 18))
    return hilbert_function_serial(ideal, t);
  for (const Monomial& g : ideal.generators())
    if (g.degree() == 0) return 0;
  std::vector<const int*> rows = generator_rows(ideal);
  const int arity = ideal.arity();
  long long total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (int e0 = 0; e0 <= t; ++e0) {
    std::vector<const int*> active;
    bool dead = false;
    for (const int* g : rows) {
      if (g[0] > e0) continue;
      bool exhausted = true;
      for (int j = 1; j < arity; ++j)
        if (g[j] > 0) {
          exhausted = false;
          break;
        }
      if (exhausted) {
        dead = true;
        break;
      }
      active.push_back(g);
    }
    if (dead) continue;
    if (active.empty())
      total += binomial(t - e0 + arity - 2, arity - 2);
    else
      total += count_standard_pruned(active, 1, arity, t - e0);
  }
  return total;
}

long long graded_piece_dim(const MonomialIdeal& ideal, int t, ExecMode mode) {
  return binomial(t + ideal.arity() - 1, ideal.arity() - 1) -
         hilbert_function(ideal, t, mode);
}

int regularity_borel(const MonomialIdeal& ideal) {
  if (!is_borel_fixed(ideal))
    throw std::invalid_argument("regularity criterion requires a Borel-fixed ideal");
  int reg = 0;
  for (const Monomial& g : ideal.generators()) reg = std::max(reg, g.degree());
  return reg;
}

CurvePolynomial hilbert_polynomial_curve(const MonomialIdeal& ideal, ExecMode mode) {
  if (!is_saturated_borel(ideal))
    throw std::invalid_argument("hilbert_polynomial_curve requires a saturated Borel-fixed ideal");
  int reg = std::max(regularity_borel(ideal), 1);
  long long h0 = hilbert_function(ideal, reg, mode);
  long long h1 = hilbert_function(ideal, reg + 1, mode);
  long long h2 = hilbert_function(ideal, reg + 2, mode);
  long long d = h1 - h0;
  if (d <= 0 || h2 - h1 != d)
    throw std::invalid_argument("Hilbert function is not linear of positive slope");
  CurvePolynomial p;
  p.degree = d;
  p.genus = d * reg + 1 - h0;
  return p;
}

SheafH1 sheaf_h1_oracle(const MonomialIdeal& ideal, int t, ExecMode mode) {
  CurvePolynomial p = hilbert_polynomial_curve(ideal, mode);
  SheafH1 out;
  out.value = p.eval(t) - hilbert_function(ideal, t, mode);
  out.h2_vanishing_assumed = t < regularity_borel(ideal) - 2;
  return out;
}

HilbertData hilbert_data(const MonomialIdeal& ideal, ExecMode mode) {
  if (!is_saturated_borel(ideal))
    throw std::invalid_argument("hilbert_data requires a saturated Borel-fixed ideal");
  HilbertData data;
  data.regularity = regularity_borel(ideal);
  int hi = data.regularity + 2;
  for (int t = 0; t <= hi; ++t) data.values[t] = hilbert_function(ideal, t, mode);

  // Two independent dimension detectors: a pure power of the next-to-last
  // variable among the generators, and stabilization of the function.
  bool pure_power = false;
  int pivot = ideal.arity() - 2;
  for (const Monomial& g : ideal.generators())
    if (g.degree() > 0 && g.max_var() == pivot && g.exponent(pivot) == g.degree())
      pure_power = true;
  bool stabilized = data.values[data.regularity] == data.values[data.regularity + 1];
  if (pure_power != stabilized)
    throw std::logic_error("dimension detectors disagree");

  data.zero_dimensional = pure_power;
  if (data.zero_dimensional)
    data.colength = data.values[data.regularity];
  else
    data.curve = hilbert_polynomial_curve(ideal, mode);
  return data;
}

}  // namespace gincalc
