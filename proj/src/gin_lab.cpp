#include "gincalc/gin_lab.hpp"

#include <algorithm>
#include <stdexcept>

namespace gincalc {

namespace {

Fp fp_sample(const std::vector<Polynomial<Fp>>& gens) {
  for (const Polynomial<Fp>& g : gens)
    if (!g.is_zero()) return g.leading_coeff().zero_like();
  throw std::invalid_argument("no nonzero generator");
}

/// Incremental row basis over F_p for rank bookkeeping.
class RowBasis {
public:
  /// Reduces the row against the basis; keeps and reports independent rows.
  bool insert(std::vector<Fp> row) {
    for (const auto& [pivot, basis_row] : rows_) {
      if (row[pivot].is_zero()) continue;
      Fp factor = row[pivot];
      for (size_t j = pivot; j < row.size(); ++j)
        row[j] = row[j] - factor * basis_row[j];
    }
    size_t pivot = row.size();
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot == row.size()) return false;
    Fp inv = row[pivot].one_like() / row[pivot];
    for (size_t j = pivot; j < row.size(); ++j) row[j] = row[j] * inv;
    rows_.emplace_back(pivot, std::move(row));
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
  }

private:
  std::vector<std::pair<size_t, std::vector<Fp>>> rows_;
};

std::vector<Fp> poly_to_row(const Polynomial<Fp>& p,
                            const std::map<Monomial, size_t, RevlexGreater>& col_of,
                            size_t width, const Fp& zero) {
  std::vector<Fp> row(width, zero);
  for (const auto& [m, c] : p.terms()) row[col_of.at(m)] = c;
  return row;
}

}  // namespace

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) throw std::invalid_argument("empty form");
  Fp zero = a.coeffs.front().zero_like();
  BinaryForm out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, zero);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = out.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
  return out;
}

bool is_zero(const BinaryForm& f) {
  for (const Fp& c : f.coeffs)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

/// Univariate polynomial over F_p as a dense coefficient vector, lowest
/// degree first; used only for the gcd of dehomogenized binary forms.
std::vector<Fp> trim(std::vector<Fp> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

std::vector<Fp> poly_mod(std::vector<Fp> a, const std::vector<Fp>& b) {
  while (a.size() >= b.size()) {
    Fp factor = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = a[shift + j] - factor * b[j];
    a = trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

std::vector<Fp> poly_gcd(std::vector<Fp> a, std::vector<Fp> b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    std::vector<Fp> r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

int gcd_degree(const std::vector<BinaryForm>& forms) {
  int u_mult = -1;
  std::vector<Fp> g;
  bool any = false;
  for (const BinaryForm& f : forms) {
    if (is_zero(f)) continue;
    any = true;
    int first_nonzero = 0;
    while (f.coeffs[static_cast<size_t>(first_nonzero)].is_zero()) ++first_nonzero;
    u_mult = u_mult < 0 ? first_nonzero : std::min(u_mult, first_nonzero);
    // dehomogenized in t: coefficient of t^{d-i} is coeffs[i]
    std::vector<Fp> univ(f.coeffs.rbegin(), f.coeffs.rend());
    g = g.empty() ? trim(std::move(univ)) : poly_gcd(std::move(g), std::move(univ));
  }
  if (!any) throw std::invalid_argument("all forms are zero");
  return u_mult + static_cast<int>(g.size()) - 1;
}

LinearChange random_linear_change(int arity, std::uint32_t p, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    LinearChange change;
    change.rows.reserve(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) {
      std::vector<Fp> row;
      row.reserve(static_cast<size_t>(arity));
      for (int j = 0; j < arity; ++j)
        row.emplace_back(static_cast<long long>(rng.bounded(p)), p);
      change.rows.push_back(std::move(row));
    }
    if (is_invertible(change.rows)) return change;
  }
  throw std::runtime_error("failed to draw an invertible change");
}

namespace {

Polynomial<Fp> linear_form(const std::vector<Fp>& coeffs) {
  int arity = static_cast<int>(coeffs.size());
  Polynomial<Fp> out(arity);
  for (int j = 0; j < arity; ++j)
    out.add_term(Monomial::variable(arity, j), coeffs[static_cast<size_t>(j)]);
  return out;
}

}  // namespace

Polynomial<Fp> apply_change(const Polynomial<Fp>& f, const LinearChange& change) {
  if (f.arity() != change.arity()) throw std::invalid_argument("arity mismatch");
  const int arity = f.arity();
  Fp one = change.rows[0][0].one_like();
  std::vector<int> max_exp(static_cast<size_t>(arity), 0);
  for (const auto& [m, c] : f.terms())
    for (int i = 0; i < arity; ++i)
      max_exp[static_cast<size_t>(i)] = std::max(max_exp[static_cast<size_t>(i)],
                                                 m.exponent(i));
  std::vector<std::vector<Polynomial<Fp>>> pow_cache(static_cast<size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    Polynomial<Fp> li = linear_form(change.rows[static_cast<size_t>(i)]);
    pow_cache[static_cast<size_t>(i)].push_back(
        Polynomial<Fp>::term(Monomial::one(arity), one));
    for (int e = 1; e <= max_exp[static_cast<size_t>(i)]; ++e)
      pow_cache[static_cast<size_t>(i)].push_back(pow_cache[static_cast<size_t>(i)].back() * li);
  }
  Polynomial<Fp> out(arity);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<Fp> term = Polynomial<Fp>::term(Monomial::one(arity), c);
    for (int i = 0; i < arity; ++i)
      if (m.exponent(i) > 0)
        term = term * pow_cache[static_cast<size_t>(i)][static_cast<size_t>(m.exponent(i))];
    out = out + term;
  }
  return out;
}

Polynomial<Fp> substitute_variable(const Polynomial<Fp>& f, int var,
                                   const Polynomial<Fp>& value) {
  const int arity = f.arity();
  Fp one = fp_sample({f}).one_like();
  int max_exp = 0;
  for (const auto& [m, c] : f.terms()) max_exp = std::max(max_exp, m.exponent(var));
  std::vector<Polynomial<Fp>> pows;
  pows.push_back(Polynomial<Fp>::term(Monomial::one(arity), one));
  for (int e = 1; e <= max_exp; ++e) pows.push_back(pows.back() * value);
  Polynomial<Fp> out(arity);
  for (const auto& [m, c] : f.terms()) {
    Polynomial<Fp> term =
        Polynomial<Fp>::term(m.without_var(var), c) * pows[static_cast<size_t>(m.exponent(var))];
    out = out + term;
  }
  return out;
}

Polynomial<Fp> restrict_poly(const Polynomial<Fp>& f, int new_arity) {
  Polynomial<Fp> out(new_arity);
  for (const auto& [m, c] : f.terms()) out.add_term(m.restricted(new_arity), c);
  return out;
}

std::vector<Polynomial<Fp>> rational_normal_curve_ideal(int n, std::uint32_t p) {
  const int arity = n + 1;
  Fp one(1, p);
  std::vector<Polynomial<Fp>> minors;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial<Fp> m(arity);
      std::vector<int> e1(static_cast<size_t>(arity), 0);
      e1[static_cast<size_t>(i)] += 1;
      e1[static_cast<size_t>(j + 1)] += 1;
      m.add_term(Monomial(std::move(e1)), one);
      std::vector<int> e2(static_cast<size_t>(arity), 0);
      e2[static_cast<size_t>(i + 1)] += 1;
      e2[static_cast<size_t>(j)] += 1;
      m.add_term(Monomial(std::move(e2)), -one);
      minors.push_back(std::move(m));
    }
  return minors;
}

namespace {

void validate_forms(const std::vector<BinaryForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("no forms");
  const int d = forms.front().degree();
  for (const BinaryForm& f : forms)
    if (f.degree() != d) throw std::invalid_argument("forms of unequal degree");
  if (gcd_degree(forms) != 0)
    throw std::invalid_argument("parameterizing forms share a factor");
}

Fp eval_at(const BinaryForm& f, const Fp& lambda) {
  // value at (t, u) = (lambda, 1)
  Fp acc = f.coeffs.front();
  for (size_t k = 1; k < f.coeffs.size(); ++k) acc = acc * lambda + f.coeffs[k];
  return acc;
}

/// The substitution map in the evaluation basis of the target: degree-d*t
/// binary forms are determined by their values at d*t+1 distinct points, so
/// the matrix entry for (point k, monomial column c) is the product of the
/// form values at point k raised to the exponents of c. Same kernel and
/// lead structure as the coefficient matrix, but each entry is a few
/// multiplications instead of a convolution.
std::vector<std::vector<Fp>> evaluation_matrix(const std::vector<BinaryForm>& forms,
                                               const std::vector<Monomial>& cols, int t) {
  const int arity = static_cast<int>(forms.size());
  const int d = forms.front().degree();
  const std::uint32_t p = forms.front().coeffs.front().modulus();
  const size_t points = static_cast<size_t>(d) * t + 1;
  if (points + 1 > p) throw std::invalid_argument("field too small for this degree");
  // value-power tables: pow_table[k][i][e] with points lambda_k = k
  std::vector<std::vector<std::vector<Fp>>> pow_table(points);
  for (size_t k = 0; k < points; ++k) {
    Fp lambda(static_cast<long long>(k), p);
    pow_table[k].resize(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) {
      Fp v = eval_at(forms[static_cast<size_t>(i)], lambda);
      auto& powers = pow_table[k][static_cast<size_t>(i)];
      powers.emplace_back(1, p);
      for (int e = 1; e <= t; ++e) powers.push_back(powers.back() * v);
    }
  }
  std::vector<std::vector<Fp>> matrix(points, std::vector<Fp>(cols.size(), Fp(0, p)));
  for (size_t k = 0; k < points; ++k)
    for (size_t c = 0; c < cols.size(); ++c) {
      Fp entry(1, p);
      for (int i = 0; i < arity; ++i) {
        int e = cols[c].exponent(i);
        if (e > 0) entry = entry * pow_table[k][static_cast<size_t>(i)][static_cast<size_t>(e)];
      }
      matrix[k][c] = entry;
    }
  return matrix;
}

}  // namespace

ParamCurveIdeal curve_ideal_from_param(const std::vector<BinaryForm>& forms, int cap) {
  validate_forms(forms);
  const int arity = static_cast<int>(forms.size());
  Fp zero = forms.front().coeffs.front().zero_like();

  ParamCurveIdeal out;
  out.cap = cap;
  out.kernel_dims.assign(static_cast<size_t>(cap) + 1, 0);
  out.by_degree.assign(static_cast<size_t>(cap) + 1, {});

  for (int t = 1; t <= cap; ++t) {
    std::vector<Monomial> cols = monomials_of_degree(arity, t);
    std::vector<std::vector<Fp>> kernel =
        null_space(evaluation_matrix(forms, cols, t), zero);
    out.kernel_dims[static_cast<size_t>(t)] = static_cast<long long>(kernel.size());
    for (const std::vector<Fp>& v : kernel) {
      Polynomial<Fp> p(arity);
      for (size_t c = 0; c < cols.size(); ++c)
        if (!v[c].is_zero()) p.add_term(cols[c], v[c]);
      out.by_degree[static_cast<size_t>(t)].push_back(std::move(p));
    }
  }
  return out;
}

/// Leading monomials of each graded piece without computing kernels: a
/// column is the lead of some ideal element exactly when it depends on the
/// columns to its right (revlex-smaller monomials).
std::vector<Monomial> param_lead_monomials(const std::vector<BinaryForm>& forms, int cap) {
  validate_forms(forms);
  const int arity = static_cast<int>(forms.size());
  std::vector<Monomial> lts;
  for (int t = 1; t <= cap; ++t) {
    std::vector<Monomial> cols = monomials_of_degree(arity, t);
    std::vector<std::vector<Fp>> matrix = evaluation_matrix(forms, cols, t);
    const size_t points = matrix.size();
    RowBasis basis;
    for (size_t c = cols.size(); c-- > 0;) {
      std::vector<Fp> column;
      column.reserve(points);
      for (size_t k = 0; k < points; ++k) column.push_back(matrix[k][c]);
      if (!basis.insert(std::move(column))) lts.push_back(cols[c]);
    }
  }
  return lts;
}

std::vector<Polynomial<Fp>> minimal_generators_from_param(
    const std::vector<BinaryForm>& forms, int cap) {
  ParamCurveIdeal ideal = curve_ideal_from_param(forms, cap);
  const int arity = static_cast<int>(forms.size());
  Fp zero = forms.front().coeffs.front().zero_like();
  std::vector<Polynomial<Fp>> gens;
  for (int t = 1; t <= cap; ++t) {
    if (ideal.by_degree[static_cast<size_t>(t)].empty()) continue;
    std::vector<Monomial> cols = monomials_of_degree(arity, t);
    std::map<Monomial, size_t, RevlexGreater> col_of;
    for (size_t c = 0; c < cols.size(); ++c) col_of.emplace(cols[c], c);
    RowBasis basis;
    for (const Polynomial<Fp>& g : gens)
      for (const Monomial& m : monomials_of_degree(arity, t - g.degree()))
        basis.insert(poly_to_row(g.shifted(m, zero.one_like()), col_of, cols.size(), zero));
    for (const Polynomial<Fp>& v : ideal.by_degree[static_cast<size_t>(t)])
      if (basis.insert(poly_to_row(v, col_of, cols.size(), zero))) gens.push_back(v);
  }
  return gens;
}

namespace {

/// Deterministic "larger gin" for reporting unstable estimates: compare the
/// revlex-sorted generator lists elementwise, largest first.
bool ideal_revlex_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> ga = a.generators(), gb = b.generators();
  std::sort(ga.begin(), ga.end(), RevlexGreater{});
  std::sort(gb.begin(), gb.end(), RevlexGreater{});
  for (size_t k = 0; k < std::min(ga.size(), gb.size()); ++k) {
    if (revlex_less(ga[k], gb[k])) return true;
    if (revlex_less(gb[k], ga[k])) return false;
  }
  return ga.size() < gb.size();
}

GinResult fold_trials(std::vector<MonomialIdeal> trials, int resamples) {
  GinResult out{trials.front(), true, resamples};
  for (const MonomialIdeal& t : trials)
    if (t != out.gin) {
      out.stable = false;
      if (ideal_revlex_less(out.gin, t)) out.gin = t;
    }
  return out;
}

}  // namespace

GinResult gin_estimate(const std::vector<Polynomial<Fp>>& gens, int trials,
                       std::uint64_t seed, int cap, GinEngine engine) {
  if (trials < 2) throw std::invalid_argument("at least two trials required");
  if (gens.empty()) throw std::invalid_argument("no generators");
  const Fp sample = fp_sample(gens);
  const std::uint32_t p = sample.modulus();
  const int arity = gens.front().arity();
  Rng root(seed);
  int resamples = 0;
  std::vector<MonomialIdeal> results;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = root.split();
    bool accepted = false;
    for (int attempt = 0; attempt < 5 && !accepted; ++attempt) {
      LinearChange change = random_linear_change(arity, p, rng);
      std::vector<Polynomial<Fp>> moved;
      moved.reserve(gens.size());
      for (const Polynomial<Fp>& g : gens) moved.push_back(apply_change(g, change));
      MonomialIdeal candidate =
          engine == GinEngine::buchberger
              ? initial_ideal(buchberger(std::move(moved), cap))
              : initial_ideal_by_linear_algebra(moved, cap, sample);
      if (is_borel_fixed(candidate)) {
        results.push_back(std::move(candidate));
        accepted = true;
      } else {
        ++resamples;
      }
    }
    if (!accepted)
      throw std::runtime_error("initial ideals stayed non-Borel across the retry budget");
  }
  return fold_trials(std::move(results), resamples);
}

GinResult gin_from_param(const std::vector<BinaryForm>& forms, int trials,
                         std::uint64_t seed, int cap) {
  if (trials < 2) throw std::invalid_argument("at least two trials required");
  const int arity = static_cast<int>(forms.size());
  Fp zero = forms.front().coeffs.front().zero_like();
  const std::uint32_t p = zero.modulus();
  Rng root(seed);
  int resamples = 0;
  std::vector<MonomialIdeal> results;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = root.split();
    bool accepted = false;
    for (int attempt = 0; attempt < 5 && !accepted; ++attempt) {
      LinearChange change = random_linear_change(arity, p, rng);
      std::vector<BinaryForm> moved(forms.size(), BinaryForm{});
      for (size_t i = 0; i < forms.size(); ++i) {
        std::vector<Fp> acc(forms.front().coeffs.size(), zero);
        for (size_t j = 0; j < forms.size(); ++j)
          for (size_t k = 0; k < acc.size(); ++k)
            acc[k] = acc[k] + change.rows[i][j] * forms[j].coeffs[k];
        moved[i].coeffs = std::move(acc);
      }
      MonomialIdeal candidate(arity, param_lead_monomials(moved, cap));
      if (is_borel_fixed(candidate)) {
        results.push_back(std::move(candidate));
        accepted = true;
      } else {
        ++resamples;
      }
    }
    if (!accepted)
      throw std::runtime_error("initial ideals stayed non-Borel across the retry budget");
  }
  return fold_trials(std::move(results), resamples);
}

namespace {

void validate_plane_quintic(const Polynomial<Fp>& f, int first_var, const char* which) {
  if (f.arity() != 5) throw std::invalid_argument("quintics live in five variables");
  if (f.is_zero() || !f.is_homogeneous() || f.degree() != 5)
    throw std::invalid_argument(std::string(which) + " must be a nonzero quintic");
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < 5; ++i)
      if (m.exponent(i) > 0 && (i < first_var || i > first_var + 2))
        throw std::invalid_argument(std::string(which) + " uses a variable outside its plane");
    if (m.exponent(2) == 5)
      throw std::invalid_argument(std::string(which) + " must not contain x2^5");
  }
}

}  // namespace

std::vector<Polynomial<Fp>> union_quintics_ideal(const Polynomial<Fp>& f,
                                                 const Polynomial<Fp>& g) {
  validate_plane_quintic(f, 0, "f");
  validate_plane_quintic(g, 2, "g");
  Fp one = f.leading_coeff().one_like();
  auto quad = [&](int i, int j) {
    return Polynomial<Fp>::term(
        Monomial::variable(5, i).times_var(j), one);
  };
  std::vector<Polynomial<Fp>> gens{quad(1, 4), quad(0, 4), quad(1, 3), quad(0, 3), f, g};

  std::vector<Polynomial<Fp>> basis_a{
      Polynomial<Fp>::term(Monomial::variable(5, 3), one),
      Polynomial<Fp>::term(Monomial::variable(5, 4), one), f};
  std::vector<Polynomial<Fp>> basis_b{
      Polynomial<Fp>::term(Monomial::variable(5, 0), one),
      Polynomial<Fp>::term(Monomial::variable(5, 1), one), g};
  for (const Polynomial<Fp>& gen : gens) {
    if (!normal_form(gen, basis_a).is_zero() || !normal_form(gen, basis_b).is_zero())
      throw std::logic_error("union generator escapes a component ideal");
  }
  return gens;
}

bool verify_leadterm_claim(const Polynomial<Fp>& f, const Polynomial<Fp>& g) {
  std::vector<Polynomial<Fp>> gens = union_quintics_ideal(f, g);
  std::vector<Monomial> expected;
  for (size_t k = 0; k < 4; ++k) expected.push_back(gens[k].leading_monomial());
  expected.push_back(f.leading_monomial());
  expected.push_back(g.leading_monomial());
  MonomialIdeal want(5, std::move(expected));

  GroebnerBasis<Fp> gb = buchberger(gens);
  MonomialIdeal got = initial_ideal(gb);
  int max_deg = 0;
  for (const Monomial& m : got.generators()) max_deg = std::max(max_deg, m.degree());
  return got == want && max_deg <= 5;
}

bool restriction_saturation_check(const std::vector<Polynomial<Fp>>& curve_gens,
                                  std::uint64_t seed, int trials, int cap,
                                  GinEngine engine) {
  if (curve_gens.empty()) throw std::invalid_argument("no generators");
  const int arity = curve_gens.front().arity();
  const Fp sample = fp_sample(curve_gens);
  Rng root(seed);

  GinResult curve = gin_estimate(curve_gens, trials, root.next(), cap, engine);
  if (!curve.stable) return false;
  MonomialIdeal lhs = saturate_wrt(curve.gin.restricted(arity - 1), arity - 2);

  // random hyperplane: substitute a nonzero linear form in the earlier variables
  std::vector<Fp> coeffs;
  do {
    coeffs.assign(static_cast<size_t>(arity), sample.zero_like());
    for (int j = 0; j + 1 < arity; ++j)
      coeffs[static_cast<size_t>(j)] =
          Fp(static_cast<long long>(root.bounded(sample.modulus())), sample.modulus());
  } while (std::all_of(coeffs.begin(), coeffs.end(),
                       [](const Fp& c) { return c.is_zero(); }));
  Polynomial<Fp> ell = linear_form(coeffs);
  std::vector<Polynomial<Fp>> section;
  section.reserve(curve_gens.size());
  for (const Polynomial<Fp>& g : curve_gens)
    section.push_back(restrict_poly(substitute_variable(g, arity - 1, ell), arity - 1));

  GinResult sec = gin_estimate(section, trials, root.next(), cap, engine);
  if (!sec.stable) return false;
  MonomialIdeal rhs = saturate_wrt(sec.gin, arity - 2);
  return lhs == rhs;
}

std::vector<BinaryForm> random_parameterization(int degree, std::uint32_t p, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<BinaryForm> forms(5);
    bool zero_form = false;
    for (BinaryForm& f : forms) {
      f.coeffs.reserve(static_cast<size_t>(degree) + 1);
      for (int k = 0; k <= degree; ++k)
        f.coeffs.emplace_back(static_cast<long long>(rng.bounded(p)), p);
      if (is_zero(f)) zero_form = true;
    }
    if (zero_form || gcd_degree(forms) != 0) continue;
    return forms;
  }
  throw std::runtime_error("failed to draw a coprime parameterization");
}

Polynomial<Fp> random_plane_quintic(int first_var, std::uint32_t p, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polynomial<Fp> f(5);
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; a + b <= 5; ++b) {
        int c = 5 - a - b;
        std::vector<int> e(5, 0);
        e[static_cast<size_t>(first_var)] = a;
        e[static_cast<size_t>(first_var) + 1] = b;
        e[static_cast<size_t>(first_var) + 2] = c;
        Monomial m(std::move(e));
        if (m.exponent(2) == 5) continue;
        f.add_term(m, Fp(static_cast<long long>(rng.bounded(p)), p));
      }
    if (!f.is_zero()) return f;
  }
  throw std::runtime_error("failed to draw a quintic");
}

}  // namespace gincalc
