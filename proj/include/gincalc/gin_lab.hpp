#ifndef GINCALC_GIN_LAB_HPP
#define GINCALC_GIN_LAB_HPP

#include <cstdint>
#include <vector>

#include "gincalc/fp.hpp"
#include "gincalc/groebner.hpp"
#include "gincalc/rng.hpp"

namespace gincalc {

/// Homogeneous binary form of fixed degree, dense coefficients from t^d
/// down to u^d.
struct BinaryForm {
  std::vector<Fp> coeffs;  // size = degree + 1
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

BinaryForm multiply(const BinaryForm& a, const BinaryForm& b);
bool is_zero(const BinaryForm& f);
/// Degree of the greatest common divisor; 0 means coprime.
int gcd_degree(const std::vector<BinaryForm>& forms);

/// Invertible square matrix over F_p acting on coordinates.
struct LinearChange {
  std::vector<std::vector<Fp>> rows;
  int arity() const { return static_cast<int>(rows.size()); }
};
LinearChange random_linear_change(int arity, std::uint32_t p, Rng& rng);

/// f(M x): substitutes each variable by its row of the change.
Polynomial<Fp> apply_change(const Polynomial<Fp>& f, const LinearChange& change);

/// Substitute a polynomial for one variable.
Polynomial<Fp> substitute_variable(const Polynomial<Fp>& f, int var,
                                   const Polynomial<Fp>& value);

/// Drop trailing unused variables of a polynomial.
Polynomial<Fp> restrict_poly(const Polynomial<Fp>& f, int new_arity);

/// 2x2 minors of [x0..x_{n-1}; x1..x_n]: the rational normal curve of
/// degree n in P^n.
std::vector<Polynomial<Fp>> rational_normal_curve_ideal(int n, std::uint32_t p);

/// Graded pieces of the ideal of a parameterized rational curve: for each
/// degree t <= cap, an exact kernel basis of the substitution map from
/// degree-t monomials to binary forms of degree d*t.
struct ParamCurveIdeal {
  int cap = 0;
  std::vector<long long> kernel_dims;                    // index t, 0..cap
  std::vector<std::vector<Polynomial<Fp>>> by_degree;    // index t, 0..cap
};
ParamCurveIdeal curve_ideal_from_param(const std::vector<BinaryForm>& forms, int cap);

/// A generating set extracted degreewise: kernel elements independent from
/// multiples of the generators already chosen.
std::vector<Polynomial<Fp>> minimal_generators_from_param(
    const std::vector<BinaryForm>& forms, int cap);

/// Leading monomials of the ideal's graded pieces through the cap, computed
/// by rank profiling alone (no kernel bases).
std::vector<Monomial> param_lead_monomials(const std::vector<BinaryForm>& forms, int cap);

enum class GinEngine { buchberger, linear_algebra };

struct GinResult {
  MonomialIdeal gin;
  bool stable = true;  // all trials produced the same ideal
  int resamples = 0;   // non-Borel trials that were redrawn
};

/// Generic initial ideal estimate: `trials` independent random coordinate
/// changes, one initial ideal each. Trials whose initial ideal fails the
/// Borel test are redrawn (a non-generic change); past the retry budget the
/// failure is reported by throwing. When trials disagree the revlex-largest
/// ideal is returned with `stable` cleared.
GinResult gin_estimate(const std::vector<Polynomial<Fp>>& gens, int trials,
                       std::uint64_t seed, int cap,
                       GinEngine engine = GinEngine::buchberger);

/// Same estimate for a parameterized curve, with coordinate changes acting
/// on the parameterizing forms and each graded piece computed by exact
/// kernel reduction. Much faster than the Buchberger route.
GinResult gin_from_param(const std::vector<BinaryForm>& forms, int trials,
                         std::uint64_t seed, int cap);

/// The ideal of a union of two plane quintics meeting at one point, by its
/// six generators; membership of every generator in both component ideals
/// is verified by normal-form reduction. f must be a quintic in x0,x1,x2
/// and g one in x2,x3,x4, neither containing x2^5.
std::vector<Polynomial<Fp>> union_quintics_ideal(const Polynomial<Fp>& f,
                                                 const Polynomial<Fp>& g);

/// True when the full Buchberger basis of the union ideal has exactly the
/// six expected leading terms and no minimal generator of degree above 5.
bool verify_leadterm_claim(const Polynomial<Fp>& f, const Polynomial<Fp>& g);

/// Restriction/saturation compatibility: the gin of the curve, restricted
/// to the hyperplane and saturated, must match the gin of a random
/// hyperplane section. Exercises both gin routes.
bool restriction_saturation_check(const std::vector<Polynomial<Fp>>& curve_gens,
                                  std::uint64_t seed, int trials = 2, int cap = 8,
                                  GinEngine engine = GinEngine::linear_algebra);

/// Random degree-d parameterization with no common factor.
std::vector<BinaryForm> random_parameterization(int degree, std::uint32_t p, Rng& rng);

/// Random quintic in three consecutive variables (offset 0 or 2) of a
/// 5-variable ring, with no pure power of x2.
Polynomial<Fp> random_plane_quintic(int first_var, std::uint32_t p, Rng& rng);

}  // namespace gincalc

#endif
