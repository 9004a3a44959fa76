#ifndef GINCALC_HILBERT_HPP
#define GINCALC_HILBERT_HPP

#include <map>

#include "gincalc/exec.hpp"
#include "gincalc/ideal.hpp"

namespace gincalc {

long long binomial(long long n, long long k);

/// Number of degree-t monomials of the ambient ring outside the ideal.
/// Computed by explicit enumeration; the 5-variable, degree <= 14 sizes in
/// play never exceed a few thousand monomials.
long long hilbert_function(const MonomialIdeal& ideal, int t,
                           ExecMode mode = ExecMode::parallel);
long long hilbert_function_serial(const MonomialIdeal& ideal, int t);

/// Dimension of the degree-t graded piece of the ideal itself.
long long graded_piece_dim(const MonomialIdeal& ideal, int t,
                           ExecMode mode = ExecMode::parallel);

/// Castelnuovo-Mumford regularity of a Borel-fixed ideal: the maximal total
/// degree of a minimal generator. Throws on non-Borel input, for which the
/// generator degree is only an upper bound.
int regularity_borel(const MonomialIdeal& ideal);

/// Hilbert polynomial P(t) = degree * t + 1 - genus of a one-dimensional
/// saturated ideal.
struct CurvePolynomial {
  long long degree = 0;
  long long genus = 0;
  long long eval(long long t) const { return degree * t + 1 - genus; }
  bool operator==(const CurvePolynomial&) const = default;
};

/// Fits P through the Hilbert function at t = reg and reg+1 and verifies the
/// fit at reg+2. Throws when the growth is not linear of positive slope
/// (wrong dimension) or the input is not saturated Borel-fixed.
CurvePolynomial hilbert_polynomial_curve(const MonomialIdeal& ideal,
                                         ExecMode mode = ExecMode::parallel);

/// First sheaf cohomology of the twisted ideal sheaf, as P(t) - HF(t).
/// Exact whenever the second cohomology vanishes at the same twist; for
/// t >= regularity - 2 that vanishing is automatic, below it the value is
/// reported with `h2_vanishing_assumed` set.
struct SheafH1 {
  long long value = 0;
  bool h2_vanishing_assumed = false;
};
SheafH1 sheaf_h1_oracle(const MonomialIdeal& ideal, int t,
                        ExecMode mode = ExecMode::parallel);

/// Hilbert data of a saturated Borel-fixed ideal: function values through
/// regularity + 2, regularity, and the stable form (colength for points,
/// degree/genus for curves). Dimension is detected two ways -- the pure
/// power criterion on the next-to-last variable and Hilbert-function
/// stabilization -- and a disagreement throws.
struct HilbertData {
  std::map<int, long long> values;
  int regularity = 0;
  bool zero_dimensional = false;
  long long colength = 0;      // valid when zero_dimensional
  CurvePolynomial curve;       // valid otherwise
};
HilbertData hilbert_data(const MonomialIdeal& ideal,
                         ExecMode mode = ExecMode::parallel);

}  // namespace gincalc

#endif
