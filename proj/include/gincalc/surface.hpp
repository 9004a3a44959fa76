#ifndef GINCALC_SURFACE_HPP
#define GINCALC_SURFACE_HPP

#include <utility>
#include <vector>

#include "gincalc/rational.hpp"

namespace gincalc {

/// Integer divisor class a*e + b*f on a ruled surface with section e and
/// fibre f.
struct DivisorClass {
  long long a = 0;
  long long b = 0;
  bool operator==(const DivisorClass&) const = default;
};

/// The ruled surface F_n with e^2 = -n, e.f = 1, f^2 = 0. Only F_1 and F_3
/// appear here: they carry the two cubic scrolls, embedded by e+2f and e+3f.
class HirzebruchSurface {
public:
  explicit HirzebruchSurface(int n);

  int n() const { return n_; }
  DivisorClass canonical() const { return DivisorClass{-2, -(n_ + 2)}; }
  DivisorClass hyperplane() const { return DivisorClass{1, n_ == 1 ? 2 : 3}; }

  long long intersect(DivisorClass d1, DivisorClass d2) const {
    return -static_cast<long long>(n_) * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b;
  }

  /// g with 2g - 2 = D.(D + K); non-integral values are reported as exact
  /// rationals rather than rounded.
  Rational adjunction_genus(DivisorClass d) const;

  /// 1 + (D.D - D.K)/2, evaluated from the pairing table.
  Rational riemann_roch_chi(DivisorClass d) const;

private:
  int n_;
};

struct ClassWithGenus {
  DivisorClass cls;
  Rational genus;
};

/// All integer classes of hyperplane degree 10 over the window a in [0, 12],
/// paired with their adjunction genus. Effectivity is not decided.
std::vector<ClassWithGenus> degree10_classes(const HirzebruchSurface& s);

/// Integer roots a of 3a^2 - 21a + 18 + 2g = 0.
std::vector<long long> solve_scroll_quadratic(long long g);

/// Proper-transform bookkeeping on the cone scroll: for multiplicities
/// m in [1, m_max] and a in [0, a_max], the genus of (a - m)e + 10f.
struct TransformCandidate {
  long long a = 0;
  long long m = 0;
  Rational genus;
};
std::vector<TransformCandidate> vertex_multiplicity_scan(long long a_max, long long m_max);

/// Splitting type of a rank-4 twisted bundle: nonincreasing integer parts.
struct SplittingType {
  std::vector<int> parts;
  bool operator==(const SplittingType&) const = default;
};

/// Codimension of a splitting stratum: sum over ordered pairs of
/// max(0, a_i - a_j - 1).
int splitting_codim(const SplittingType& t);

/// All nonincreasing integer tuples of the given rank summing to `total`
/// with parts in [-2, total], paired with their codimension and sorted by
/// (codim, parts).
std::vector<std::pair<SplittingType, int>> enumerate_splittings(int total, int rank);

/// True when t*d - g + 1 > g - 1 for every genus 0 <= g <= g_max, i.e. the
/// twisted structure sheaf out-characterizes the dualizing sheaf.
bool twist_vanishing_check(long long d, long long g_max, long long t);
/// The extremes compared: (minimal left side, maximal right side).
std::pair<long long, long long> twist_vanishing_extremes(long long d, long long g_max,
                                                         long long t);

/// Degree and genus of a complete-intersection curve with the given
/// hypersurface degrees in P^ambient_dim.
struct CiCurve {
  long long degree = 0;
  Rational genus;
};
CiCurve ci_genus(const std::vector<long long>& degrees, int ambient_dim);

/// Genus of the residual to a curve of degree d_C and genus g_C inside a
/// complete intersection in P^4: g_C - (sum of degrees - 5)(d_C - d_R)/2.
/// Requires d_C + d_R = product of the degrees and d_R >= 1; non-integral
/// results are returned exactly.
Rational linkage_genus(long long g_c, long long d_c, long long d_r,
                       const std::vector<long long>& ci_degrees);

/// Lower bounds for the quintic sections of a two-component union of
/// degrees a + b = 10 meeting in length n, together with the matching
/// parameter-space caps.
struct ReducibleChiBounds {
  long long chi_union, chi_mixed, chi_planar_pair;
  long long cap_union, cap_mixed, cap_planar_pair;
};
ReducibleChiBounds reducible_chi_bounds(long long a, long long b, long long n);

/// Maximal arithmetic genus of an integral nondegenerate curve of the given
/// degree in P^n; only the two instances the analysis needs are tabulated.
long long castelnuovo_halphen_max(long long degree, int ambient_dim);

}  // namespace gincalc

#endif
