#include "gincalc/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace gincalc {

HirzebruchSurface::HirzebruchSurface(int n) : n_(n) {
  if (n != 1 && n != 3)
    throw std::invalid_argument("only the scroll surfaces F_1 and F_3 are supported");
}

Rational HirzebruchSurface::adjunction_genus(DivisorClass d) const {
  long long pairing = intersect(d, DivisorClass{d.a + canonical().a, d.b + canonical().b});
  return Rational(pairing, 2) + Rational(1);
}

Rational HirzebruchSurface::riemann_roch_chi(DivisorClass d) const {
  long long self = intersect(d, d);
  long long with_k = intersect(d, canonical());
  return Rational(1) + Rational(self - with_k, 2);
}

std::vector<ClassWithGenus> degree10_classes(const HirzebruchSurface& s) {
  std::vector<ClassWithGenus> out;
  const DivisorClass h = s.hyperplane();
  for (long long a = 0; a <= 12; ++a) {
    // h.(ae+bf) = 10 determines b linearly: a + b = 10 on F_1, b = 10 on F_3.
    long long coeff_b = h.a;  // the b-coefficient of the pairing is h.a
    long long rest = s.intersect(h, DivisorClass{a, 0});
    if ((10 - rest) % coeff_b != 0) continue;
    DivisorClass d{a, (10 - rest) / coeff_b};
    out.push_back(ClassWithGenus{d, s.adjunction_genus(d)});
  }
  return out;
}

std::vector<long long> solve_scroll_quadratic(long long g) {
  if (g < 0) throw std::invalid_argument("negative genus");
  std::vector<long long> roots;
  for (long long a = -32; a <= 32; ++a)
    if (3 * a * a - 21 * a + 18 + 2 * g == 0) roots.push_back(a);
  return roots;
}

std::vector<TransformCandidate> vertex_multiplicity_scan(long long a_max, long long m_max) {
  HirzebruchSurface f3(3);
  std::vector<TransformCandidate> out;
  for (long long a = 0; a <= a_max; ++a)
    for (long long m = 1; m <= std::min(m_max, a); ++m)
      out.push_back(TransformCandidate{a, m, f3.adjunction_genus(DivisorClass{a - m, 10})});
  return out;
}

int splitting_codim(const SplittingType& t) {
  int codim = 0;
  for (size_t i = 0; i < t.parts.size(); ++i)
    for (size_t j = 0; j < t.parts.size(); ++j)
      if (i != j) codim += std::max(0, t.parts[i] - t.parts[j] - 1);
  return codim;
}

namespace {

void splittings_rec(int total, int rank, int max_part, std::vector<int>& cur,
                    std::vector<SplittingType>& out) {
  if (rank == 0) {
    if (total == 0) out.push_back(SplittingType{cur});
    return;
  }
  for (int v = std::min(max_part, total + 2 * (rank - 1)); v >= -2; --v) {
    if (total - v > (rank - 1) * v) continue;  // remaining parts are at most v
    cur.push_back(v);
    splittings_rec(total - v, rank - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::pair<SplittingType, int>> enumerate_splittings(int total, int rank) {
  if (rank < 1 || total < rank) throw std::invalid_argument("bad splitting shape");
  std::vector<SplittingType> types;
  std::vector<int> cur;
  splittings_rec(total, rank, total, cur, types);
  std::vector<std::pair<SplittingType, int>> out;
  out.reserve(types.size());
  for (SplittingType& t : types) out.emplace_back(std::move(t), 0);
  for (auto& [t, c] : out) c = splitting_codim(t);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return x.first.parts > y.first.parts;
  });
  return out;
}

bool twist_vanishing_check(long long d, long long g_max, long long t) {
  for (long long g = 0; g <= g_max; ++g)
    if (!(t * d - g + 1 > g - 1)) return false;
  return true;
}

std::pair<long long, long long> twist_vanishing_extremes(long long d, long long g_max,
                                                         long long t) {
  return {t * d - g_max + 1, g_max - 1};
}

CiCurve ci_genus(const std::vector<long long>& degrees, int ambient_dim) {
  if (static_cast<int>(degrees.size()) != ambient_dim - 1)
    throw std::invalid_argument("a curve needs ambient_dim - 1 hypersurfaces");
  long long d = 1, sum = 0;
  for (long long k : degrees) {
    if (k < 1) throw std::invalid_argument("degrees must be positive");
    d *= k;
    sum += k;
  }
  CiCurve out;
  out.degree = d;
  out.genus = Rational(d * (sum - ambient_dim - 1), 2) + Rational(1);
  return out;
}

Rational linkage_genus(long long g_c, long long d_c, long long d_r,
                       const std::vector<long long>& ci_degrees) {
  if (d_r < 1) throw std::invalid_argument("residual degree must be positive");
  long long prod = 1, sum = 0;
  for (long long k : ci_degrees) {
    prod *= k;
    sum += k;
  }
  if (d_c + d_r != prod)
    throw std::invalid_argument("degrees do not add up to the complete intersection");
  return Rational(g_c) - Rational((sum - 5) * (d_c - d_r), 2);
}

ReducibleChiBounds reducible_chi_bounds(long long a, long long b, long long n) {
  if (a + b != 10) throw std::invalid_argument("component degrees must sum to 10");
  if (n < 1) throw std::invalid_argument("intersection length must be positive");
  ReducibleChiBounds out{};
  out.chi_union = 5 * (a + b) + 2 - n;
  out.chi_mixed = 21 + 5 * a - n;
  out.chi_planar_pair = 40 - n;
  out.cap_union = 5 * (a + b) + 1 - n;
  out.cap_mixed = 20 + 5 * a - n;
  out.cap_planar_pair = 39 - n;
  return out;
}

long long castelnuovo_halphen_max(long long degree, int ambient_dim) {
  if (degree == 10 && ambient_dim == 4) return 9;
  if (degree == 4 && ambient_dim == 3) return 1;
  throw std::invalid_argument("genus bound tabulated only for the instances in use");
}

}  // namespace gincalc
