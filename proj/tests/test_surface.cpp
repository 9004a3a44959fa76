#include <doctest.h>

#include <algorithm>

#include "gincalc/surface.hpp"

using namespace gincalc;

TEST_CASE("pairing tables") {
  HirzebruchSurface f1(1), f3(3);
  CHECK(f1.intersect({1, 0}, {1, 0}) == -1);
  CHECK(f1.intersect({1, 0}, {0, 1}) == 1);
  CHECK(f1.intersect({0, 1}, {0, 1}) == 0);
  CHECK(f3.intersect({1, 0}, {1, 0}) == -3);
  CHECK(f1.intersect({1, 2}, {3, 7}) == 10);
  for (long long a = 0; a <= 5; ++a)
    CHECK(f3.intersect(f3.hyperplane(), {a, 10}) == 10);
  CHECK_THROWS(HirzebruchSurface(2));
}

TEST_CASE("adjunction genus") {
  HirzebruchSurface f1(1);
  CHECK(f1.adjunction_genus({0, 1}) == Rational(0));  // fibre
  CHECK(f1.adjunction_genus({1, 2}) == Rational(0));  // hyperplane section
  CHECK(f1.adjunction_genus({3, 7}) == Rational(9));
  CHECK(f1.adjunction_genus({4, 6}) == Rational(9));
  // matches the expanded quadratic a^2 - 2ab + a + 2b + 2g - 2 = 0
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 12; ++b) {
      Rational g = f1.adjunction_genus({a, b});
      Rational residue = Rational(a * a - 2 * a * b + a + 2 * b - 2) + g * Rational(2);
      CHECK(residue == Rational(0));
    }
}

TEST_CASE("riemann-roch characteristics") {
  HirzebruchSurface f1(1), f3(3);
  CHECK(f1.riemann_roch_chi({0, 0}) == Rational(1));
  CHECK(f1.riemann_roch_chi({1, 1}) == Rational(3));
  CHECK(f1.riemann_roch_chi({3, 7}) == Rational(26));
  CHECK(f1.riemann_roch_chi({4, 6}) == Rational(25));
  CHECK(f3.riemann_roch_chi({4, 10}) == Rational(25));
  CHECK(f3.riemann_roch_chi({5, 10}) == Rational(21));
}

TEST_CASE("integrality across the window") {
  for (int n : {1, 3}) {
    HirzebruchSurface s(n);
    for (long long a = -10; a <= 10; ++a)
      for (long long b = -10; b <= 20; ++b) {
        DivisorClass d{a, b};
        CHECK(s.riemann_roch_chi(d).is_integer());
        CHECK((s.intersect(d, d) + s.intersect(d, s.canonical())) % 2 == 0);
      }
  }
}

TEST_CASE("degree-10 classes") {
  std::vector<ClassWithGenus> on_f1 = degree10_classes(HirzebruchSurface(1));
  auto has = [](const std::vector<ClassWithGenus>& v, DivisorClass d, long long g) {
    return std::any_of(v.begin(), v.end(), [&](const ClassWithGenus& c) {
      return c.cls == d && c.genus == Rational(g);
    });
  };
  CHECK(has(on_f1, {3, 7}, 9));
  CHECK(has(on_f1, {4, 6}, 9));
  std::vector<ClassWithGenus> on_f3 = degree10_classes(HirzebruchSurface(3));
  CHECK(has(on_f3, {3, 10}, 9));
  for (const auto& list : {on_f1, on_f3})
    for (const ClassWithGenus& c : list) CHECK(c.genus != Rational(8));
}

TEST_CASE("scroll genus equation") {
  CHECK(solve_scroll_quadratic(9) == std::vector<long long>{3, 4});
  CHECK(solve_scroll_quadratic(8).empty());
  CHECK(solve_scroll_quadratic(0) == std::vector<long long>{1, 6});
  CHECK_THROWS(solve_scroll_quadratic(-1));
  // agreement with the class enumeration on the smooth scroll
  std::vector<ClassWithGenus> on_f1 = degree10_classes(HirzebruchSurface(1));
  for (long long g = 0; g <= 9; ++g) {
    std::vector<long long> from_classes;
    for (const ClassWithGenus& c : on_f1)
      if (c.genus == Rational(g)) from_classes.push_back(c.cls.a);
    std::sort(from_classes.begin(), from_classes.end());
    CHECK(from_classes == solve_scroll_quadratic(g));
  }
}

TEST_CASE("vertex transforms on the cone scroll") {
  bool has8 = false;
  std::vector<long long> at9;
  for (const TransformCandidate& c : vertex_multiplicity_scan(12, 12)) {
    if (c.genus == Rational(8)) has8 = true;
    if (c.genus == Rational(9)) at9.push_back(c.a - c.m);
  }
  CHECK_FALSE(has8);
  std::sort(at9.begin(), at9.end());
  at9.erase(std::unique(at9.begin(), at9.end()), at9.end());
  CHECK(at9 == std::vector<long long>{3, 4});
}

TEST_CASE("splitting codimensions") {
  CHECK(splitting_codim(SplittingType{{4, 3, 2, 1}}) == 4);
  CHECK(splitting_codim(SplittingType{{3, 3, 2, 2}}) == 0);
  CHECK(splitting_codim(SplittingType{{3, 3, 3, 1}}) == 3);
  CHECK(splitting_codim(SplittingType{{4, 2, 2, 2}}) == 3);
}

TEST_CASE("splitting enumeration") {
  std::vector<std::pair<SplittingType, int>> all = enumerate_splittings(10, 4);
  int balanced = 0;
  bool has_4321 = false;
  for (const auto& [t, codim] : all) {
    CHECK(std::is_sorted(t.parts.rbegin(), t.parts.rend()));
    CHECK(codim == splitting_codim(t));
    if (codim == 0) ++balanced;
    if (t == SplittingType{{4, 3, 2, 1}}) {
      has_4321 = true;
      CHECK(codim == 4);
    }
  }
  CHECK(balanced == 1);
  CHECK(all.front().first == SplittingType{{3, 3, 2, 2}});
  CHECK(has_4321);
  // balanced types have codimension zero for every small rank
  for (int rank = 1; rank <= 6; ++rank)
    for (int total = rank; total <= 14; ++total) {
      std::vector<int> parts;
      for (int i = 0; i < rank; ++i) parts.push_back(total / rank + (i < total % rank));
      std::sort(parts.rbegin(), parts.rend());
      CHECK(splitting_codim(SplittingType{parts}) == 0);
    }
}

TEST_CASE("twist vanishing") {
  CHECK(twist_vanishing_check(10, 9, 5));
  CHECK(twist_vanishing_extremes(10, 9, 5) == std::pair<long long, long long>{42, 8});
  CHECK_FALSE(twist_vanishing_check(10, 9, 0));
  CHECK(twist_vanishing_check(4, 0, 1));
  // monotone in the twist, antitone in the genus window
  for (long long t = 1; t <= 6; ++t)
    if (twist_vanishing_check(10, 9, t)) CHECK(twist_vanishing_check(10, 9, t + 1));
  for (long long g = 1; g <= 9; ++g)
    if (!twist_vanishing_check(10, g, 0)) CHECK_FALSE(twist_vanishing_check(10, g + 1, 0));
}

TEST_CASE("complete intersection genera") {
  CiCurve x = ci_genus({2, 2, 3}, 4);
  CHECK(x.degree == 12);
  CHECK(x.genus == Rational(13));
  CiCurve line = ci_genus({1, 1, 1}, 4);
  CHECK(line.degree == 1);
  CHECK(line.genus == Rational(0));
  CiCurve quartic = ci_genus({2, 2}, 3);
  CHECK(quartic.degree == 4);
  CHECK(quartic.genus == Rational(1));
  CHECK_THROWS(ci_genus({2, 2}, 4));
}

TEST_CASE("linkage genus") {
  CHECK(linkage_genus(8, 10, 2, {2, 2, 3}) == Rational(0));
  CHECK(linkage_genus(5, 6, 6, {2, 2, 3}) == Rational(5));  // self-linkage
  CHECK_THROWS(linkage_genus(13, 12, 0, {2, 2, 3}));
  CHECK_THROWS(linkage_genus(8, 9, 2, {2, 2, 3}));
  // parity failures surface as non-integers instead of rounding
  Rational odd = linkage_genus(0, 5, 4, {3, 3});
  CHECK_FALSE(odd.is_integer());
}

TEST_CASE("reducible chi bounds") {
  ReducibleChiBounds a = reducible_chi_bounds(5, 5, 1);
  CHECK(a.chi_union == 51);
  CHECK(a.cap_union == 50);
  ReducibleChiBounds b = reducible_chi_bounds(2, 8, 7);
  CHECK(b.chi_union == 45);
  CHECK_THROWS(reducible_chi_bounds(5, 5, 0));
  CHECK_THROWS(reducible_chi_bounds(5, 6, 1));
}

TEST_CASE("castelnuovo lookups") {
  CHECK(castelnuovo_halphen_max(10, 4) == 9);
  CHECK(castelnuovo_halphen_max(4, 3) == 1);
  CHECK_THROWS(castelnuovo_halphen_max(7, 4));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(57, 2).str() == "57/2");
  CHECK(Rational(4, 2) == Rational(2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
  CHECK((Rational(1) / Rational(1, 7)) == Rational(7));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(5, 2) > Rational(2));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(3, 2).as_integer());
  CHECK(Rational(6, 2).as_integer() == 3);
  // overflow of the reduced result is an error, never a wrap
  Rational huge(1LL << 62);
  CHECK_THROWS_AS(huge * Rational(4), std::overflow_error);
  CHECK((huge * Rational(1, 1LL << 60)) == Rational(4));
}
