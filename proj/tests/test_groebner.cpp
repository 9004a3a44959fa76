#include <doctest.h>

#include "gincalc/fp.hpp"
#include "gincalc/gin_lab.hpp"
#include "gincalc/groebner.hpp"
#include "gincalc/hilbert.hpp"
#include "gincalc/rational.hpp"
#include "gincalc/rng.hpp"

using namespace gincalc;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

Polynomial<Fp> poly(std::uint32_t p, std::vector<std::pair<std::vector<int>, long long>> terms) {
  Polynomial<Fp> out(static_cast<int>(terms.front().first.size()));
  for (auto& [e, c] : terms) out.add_term(Monomial(e), Fp(c, p));
  return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const std::uint32_t p = 32003;
  Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    Fp a(static_cast<long long>(rng.bounded(p)), p);
    Fp b(static_cast<long long>(rng.bounded(p)), p);
    Fp c(static_cast<long long>(rng.bounded(p)), p);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Fp(0, p));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Fp(1, p));
      CHECK(a / a == Fp(1, p));
    }
  }
  CHECK(Fp(-1, p) == Fp(p - 1, p));
  CHECK_THROWS(Fp(0, p).inverse());
  CHECK_THROWS(Fp(1, 7) + Fp(1, 11));
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(32001));
}

TEST_CASE("polynomial arithmetic keeps revlex leading terms") {
  const std::uint32_t p = 101;
  Polynomial<Fp> f = poly(p, {{{5, 0, 0, 0, 0}, 1}, {{1, 0, 4, 0, 0}, 2}});
  CHECK(f.leading_monomial() == m({5, 0, 0, 0, 0}));
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 5);
  Polynomial<Fp> g = poly(p, {{{0, 0, 0, 5, 0}, 1}, {{0, 0, 4, 1, 0}, 3}});
  CHECK(g.leading_monomial() == m({0, 0, 4, 1, 0}));
  Polynomial<Fp> sum = f + g - f;
  CHECK(sum == g);
  CHECK((f - f).is_zero());
  Polynomial<Fp> prod = f * g;
  CHECK(prod.degree() == 10);
  CHECK(prod.is_homogeneous());
  CHECK(f.monic().leading_coeff() == Fp(1, p));
}

TEST_CASE("normal form and membership") {
  const std::uint32_t p = 101;
  std::vector<Polynomial<Fp>> basis{
      poly(p, {{{0, 0, 0, 1, 0}, 1}}),   // x3
      poly(p, {{{0, 0, 0, 0, 1}, 1}}),   // x4
      poly(p, {{{5, 0, 0, 0, 0}, 1}})};  // x0^5
  Polynomial<Fp> inside = poly(p, {{{5, 1, 0, 0, 0}, 3}, {{0, 2, 0, 1, 0}, 4}});
  CHECK(normal_form(inside, basis).is_zero());
  Polynomial<Fp> outside = poly(p, {{{0, 3, 0, 0, 0}, 1}});
  CHECK(normal_form(outside, basis) == outside);
}

TEST_CASE("buchberger on trivial inputs") {
  const std::uint32_t p = 101;
  std::vector<Polynomial<Fp>> single{poly(p, {{{0, 2, 1, 0}, 5}})};
  GroebnerBasis<Fp> gb = buchberger(single);
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0].leading_monomial() == m({0, 2, 1, 0}));
  CHECK(gb.elements[0].leading_coeff() == Fp(1, p));
  CHECK_THROWS(buchberger(std::vector<Polynomial<Fp>>{
      poly(p, {{{1, 0, 0, 0}, 1}, {{2, 0, 0, 0}, 1}})}));  // inhomogeneous
}

TEST_CASE("twisted cubic basis against the rank oracle") {
  auto gens = rational_normal_curve_ideal(3, kDefaultPrime);
  REQUIRE(gens.size() == 3);
  GroebnerBasis<Fp> gb = buchberger(gens, 8);
  MonomialIdeal in_b = initial_ideal(gb);
  MonomialIdeal in_m = initial_ideal_by_linear_algebra(gens, 8, Fp(1, kDefaultPrime));
  CHECK(in_b == in_m);
  CHECK(in_b == MonomialIdeal(4, {m({0, 2, 0, 0}), m({0, 1, 1, 0}), m({0, 0, 2, 0})}));
  // graded dimensions of the ideal and its initial ideal agree (degrees 2, 3)
  for (int t = 2; t <= 3; ++t)
    CHECK(graded_ideal_dim(gens, t, Fp(1, kDefaultPrime)) == graded_piece_dim(in_b, t));
}

TEST_CASE("every s-pair of a finished basis reduces to zero") {
  auto check_spairs = [](const GroebnerBasis<Fp>& gb) {
    for (size_t i = 0; i < gb.elements.size(); ++i)
      for (size_t j = i + 1; j < gb.elements.size(); ++j) {
        Polynomial<Fp> s = s_polynomial(gb.elements[i], gb.elements[j]);
        if (gb.degree_cap &&
            detail::monomial_lcm(gb.elements[i].leading_monomial(),
                                 gb.elements[j].leading_monomial())
                    .degree() > *gb.degree_cap)
          continue;
        CHECK(normal_form(s, gb.elements).is_zero());
      }
  };
  check_spairs(buchberger(rational_normal_curve_ideal(3, kDefaultPrime)));
  check_spairs(buchberger(rational_normal_curve_ideal(4, kDefaultPrime)));
}

TEST_CASE("macaulay agreement for the quartic minors") {
  auto gens = rational_normal_curve_ideal(4, kDefaultPrime);
  GroebnerBasis<Fp> gb = buchberger(gens, 6);
  MonomialIdeal in = initial_ideal(gb);
  for (int t = 0; t <= 6; ++t)
    CHECK(graded_ideal_dim(gens, t, Fp(1, kDefaultPrime)) == graded_piece_dim(in, t));
}

TEST_CASE("initial ideal of a monomial ideal is itself") {
  const std::uint32_t p = kDefaultPrime;
  std::vector<Polynomial<Fp>> gens{poly(p, {{{2, 0, 0, 0}, 1}}),
                                   poly(p, {{{0, 1, 1, 0}, 7}})};
  CHECK(initial_ideal(buchberger(gens)) ==
        MonomialIdeal(4, {m({2, 0, 0, 0}), m({0, 1, 1, 0})}));
}

TEST_CASE("exact rational instantiation reproduces the prime-field route") {
  // spot audit over the rationals on the twisted cubic
  auto rat = [](std::vector<std::pair<std::vector<int>, long long>> terms) {
    Polynomial<Rational> out(4);
    for (auto& [e, c] : terms) out.add_term(Monomial(e), Rational(c));
    return out;
  };
  std::vector<Polynomial<Rational>> gens{
      rat({{{1, 0, 1, 0}, 1}, {{0, 2, 0, 0}, -1}}),
      rat({{{1, 0, 0, 1}, 1}, {{0, 1, 1, 0}, -1}}),
      rat({{{0, 1, 0, 1}, 1}, {{0, 0, 2, 0}, -1}})};
  GroebnerBasis<Rational> gb = buchberger(gens, 8);
  CHECK(initial_ideal(gb) ==
        MonomialIdeal(4, {m({0, 2, 0, 0}), m({0, 1, 1, 0}), m({0, 0, 2, 0})}));
  for (const Polynomial<Rational>& g : gb.elements)
    CHECK(g.leading_coeff() == Rational(1));
}

TEST_CASE("row reduction and null spaces") {
  const std::uint32_t p = 101;
  auto fp = [&](long long v) { return Fp(v, p); };
  std::vector<std::vector<Fp>> mat{{fp(1), fp(2), fp(3)},
                                   {fp(2), fp(4), fp(6)},
                                   {fp(0), fp(1), fp(1)}};
  std::vector<std::vector<Fp>> kernel = null_space(mat, fp(0));
  REQUIRE(kernel.size() == 1);
  // the kernel vector solves the system
  for (const auto& row : mat) {
    Fp acc = fp(0);
    for (size_t j = 0; j < row.size(); ++j) acc = acc + row[j] * kernel[0][j];
    CHECK(acc.is_zero());
  }
  CHECK(row_reduce(mat) == 2);
  std::vector<std::vector<Fp>> id{{fp(1), fp(0)}, {fp(3), fp(1)}};
  CHECK(is_invertible(id));
  std::vector<std::vector<Fp>> sing{{fp(1), fp(2)}, {fp(2), fp(4)}};
  CHECK_FALSE(is_invertible(sing));
}
