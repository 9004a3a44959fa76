#include <doctest.h>

#include "gincalc/monomial.hpp"
#include "gincalc/rng.hpp"

using namespace gincalc;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

Monomial random_monomial(Rng& rng, int arity, int max_exp) {
  std::vector<int> e;
  for (int i = 0; i < arity; ++i)
    e.push_back(static_cast<int>(rng.bounded(static_cast<std::uint64_t>(max_exp) + 1)));
  return Monomial(std::move(e));
}

}  // namespace

TEST_CASE("monomial basics") {
  Monomial a = m({2, 1, 0, 0});
  CHECK(a.degree() == 3);
  CHECK(a.arity() == 4);
  CHECK(a.max_var() == 1);
  CHECK(a.str() == "x0^2*x1");
  CHECK(Monomial::one(4).str() == "1");
  CHECK(Monomial::one(4).max_var() == -1);
  CHECK(Monomial::variable(4, 2).str() == "x2");
  CHECK(m({1, 0, 1, 0}).divides(m({2, 0, 1, 1})));
  CHECK_FALSE(m({1, 0, 2, 0}).divides(m({2, 0, 1, 1})));
  CHECK_THROWS(Monomial({1, -1}));
  CHECK_THROWS(m({1, 0}).divides(m({1, 0, 0})));
}

TEST_CASE("extension and restriction") {
  Monomial a = m({0, 1, 2});
  CHECK(a.extended(5) == m({0, 1, 2, 0, 0}));
  CHECK(a.extended(5).restricted(3) == a);
  CHECK_THROWS(m({0, 0, 1}).restricted(2));
  CHECK(a.without_var(2) == m({0, 1, 0}));
  CHECK(a.times_var(0, 2) == m({2, 1, 2}));
}

TEST_CASE("revlex order on the stated examples") {
  // higher degree wins
  CHECK(revlex_less(m({1, 1, 0, 0}), m({0, 0, 3, 0})));
  // x0^2 beats x0*x1
  CHECK(revlex_less(m({1, 1, 0, 0}), m({2, 0, 0, 0})));
  // x1*x2 beats x0*x3
  CHECK(revlex_less(m({1, 0, 0, 1}), m({0, 1, 1, 0})));
  CHECK_FALSE(revlex_less(m({2, 0, 0, 0}), m({2, 0, 0, 0})));
  CHECK_THROWS(revlex_less(m({1, 0}), m({1, 0, 0})));
}

TEST_CASE("revlex is a strict total order") {
  Rng rng(7);
  std::vector<Monomial> sample;
  for (int k = 0; k < 40; ++k) sample.push_back(random_monomial(rng, 4, 3));
  for (const Monomial& a : sample)
    for (const Monomial& b : sample) {
      if (a == b) {
        CHECK_FALSE(revlex_less(a, b));
        continue;
      }
      CHECK(revlex_less(a, b) != revlex_less(b, a));
      for (const Monomial& c : sample)
        if (revlex_less(a, b) && revlex_less(b, c)) CHECK(revlex_less(a, c));
    }
}

TEST_CASE("revlex respects multiplication") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    Monomial a = random_monomial(rng, 5, 3);
    Monomial b = random_monomial(rng, 5, 3);
    if (a == b) continue;
    int var = static_cast<int>(rng.bounded(5));
    CHECK(revlex_less(a, b) == revlex_less(a.times_var(var), b.times_var(var)));
  }
}

TEST_CASE("borel moves") {
  CHECK(borel_move(m({0, 1, 2, 0}), 0, 2) == m({1, 1, 1, 0}));
  CHECK(borel_move(m({0, 0, 3, 0}), 1, 2) == m({0, 1, 2, 0}));
  CHECK(borel_move(m({0, 0, 3, 0}), 1, 2).degree() == 3);
  CHECK_THROWS(borel_move(m({2, 0, 0, 0}), 0, 1));  // zero exponent at x1
  CHECK_THROWS(borel_move(m({0, 1, 0, 0}), 1, 1));  // i < j required
  CHECK_THROWS(borel_move(m({0, 1, 0, 0}), 1, 0));
}
