#include <doctest.h>

#include "dissect/polynomial.hpp"

using namespace dissect;

namespace {

Polynomial t_pow(unsigned k) {
  std::vector<Rational> c(k + 1, 0);
  c[k] = 1;
  return Polynomial(c);
}

}  // namespace

TEST_CASE("char and min poly of the identity") {
  Matrix id = Matrix::identity(2);
  CHECK(char_poly(id) == Polynomial{1, -2, 1});  // (t-1)^2
  CHECK(min_poly(id) == Polynomial{-1, 1});      // t-1
}

TEST_CASE("char poly annihilates (Cayley-Hamilton)") {
  Matrix m(3, 3, {0, 1, 2, -1, 3, 0, 2, 2, 1});
  CHECK(char_poly(m).eval(m).is_zero());
  CHECK(min_poly(m).eval(m).is_zero());
  CHECK(min_poly(m).divides(char_poly(m)));
}

TEST_CASE("min poly of a nilpotent matrix") {
  Matrix n(3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(min_poly(n) == t_pow(3));
}

TEST_CASE("squarefree") {
  CHECK(squarefree(Polynomial{-1, 0, 1}));   // t^2 - 1
  CHECK(!squarefree(Polynomial{0, 0, 1}));   // t^2
  CHECK(squarefree(Polynomial{0, -1, 0, 1}));  // t^3 - t
}

TEST_CASE("factor_rational small cases") {
  auto f = factor_rational(Polynomial{-1, 0, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == Polynomial{-1, 1});
  CHECK(f.factors[1].first == Polynomial{1, 1});

  f = factor_rational(Polynomial{1, 0, 1});
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first == Polynomial{1, 0, 1});

  f = factor_rational(Polynomial{0, -1, 0, 1});  // t^3 - t
  CHECK(f.factors.size() == 3);
}

TEST_CASE("factorization re-multiplies to the input") {
  std::vector<Polynomial> samples = {
      Polynomial{0, -4, 0, 1},                      // t^3 - 4t
      Polynomial{Rational(1, 2), 0, Rational(3, 2), 0, 1},
      Polynomial{6, 11, 6, 1},                      // (t+1)(t+2)(t+3)
      Polynomial{4, 0, 4, 0, 1},                    // (t^2+2)^2
      Polynomial{-2, 0, 1} * Polynomial{-3, 0, 1},  // (t^2-2)(t^2-3)
  };
  for (const auto& p : samples) {
    auto f = factor_rational(p);
    Polynomial prod = Polynomial::constant(f.unit);
    for (const auto& [fac, mult] : f.factors) {
      CHECK(fac.lead() > 0);
      for (unsigned k = 0; k < mult; ++k) prod = prod * fac;
    }
    CHECK(prod == p);
  }
}

TEST_CASE("irreducibility of quartics without rational roots") {
  // (t^2-2)(t^2-3) must not be reported irreducible.
  auto f = factor_rational(Polynomial{-2, 0, 1} * Polynomial{-3, 0, 1});
  CHECK(f.factors.size() == 2);
  // t^4 + 1 is irreducible over the rationals.
  f = factor_rational(Polynomial{1, 0, 0, 0, 1});
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].first.degree() == 4);
}

TEST_CASE("sturm counting") {
  auto inf = ExtRational::pos_inf();
  auto ninf = ExtRational::neg_inf();
  CHECK(sturm_count(Polynomial{-2, 0, 1}, ninf, inf) == 2);
  CHECK(sturm_count(Polynomial{1, 0, 1}, ninf, inf) == 0);
  CHECK(sturm_count(Polynomial{0, -1, 0, 1}, ExtRational::at(0), inf) == 1);
  CHECK(sturm_count(Polynomial{0, -1, 0, 1}, ninf, ExtRational::at(0)) == 2);  // (a, b]
  CHECK_THROWS(sturm_count(Polynomial{0, 0, 1}, ninf, inf));
}

TEST_CASE("root square polynomial") {
  // Roots square: t^2 - 2 -> (s-2)^2 up to unit.
  Polynomial q = root_square_poly(Polynomial{-2, 0, 1});
  CHECK(q.monic() == Polynomial{4, -4, 1});
  q = root_square_poly(Polynomial{1, 0, 1});
  CHECK(q.monic() == Polynomial{1, 2, 1});
  CHECK(root_square_poly(Polynomial{0, 1}).monic() == Polynomial{0, 1});
  // Rational-root transport: lambda root of p => lambda^2 root of output.
  Polynomial p{0, -1, 0, 1};  // roots 0, 1, -1
  q = root_square_poly(p);
  CHECK(q.eval(Rational(0)) == 0);
  CHECK(q.eval(Rational(1)) == 0);
  CHECK(q.degree() == p.degree());
}

TEST_CASE("polynomial division") {
  Polynomial p{6, 11, 6, 1};
  auto [quo, rem] = p.divmod(Polynomial{1, 1});
  CHECK(rem.is_zero());
  CHECK(quo == Polynomial{6, 5, 1});
  CHECK(Polynomial{1, 1}.divides(p));
  CHECK(!Polynomial{-5, 1}.divides(p));
}

TEST_CASE("gcd") {
  Polynomial a = Polynomial{-1, 1} * Polynomial{1, 1};
  Polynomial b = Polynomial{-1, 1} * Polynomial{2, 1};
  CHECK(gcd(a, b).monic() == Polynomial{-1, 1});
}
