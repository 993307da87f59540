#include <doctest.h>

#include "dissect/catalog.hpp"
#include "dissect/lie_algebra.hpp"
#include "dissect/polynomial.hpp"

using namespace dissect;

TEST_CASE("sl2r bracket relations") {
  AlgebraPtr g = catalog::sl2r();
  Vec h = unit_vec(3, 0), e = unit_vec(3, 1), f = unit_vec(3, 2);
  CHECK(g->bracket(h, e) == scale(e, 2));
  CHECK(g->bracket(h, f) == scale(f, -2));
  CHECK(g->bracket(e, f) == h);
  CHECK(is_zero(g->bracket(h, h)));
}

TEST_CASE("su2 bracket relations") {
  AlgebraPtr g = catalog::su2();
  Vec u1 = unit_vec(3, 0), u2 = unit_vec(3, 1), u3 = unit_vec(3, 2);
  CHECK(g->bracket(u1, u2) == scale(u3, 2));
  CHECK(g->bracket(u2, u3) == scale(u1, 2));
  CHECK(g->bracket(u3, u1) == scale(u2, 2));
}

TEST_CASE("element bracket rejects mixed algebras") {
  Element x{catalog::sl2r(), unit_vec(3, 0)};
  Element y{catalog::su2(), unit_vec(3, 0)};
  CHECK_THROWS(bracket(x, y));
}

TEST_CASE("ad spectra via minimal polynomials") {
  AlgebraPtr g = catalog::sl2r();
  CHECK(g->ad(zero_vec(3)).is_zero());
  CHECK(min_poly(g->ad(unit_vec(3, 0))) == Polynomial{0, -4, 0, 1});  // t(t-2)(t+2)
  CHECK(min_poly(g->ad(unit_vec(3, 1))) == Polynomial{0, 0, 0, 1});   // t^3
  AlgebraPtr k = catalog::su2();
  CHECK(min_poly(k->ad(unit_vec(3, 0))) == Polynomial{0, 4, 0, 1});   // t(t^2+4)
}

TEST_CASE("killing forms") {
  catalog::SoAlgebra so3 = catalog::so(3, 0);
  CHECK(signature(so3.algebra->killing()) == Inertia{0, 3, 0});
  catalog::SoAlgebra so12 = catalog::so(1, 2);
  CHECK(signature(so12.algebra->killing()) == Inertia{2, 1, 0});
  catalog::SoAlgebra so23 = catalog::so(2, 3);
  CHECK(signature(so23.algebra->killing()) == Inertia{6, 4, 0});
}

TEST_CASE("killing associativity on basis triples") {
  AlgebraPtr g = catalog::so(2, 2).algebra;
  Matrix k = g->killing();
  std::size_t n = g->dim();
  auto kf = [&](const Vec& x, const Vec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * k.at(i, j) * y[j];
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        Vec bi = unit_vec(n, i), bj = unit_vec(n, j), bl = unit_vec(n, l);
        CHECK(kf(g->bracket(bi, bj), bl) == kf(bi, g->bracket(bj, bl)));
      }
}

TEST_CASE("semisimplicity") {
  CHECK(catalog::sl2r()->is_semisimple());
  CHECK(catalog::so(4, 0).algebra->is_semisimple());
  CHECK(!catalog::so(2, 0).algebra->is_semisimple());  // 1-dim abelian
}

TEST_CASE("center, centralizer, derived") {
  AlgebraPtr g = catalog::sl2r();
  CHECK(center(*g).dim() == 0);
  CHECK(centralizer(*g, Subspace::full(3)) == center(*g));
  AlgebraPtr so3 = catalog::so(3, 0).algebra;
  CHECK(derived(*so3) == Subspace::full(3));
  CHECK(is_ideal(*so3, Subspace::full(3)));
  CHECK(!is_ideal(*so3, Subspace::span(3, {unit_vec(3, 0)})));
}

TEST_CASE("direct sum") {
  AlgebraPtr g = direct_sum(*catalog::sl2r(), *catalog::sl2r());
  CHECK(g->dim() == 6);
  // Cross brackets vanish.
  CHECK(is_zero(g->bracket(unit_vec(6, 0), unit_vec(6, 4))));
  AlgebraPtr k = direct_sum(*catalog::su2(), *catalog::su2());
  CHECK(signature(k->killing()) == Inertia{0, 6, 0});
}

TEST_CASE("change of basis preserves invariants") {
  AlgebraPtr g = catalog::so(3, 0).algebra;
  Matrix p(3, 3, {1, 2, 0, 0, 1, 1, 1, 0, 3});
  AlgebraPtr h = change_basis(*g, p);
  CHECK(signature(h->killing()) == Inertia{0, 3, 0});
  CHECK(centroid(*h).size() == centroid(*g).size());
  AlgebraPtr same = change_basis(*g, Matrix::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(same->structure(i, j) == g->structure(i, j));
  CHECK_THROWS(change_basis(*g, Matrix(3, 3)));
}

TEST_CASE("centroid dimensions") {
  CHECK(centroid(*catalog::sl2r()).size() == 1);
  CHECK(centroid(*catalog::sl2c_real()).size() == 2);
  CHECK(centroid(*direct_sum(*catalog::su2(), *catalog::su2())).size() == 2);
}

TEST_CASE("simple ideals") {
  AlgebraPtr g = catalog::sl2r();
  auto ideals = simple_ideals(*g);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0] == Subspace::full(3));

  AlgebraPtr so4 = catalog::so(4, 0).algebra;
  ideals = simple_ideals(*so4);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 3);
  CHECK(ideals[1].dim() == 3);
  CHECK(sum_span(ideals[0], ideals[1]) == Subspace::full(6));
  for (const auto& x : ideals[0].basis())
    for (const auto& y : ideals[1].basis()) CHECK(is_zero(so4->bracket(x, y)));

  ideals = simple_ideals(*catalog::sl2c_real());
  CHECK(ideals.size() == 1);

  CHECK_THROWS(simple_ideals(*catalog::so(2, 0).algebra));
}

TEST_CASE("complex-simple detection") {
  CHECK(!is_complex_simple(*catalog::sl2r()));
  CHECK(!is_complex_simple(*catalog::su2()));
  CHECK(is_complex_simple(*catalog::sl2c_real()));
}

TEST_CASE("constructor rejects bad structure constants") {
  // [b1, b2] = b1 but [b2, b1] = 0 violates antisymmetry.
  std::vector<std::vector<Vec>> c(2, std::vector<Vec>(2, zero_vec(2)));
  c[0][1] = unit_vec(2, 0);
  CHECK_THROWS(LieAlgebra({"a", "b"}, c));
}

TEST_CASE("subalgebra on a closed subspace") {
  AlgebraPtr so4 = catalog::so(4, 0).algebra;
  auto ideals = simple_ideals(*so4);
  AlgebraPtr piece = subalgebra(*so4, ideals[0]);
  CHECK(piece->dim() == 3);
  CHECK(signature(piece->killing()) == Inertia{0, 3, 0});
  CHECK_THROWS(subalgebra(*so4, Subspace::span(6, {unit_vec(6, 0), unit_vec(6, 1)})));
}
