#include <doctest.h>

#include "dissect/matrix.hpp"

using namespace dissect;

namespace {

// Small deterministic generator for property tests.
struct Lcg {
  std::uint64_t state = 0x243f6a8885a308d3ull;
  int next(int lo, int hi) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + static_cast<int>((state >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

Matrix random_matrix(Lcg& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.next(-4, 4);
  return m;
}

Matrix random_invertible(Lcg& rng, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (m.rank() == n) return m;
  }
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(Matrix::identity(4).rank() == 4);
  CHECK(Matrix(3, 5).rank() == 0);
}

TEST_CASE("kernel basics") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix(4, 4)) == Subspace::full(4));
}

TEST_CASE("rank plus kernel dimension equals column count") {
  Lcg rng;
  for (int it = 0; it < 20; ++it) {
    std::size_t r = 1 + it % 5, c = 1 + (it * 3) % 6;
    Matrix m = random_matrix(rng, r, c);
    CHECK(m.rank() + kernel(m).dim() == c);
  }
}

TEST_CASE("subspace intersection and sum") {
  Subspace s = Subspace::span(4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(intersect(s, s) == s);
  Subspace t = Subspace::span(4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(intersect(s, t).dim() == 0);
  CHECK(sum_span(s, t) == Subspace::full(4));
}

TEST_CASE("dimension formula") {
  Lcg rng;
  for (int it = 0; it < 20; ++it) {
    std::size_t n = 3 + it % 4;
    std::vector<Vec> rows1, rows2;
    for (int k = 0; k < 2 + it % 3; ++k) {
      Vec v(n), w(n);
      for (std::size_t j = 0; j < n; ++j) {
        v[j] = rng.next(-3, 3);
        w[j] = rng.next(-3, 3);
      }
      rows1.push_back(v);
      rows2.push_back(w);
    }
    Subspace a = Subspace::span(n, rows1), b = Subspace::span(n, rows2);
    CHECK(intersect(a, b).dim() + sum_span(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("solve") {
  Matrix m(2, 2, {1, 2, 3, 4});
  auto x = solve(m, {5, 11});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 2);
  Matrix sing(2, 2, {1, 1, 1, 1});
  CHECK(!solve(sing, {0, 1}).has_value());
}

TEST_CASE("rref is canonical") {
  Matrix a(2, 3, {1, 2, 3, 2, 4, 7});
  Matrix b(2, 3, {3, 6, 10, 1, 2, 4});
  CHECK(a.rref() == b.rref());  // same row space, same canonical form
}

TEST_CASE("inverse") {
  Matrix m(2, 2, {2, 1, 1, 1});
  auto inv = m.inverse();
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(2));
  CHECK(!Matrix(2, 2).inverse().has_value());
}

TEST_CASE("signature of diagonal matrices") {
  Inertia s = signature(Matrix::diagonal({1, 1, -1, -1, -1}));
  CHECK(s == Inertia{2, 3, 0});
  CHECK(signature(Matrix(3, 3)) == Inertia{0, 0, 3});
}

TEST_CASE("signature invariant under congruence") {
  Lcg rng;
  Matrix m = Matrix::diagonal({3, 1, 0, -2, -5});
  Inertia expect = signature(m);
  for (int it = 0; it < 10; ++it) {
    Matrix p = random_invertible(rng, 5);
    CHECK(signature(p.transposed() * m * p) == expect);
  }
}

TEST_CASE("primitive vectors") {
  Vec v{Rational(-2, 3), Rational(4, 3), 0};
  Vec p = primitive(v);
  CHECK(p == Vec{1, -2, 0});
  CHECK(primitive(Vec{0, Rational(1, 2)}) == Vec{0, 1});
}

TEST_CASE("rational square detection") {
  Rational root;
  CHECK(is_rational_square(Rational(9, 4), &root));
  CHECK(root == Rational(3, 2));
  CHECK(!is_rational_square(Rational(2), nullptr));
  CHECK(!is_rational_square(Rational(-1), nullptr));
  CHECK(is_rational_square(Rational(0), &root));
  CHECK(root == 0);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
}
