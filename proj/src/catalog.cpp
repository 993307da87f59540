#include "dissect/catalog.hpp"

#include <stdexcept>

namespace dissect {
namespace catalog {

SoAlgebra so(std::size_t p, std::size_t q) {
  std::size_t n = p + q;
  if (n < 2) throw std::invalid_argument("so(p,q): p + q must be at least 2");
  SoAlgebra a;
  a.p = p;
  a.q = q;
  for (std::size_t k = 0; k < n; ++k) a.eps.push_back(k < p ? 1 : -1);
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix b(n, n);
      b.at(i, j) = 1;
      b.at(j, i) = -a.eps[i] * a.eps[j];
      mats.push_back(std::move(b));
      a.pairs.emplace_back(i, j);
      labels.push_back("B" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    }
  std::size_t d = mats.size();
  // Coordinates of an algebra element are its strict upper-triangle entries.
  auto coords = [&](const Matrix& x) {
    Vec v(d);
    for (std::size_t k = 0; k < d; ++k) v[k] = x.at(a.pairs[k].first, a.pairs[k].second);
    return v;
  };
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[i][j] = coords(mats[i] * mats[j] - mats[j] * mats[i]);
  MatrixRealization real;
  real.basis_matrices = std::move(mats);
  Vec diag(n);
  for (std::size_t k = 0; k < n; ++k) diag[k] = a.eps[k];
  real.form = Matrix::diagonal(diag);
  a.algebra = std::make_shared<LieAlgebra>(std::move(labels), std::move(c), std::move(real));
  return a;
}

Automorphism signature_involution(const SoAlgebra& a, const std::vector<int>& s) {
  std::size_t n = a.p + a.q;
  if (s.size() != n) throw std::invalid_argument("signature_involution: wrong sign vector length");
  bool all_equal = true;
  for (int v : s) {
    if (v != 1 && v != -1) throw std::invalid_argument("signature_involution: entries must be +-1");
    if (v != s[0]) all_equal = false;
  }
  if (all_equal)
    throw std::invalid_argument("signature_involution: sign vector induces the identity");
  Vec diag(a.pairs.size());
  for (std::size_t k = 0; k < a.pairs.size(); ++k)
    diag[k] = s[a.pairs[k].first] * s[a.pairs[k].second];
  return Automorphism::certify(a.algebra, Matrix::diagonal(diag));
}

Automorphism reflection_involution(const SoAlgebra& a, std::size_t j) {
  std::size_t n = a.p + a.q;
  if (j < 1 || j > n) throw std::invalid_argument("reflection_involution: index out of range");
  std::vector<int> s(n, 1);
  s[j - 1] = -1;
  return signature_involution(a, s);
}

Automorphism so_conjugation(const SoAlgebra& a, const Matrix& w) {
  std::size_t n = a.p + a.q, d = a.pairs.size();
  Matrix j = *a.algebra->realization()->form;
  if (w.transposed() * j * w != j)
    throw std::invalid_argument("so_conjugation: matrix does not preserve the form");
  auto winv = w.inverse();
  Matrix m(d, d);
  for (std::size_t col = 0; col < d; ++col) {
    Matrix x = w * a.algebra->realization()->basis_matrices[col] * (*winv);
    for (std::size_t k = 0; k < d; ++k) m.at(k, col) = x.at(a.pairs[k].first, a.pairs[k].second);
  }
  return Automorphism::certify(a.algebra, std::move(m));
}

AlgebraPtr sl2r() {
  std::size_t d = 3;
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, zero_vec(d)));
  auto set = [&](std::size_t i, std::size_t j, const Vec& v) {
    c[i][j] = v;
    c[j][i] = scale(v, Rational(-1));
  };
  set(0, 1, {0, 2, 0});   // [h, e] = 2e
  set(0, 2, {0, 0, -2});  // [h, f] = -2f
  set(1, 2, {1, 0, 0});   // [e, f] = h
  MatrixRealization real;
  real.basis_matrices = {Matrix(2, 2, {1, 0, 0, -1}), Matrix(2, 2, {0, 1, 0, 0}),
                         Matrix(2, 2, {0, 0, 1, 0})};
  real.form = Matrix(2, 2, {0, 1, -1, 0});  // symplectic form, sl2 = sp2
  return std::make_shared<LieAlgebra>(std::vector<std::string>{"h", "e", "f"}, std::move(c),
                                      std::move(real));
}

AlgebraPtr su2() {
  std::size_t d = 3;
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, zero_vec(d)));
  auto set = [&](std::size_t i, std::size_t j, const Vec& v) {
    c[i][j] = v;
    c[j][i] = scale(v, Rational(-1));
  };
  set(0, 1, {0, 0, 2});  // [u1, u2] = 2u3
  set(1, 2, {2, 0, 0});  // [u2, u3] = 2u1
  set(2, 0, {0, 2, 0});  // [u3, u1] = 2u2
  return std::make_shared<LieAlgebra>(std::vector<std::string>{"u1", "u2", "u3"}, std::move(c));
}

AlgebraPtr sl2c_real() {
  AlgebraPtr g = sl2r();
  std::size_t m = 3, d = 6;
  // Basis {h, e, f, ih, ie, if}; brackets extend complex-bilinearly.
  std::vector<std::vector<Vec>> c(d, std::vector<Vec>(d, zero_vec(d)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& b = g->structure(i, j);
      for (std::size_t k = 0; k < m; ++k) {
        c[i][j][k] = b[k];              // [x, y]
        c[i][j + m][k + m] = b[k];      // [x, iy] = i[x, y]
        c[i + m][j][k + m] = b[k];      // [ix, y] = i[x, y]
        c[i + m][j + m][k] = -b[k];     // [ix, iy] = -[x, y]
      }
    }
  std::vector<std::string> labels;
  for (const auto& l : g->labels()) labels.push_back(l);
  for (const auto& l : g->labels()) labels.push_back("i" + l);
  return std::make_shared<LieAlgebra>(std::move(labels), std::move(c));
}

namespace {

void require_equal_summands(const LieAlgebra& gg) {
  std::size_t d = gg.dim();
  if (d % 2 != 0) throw std::invalid_argument("flip: odd-dimensional algebra is not a square sum");
  std::size_t m = d / 2;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& a = gg.structure(i, j);
      const Vec& b = gg.structure(m + i, m + j);
      for (std::size_t k = 0; k < m; ++k)
        if (a[k] != b[m + k] || a[m + k] != 0 || b[k] != 0)
          throw std::invalid_argument("flip: summands are not structurally identical");
    }
}

}  // namespace

Automorphism flip(const AlgebraPtr& gg) {
  require_equal_summands(*gg);
  std::size_t m = gg->dim() / 2;
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    w.at(i, m + i) = 1;
    w.at(m + i, i) = 1;
  }
  return Automorphism::certify(gg, std::move(w));
}

Automorphism swap_twist(const AlgebraPtr& gg, const Matrix& sigma1) {
  require_equal_summands(*gg);
  std::size_t m = gg->dim() / 2;
  if (sigma1.rows() != m || sigma1.cols() != m)
    throw std::invalid_argument("swap_twist: component involution has wrong size");
  if (sigma1 * sigma1 != Matrix::identity(m))
    throw std::invalid_argument("swap_twist: component map is not involutive");
  Matrix w(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      w.at(i, m + j) = sigma1.at(i, j);
      w.at(m + i, j) = sigma1.at(i, j);
    }
  return Automorphism::certify(gg, std::move(w));
}

Automorphism sl2_neg_transpose(const AlgebraPtr& g) {
  // h -> -h, e -> -f, f -> -e
  return Automorphism::certify(g, Matrix(3, 3, {-1, 0, 0, 0, 0, -1, 0, -1, 0}));
}

Automorphism sl2_conj_I11(const AlgebraPtr& g) {
  // h -> h, e -> -e, f -> -f
  return Automorphism::certify(g, Matrix::diagonal({1, -1, -1}));
}

Automorphism su2_involution_I11(const AlgebraPtr& g) {
  // u1 -> u1, u2 -> -u2, u3 -> -u3
  return Automorphism::certify(g, Matrix::diagonal({1, -1, -1}));
}

namespace {

// Coordinates of a 2x2 real matrix in the basis {1, y1, y2, y3} with
// y1 = [[0,-1],[1,0]], y2 = [[1,0],[0,-1]], y3 = [[0,1],[1,0]].
Vec m2_coords(const Matrix& x) {
  Rational half(1, 2);
  return {(x.at(0, 0) + x.at(1, 1)) * half, (x.at(1, 0) - x.at(0, 1)) * half,
          (x.at(0, 0) - x.at(1, 1)) * half, (x.at(0, 1) + x.at(1, 0)) * half};
}

Matrix m2_from_coords(const Vec& v) {
  return Matrix(2, 2, {v[0] + v[2], -v[1] + v[3], v[1] + v[3], v[0] - v[2]});
}

}  // namespace

EmbeddingData embed_sl2sl2_to_so22() {
  EmbeddingData e;
  AlgebraPtr g1 = sl2r();
  e.domain = direct_sum(*g1, *g1);
  const auto& mats = g1->realization()->basis_matrices;
  for (int side = 0; side < 2; ++side)
    for (std::size_t b = 0; b < 3; ++b) {
      Matrix rho(4, 4);
      for (std::size_t col = 0; col < 4; ++col) {
        Matrix v = m2_from_coords(unit_vec(4, col));
        Matrix img = side == 0 ? mats[b] * v : v * mats[b] * Rational(-1);
        Vec coords = m2_coords(img);
        for (std::size_t r = 0; r < 4; ++r) rho.at(r, col) = coords[r];
      }
      e.images.push_back(std::move(rho));
    }
  e.form = Matrix::diagonal({1, 1, -1, -1});
  return e;
}

EmbeddingData embed_su2su2_to_so4() {
  EmbeddingData e;
  AlgebraPtr g1 = su2();
  e.domain = direct_sum(*g1, *g1);
  // Quaternions: basis q0 = 1, q1, q2, q3 with q1 q2 = q3 cyclically and
  // q_a^2 = -1; the su2 basis vectors u_a act as the imaginary units q_a.
  auto qmul = [](std::size_t a, std::size_t b) -> std::pair<int, std::size_t> {
    if (a == 0) return {1, b};
    if (b == 0) return {1, a};
    if (a == b) return {-1, 0};
    // q1 q2 = q3, q2 q3 = q1, q3 q1 = q2; reversed order flips the sign
    if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1))
      return {1, 6 - a - b};
    return {-1, 6 - a - b};
  };
  for (int side = 0; side < 2; ++side)
    for (std::size_t b = 1; b <= 3; ++b) {
      Matrix rho(4, 4);
      for (std::size_t col = 0; col < 4; ++col) {
        auto [s, r] = side == 0 ? qmul(b, col) : qmul(col, b);
        rho.at(r, col) = side == 0 ? s : -s;
      }
      e.images.push_back(std::move(rho));
    }
  e.form = Matrix::identity(4);
  return e;
}

QuadricReflection quadric_reflection_data(const SignatureForm& form, const Vec& x, const Vec& y) {
  std::size_t n = form.p + form.q;
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("quadric_reflection_data: vector length mismatch");
  auto beta = [&](const Vec& u, const Vec& v) {
    Rational s = 0;
    for (std::size_t k = 0; k < n; ++k)
      s += (k < form.p ? Rational(u[k] * v[k]) : Rational(-u[k] * v[k]));
    return s;
  };
  if (beta(x, x) == 0) throw std::invalid_argument("quadric_reflection_data: x is isotropic");
  Rational byy = beta(y, y);
  if (byy == 0) throw std::invalid_argument("quadric_reflection_data: y is isotropic");
  if (beta(x, y) != 0)
    throw std::invalid_argument("quadric_reflection_data: x and y are not orthogonal");
  return {n - 2, sign_of(byy)};
}

}  // namespace catalog
}  // namespace dissect
