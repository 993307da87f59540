#include "dissect/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace dissect {

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> basis_labels,
                       std::vector<std::vector<Vec>> structure,
                       std::optional<MatrixRealization> realization)
    : dim_(basis_labels.size()),
      labels_(std::move(basis_labels)),
      c_(),
      realization_(std::move(realization)) {
  if (structure.size() != dim_) throw std::invalid_argument("structure tensor has wrong size");
  c_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (structure[i].size() != dim_) throw std::invalid_argument("structure tensor has wrong size");
    for (std::size_t j = 0; j < dim_; ++j) {
      if (structure[i][j].size() != dim_)
        throw std::invalid_argument("structure tensor has wrong size");
      c_[i * dim_ + j] = structure[i][j];
    }
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!is_zero(add(c_[i * dim_ + j], c_[j * dim_ + i])))
        throw std::invalid_argument("structure constants not antisymmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        Vec s = bracket(c_[i * dim_ + j], unit_vec(dim_, k));
        s = add(s, bracket(c_[j * dim_ + k], unit_vec(dim_, i)));
        s = add(s, bracket(c_[k * dim_ + i], unit_vec(dim_, j)));
        if (!is_zero(s))
          throw std::invalid_argument("Jacobi identity fails on basis triple (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
      }
  if (realization_) {
    if (realization_->basis_matrices.size() != dim_)
      throw std::invalid_argument("realization has wrong number of basis matrices");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) {
        Matrix expect(realization_->basis_matrices[0].rows(),
                      realization_->basis_matrices[0].cols());
        for (std::size_t k = 0; k < dim_; ++k)
          if (c_[i * dim_ + j][k] != 0)
            expect = expect + realization_->basis_matrices[k] * c_[i * dim_ + j][k];
        if (commutator(realization_->basis_matrices[i], realization_->basis_matrices[j]) != expect)
          throw std::invalid_argument("matrix realization disagrees with structure constants");
      }
    if (realization_->form) {
      const Matrix& j = *realization_->form;
      for (const auto& x : realization_->basis_matrices)
        if (!(x.transposed() * j + j * x).is_zero())
          throw std::invalid_argument("realization matrix does not preserve the form");
    }
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("bracket: element dimension mismatch");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rational f = x[i] * y[j];
      const Vec& c = c_[i * dim_ + j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (c[k] != 0) r[k] += f * c[k];
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(x, unit_vec(dim_, j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix LieAlgebra::killing() const {
  std::vector<Matrix> ads;
  ads.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(unit_vec(dim_, i)));
  Matrix k(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      k.at(i, j) = t;
      k.at(j, i) = t;
    }
  return k;
}

bool LieAlgebra::is_semisimple() const { return killing().rank() == dim_; }

Element bracket(const Element& x, const Element& y) {
  if (x.algebra != y.algebra)
    throw std::invalid_argument("bracket: elements of different algebras");
  return Element{x.algebra, x.algebra->bracket(x.coords, y.coords)};
}

Subspace center(const LieAlgebra& g) {
  std::size_t n = g.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = g.ad(unit_vec(n, i));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = a.at(r, c);
  }
  return kernel(stacked);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
  std::size_t n = g.dim();
  if (s.ambient_dim() != n) throw std::invalid_argument("centralizer: dimension mismatch");
  if (s.dim() == 0) return Subspace::full(n);
  Matrix stacked(s.dim() * n, n);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Matrix a = g.ad(s.basis()[i]);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked.at(i * n + r, c) = a.at(r, c);
  }
  return kernel(stacked);
}

Subspace derived(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gens.push_back(g.structure(i, j));
  return Subspace::span(n, gens);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw std::invalid_argument("is_ideal: dimension mismatch");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (const auto& b : s.basis())
      if (!s.contains(g.bracket(unit_vec(g.dim(), i), b))) return false;
  return true;
}

AlgebraPtr direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  std::size_t n1 = g1.dim(), n2 = g2.dim(), n = n1 + n2;
  std::vector<std::string> labels;
  for (const auto& l : g1.labels()) labels.push_back("l." + l);
  for (const auto& l : g2.labels()) labels.push_back("r." + l);
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(n)));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) c[i][j][k] = g1.structure(i, j)[k];
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k) c[n1 + i][n1 + j][n1 + k] = g2.structure(i, j)[k];
  return std::make_shared<LieAlgebra>(std::move(labels), std::move(c));
}

AlgebraPtr change_basis(const LieAlgebra& g, const Matrix& p) {
  std::size_t n = g.dim();
  auto pinv = p.inverse();
  if (!pinv) throw std::invalid_argument("change_basis: singular matrix");
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(n)));
  std::vector<Vec> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    cols[i] = Vec(n);
    for (std::size_t r = 0; r < n; ++r) cols[i][r] = p.at(r, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = (*pinv) * g.bracket(cols[i], cols[j]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
  std::optional<MatrixRealization> real;
  if (g.realization()) {
    MatrixRealization r;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix m(g.realization()->basis_matrices[0].rows(),
               g.realization()->basis_matrices[0].cols());
      for (std::size_t k = 0; k < n; ++k)
        if (p.at(k, i) != 0) m = m + g.realization()->basis_matrices[k] * p.at(k, i);
      r.basis_matrices.push_back(std::move(m));
    }
    r.form = g.realization()->form;
    real = std::move(r);
  }
  return std::make_shared<LieAlgebra>(std::move(labels), std::move(c), std::move(real));
}

AlgebraPtr subalgebra(const LieAlgebra& g, const Subspace& s, const std::string& label_prefix) {
  std::size_t n = g.dim(), m = s.dim();
  Matrix basis_cols(n, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) basis_cols.at(i, j) = s.basis()[j][i];
  std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m, zero_vec(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec br = g.bracket(s.basis()[i], s.basis()[j]);
      auto x = solve(basis_cols, br);
      if (!x) throw std::invalid_argument("subalgebra: subspace not closed under bracket");
      c[i][j] = *x;
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(label_prefix + std::to_string(i + 1));
  return std::make_shared<LieAlgebra>(std::move(labels), std::move(c));
}

std::vector<Matrix> centroid(const LieAlgebra& g) {
  std::size_t n = g.dim(), nn = n * n;
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(unit_vec(n, i)));
  // Unknown F (n x n, flattened row-major). Equations:
  //   F ad_i - ad_i F = 0           for all i
  //   F ad_i e_j + ad_j F e_i = 0   for all i, j   (f([x,y]) = [f(x), y])
  std::vector<Vec> rows;
  auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vec row(nn);
        for (std::size_t k = 0; k < n; ++k) {
          row[idx(r, k)] += ads[i].at(k, c);
          row[idx(k, c)] -= ads[i].at(r, k);
        }
        rows.push_back(std::move(row));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        Vec row(nn);
        for (std::size_t k = 0; k < n; ++k) row[idx(r, k)] += ads[i].at(k, j);
        for (std::size_t k = 0; k < n; ++k)
          if (ads[j].at(r, k) != 0) row[idx(k, i)] += ads[j].at(r, k);
        rows.push_back(std::move(row));
      }
  Matrix sys(rows.size(), nn);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nn; ++j) sys.at(i, j) = rows[i][j];
  Subspace k = kernel(sys);
  std::vector<Matrix> basis;
  for (const auto& v : k.basis()) {
    Matrix f(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) f.at(r, c) = v[idx(r, c)];
    basis.push_back(std::move(f));
  }
  return basis;
}

std::vector<Subspace> simple_ideals(const LieAlgebra& g) {
  if (!g.is_semisimple()) throw std::invalid_argument("simple_ideals: algebra not semisimple");
  std::size_t n = g.dim();
  std::vector<Matrix> cen = centroid(g);
  std::size_t d = cen.size();
  // Deterministic pseudo-random combinations, retried until generic.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % 97) + 1;
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix cand(n, n);
    for (std::size_t k = 0; k < d; ++k) cand = cand + cen[k] * Rational(next());
    Polynomial mp = min_poly(cand);
    if (static_cast<std::size_t>(mp.degree()) != d) continue;  // degenerate combination
    Factorization fac = factor_rational(mp);
    std::vector<Subspace> ideals;
    for (const auto& [f, mult] : fac.factors) {
      if (mult != 1) throw std::logic_error("simple_ideals: centroid element not semisimple");
      if (f.degree() == 2) {
        Rational disc = f.coeff(1) * f.coeff(1) - f.coeff(0) * f.coeff(2) * 4;
        if (disc > 0)
          throw std::domain_error("simple_ideals: ideal not defined over the rationals");
      } else if (f.degree() > 2) {
        throw std::domain_error("simple_ideals: ideal not defined over the rationals");
      }
      Subspace ideal = kernel(f.eval(cand));
      if (ideal.dim() == 0) throw std::logic_error("simple_ideals: empty component");
      ideals.push_back(std::move(ideal));
    }
    return ideals;
  }
  throw std::logic_error("simple_ideals: no generic centroid element found");
}

bool is_complex_simple(const LieAlgebra& g) {
  if (simple_ideals(g).size() != 1)
    throw std::invalid_argument("is_complex_simple: algebra not simple");
  std::vector<Matrix> cen = centroid(g);
  if (cen.size() != 2) return false;
  for (const auto& f : cen) {
    Polynomial mp = min_poly(f);
    if (mp.degree() == 2) {
      Rational disc = mp.coeff(1) * mp.coeff(1) - mp.coeff(0) * 4;
      return disc < 0;
    }
  }
  return false;
}

}  // namespace dissect
