#include "dissect/involution.hpp"

#include <stdexcept>

namespace dissect {

Automorphism Automorphism::certify(AlgebraPtr g, Matrix a) {
  std::size_t n = g->dim();
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("automorphism: matrix size does not match algebra dimension");
  if (!a.inverse()) throw std::invalid_argument("automorphism: matrix not invertible");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = a * g->structure(i, j);
      Vec ai(n), aj(n);
      for (std::size_t r = 0; r < n; ++r) {
        ai[r] = a.at(r, i);
        aj[r] = a.at(r, j);
      }
      if (lhs != g->bracket(ai, aj))
        throw std::invalid_argument("automorphism: bracket not preserved on basis pair (" +
                                    g->labels()[i] + ", " + g->labels()[j] + ")");
    }
  return Automorphism(std::move(g), std::move(a));
}

Automorphism Automorphism::identity(AlgebraPtr g) {
  Matrix id = Matrix::identity(g->dim());
  return Automorphism(std::move(g), std::move(id));
}

bool Automorphism::is_involution() const {
  return matrix_ * matrix_ == Matrix::identity(algebra_->dim());
}

bool Automorphism::commutes_with(const Automorphism& o) const {
  return matrix_ * o.matrix_ == o.matrix_ * matrix_;
}

Automorphism Automorphism::compose(const Automorphism& o) const {
  if (algebra_ != o.algebra_) throw std::invalid_argument("compose: different algebras");
  return Automorphism(algebra_, matrix_ * o.matrix_);
}

std::pair<Subspace, Subspace> eigensplit(const Automorphism& a) {
  if (!a.is_involution()) throw std::invalid_argument("eigensplit: automorphism not involutive");
  std::size_t n = a.algebra()->dim();
  Matrix id = Matrix::identity(n);
  return {kernel(a.matrix() - id), kernel(a.matrix() + id)};
}

CommutingTriple::CommutingTriple(Automorphism tau, Automorphism sigma)
    : tau_(std::move(tau)), sigma_(std::move(sigma)) {
  if (tau_.algebra() != sigma_.algebra())
    throw std::invalid_argument("triple: involutions live on different algebras");
  if (!tau_.is_involution() || !sigma_.is_involution())
    throw std::invalid_argument("triple: automorphism is not an involution");
  if (!tau_.commutes_with(sigma_))
    throw std::invalid_argument("triple: involutions do not commute");
}

QuadDecomposition quad_decompose(const CommutingTriple& t) {
  auto [h, q] = eigensplit(t.tau());
  auto [l, m] = eigensplit(t.sigma());
  return QuadDecomposition{intersect(h, l), intersect(h, m), intersect(q, l), intersect(q, m)};
}

DissectingResult is_dissecting(const CommutingTriple& t) {
  auto [h, q] = eigensplit(t.tau());
  auto [l, m] = eigensplit(t.sigma());
  std::size_t d = intersect(q, m).dim();
  return {d == 1, d};
}

bool is_irreducible_pair(const LieAlgebra& g, const Automorphism& tau) {
  if (!tau.is_involution()) throw std::invalid_argument("is_irreducible_pair: not an involution");
  if (g.dim() == 1) {
    // One-dimensional abelian case.
    return tau.matrix().at(0, 0) == -1;
  }
  if (!g.is_semisimple())
    throw std::invalid_argument(
        "is_irreducible_pair: only semisimple or 1-dimensional abelian algebras supported");
  auto ideals = simple_ideals(g);
  if (ideals.size() == 1) {
    auto [plus, minus] = eigensplit(tau);
    return minus.dim() > 0;
  }
  if (ideals.size() == 2) {
    // tau must swap the two ideals.
    std::vector<Vec> image;
    for (const auto& b : ideals[0].basis()) image.push_back(tau.matrix() * b);
    return Subspace::span(g.dim(), image) == ideals[1];
  }
  return false;
}

std::string to_string(ElementType t) {
  switch (t) {
    case ElementType::Zero: return "zero";
    case ElementType::Elliptic: return "elliptic";
    case ElementType::Hyperbolic: return "hyperbolic";
    case ElementType::Nilpotent: return "nilpotent";
    case ElementType::Mixed: return "mixed";
    case ElementType::Indeterminate: return "indeterminate";
  }
  return "?";
}

ElementType classify_element(const LieAlgebra& g, const Vec& x) {
  Matrix adx = g.ad(x);
  if (adx.is_zero()) return ElementType::Zero;
  Polynomial m = min_poly(adx);
  bool pure_power_of_t = true;
  for (int k = 0; k < m.degree(); ++k)
    if (m.coeff(k) != 0) pure_power_of_t = false;
  if (pure_power_of_t) return ElementType::Nilpotent;  // m = t^k, k >= 2
  if (!squarefree(m)) return ElementType::Mixed;
  int deg = m.degree();
  std::size_t real_roots = sturm_count(m, ExtRational::neg_inf(), ExtRational::pos_inf());
  if (real_roots == static_cast<std::size_t>(deg)) return ElementType::Hyperbolic;
  std::size_t eps = m.coeff(0) == 0 ? 1 : 0;
  if (real_roots == eps) {
    // Only real root (if any) is 0; purely imaginary nonzero roots come in
    // +-ib pairs, so m / t^eps must be even with the squared roots all
    // negative.
    std::vector<Rational> rest(m.coeffs().begin() + eps, m.coeffs().end());
    Polynomial m2{std::vector<Rational>(rest)};
    bool even = true;
    for (int k = 1; k <= m2.degree(); k += 2)
      if (m2.coeff(k) != 0) even = false;
    if (even) {
      std::vector<Rational> qc;
      for (int k = 0; k <= m2.degree(); k += 2) qc.push_back(m2.coeff(k));
      Polynomial q{std::vector<Rational>(qc)};
      if (sturm_count(q, ExtRational::neg_inf(), ExtRational::at(0)) ==
          static_cast<std::size_t>(q.degree()))
        return ElementType::Elliptic;
    }
  }
  return ElementType::Indeterminate;
}

AlgebraPtr fixed_algebra(const LieAlgebra& g, const Automorphism& tau) {
  auto [plus, minus] = eigensplit(tau);
  return subalgebra(g, plus, "f");
}

}  // namespace dissect
