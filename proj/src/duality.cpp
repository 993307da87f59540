#include "dissect/duality.hpp"

#include <stdexcept>

namespace dissect {

AdaptedBasis adapt_basis(const LieAlgebra& g, const std::vector<Automorphism>& family) {
  std::size_t n = g.dim();
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (!family[a].is_involution())
      throw std::invalid_argument("adapt_basis: family member is not involutive");
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (!family[a].commutes_with(family[b]))
        throw std::invalid_argument("adapt_basis: family does not commute");
  }
  // Iterated eigenspace splitting; each block stays invariant under the rest
  // of the family because everything commutes.
  struct Block {
    Subspace space;
    std::vector<int> signs;
  };
  std::vector<Block> blocks{{Subspace::full(n), {}}};
  Matrix id = Matrix::identity(n);
  for (const auto& inv : family) {
    Subspace plus = kernel(inv.matrix() - id), minus = kernel(inv.matrix() + id);
    std::vector<Block> next;
    for (auto& blk : blocks)
      for (int s : {+1, -1}) {
        Subspace piece = intersect(blk.space, s > 0 ? plus : minus);
        if (piece.dim() == 0) continue;
        std::vector<int> signs = blk.signs;
        signs.push_back(s);
        next.push_back({std::move(piece), std::move(signs)});
      }
    blocks = std::move(next);
  }
  AdaptedBasis ab;
  ab.p = Matrix(n, n);
  std::size_t col = 0;
  for (const auto& blk : blocks)
    for (const auto& v : blk.space.basis()) {
      for (std::size_t i = 0; i < n; ++i) ab.p.at(i, col) = v[i];
      ab.signs.push_back(blk.signs);
      ++col;
    }
  if (col != n) throw std::logic_error("adapt_basis: blocks do not fill the space");
  return ab;
}

namespace {

// Sign-twist the structure constants of g over the k-th family involution:
// negate c[i][j] when adapted vectors i and j are both in the -1 part.
DualResult twist(const AlgebraPtr& g, const std::vector<Automorphism>& family,
                 std::size_t twist_index) {
  AdaptedBasis ab = adapt_basis(*g, family);
  std::size_t n = g->dim();
  AlgebraPtr adapted = change_basis(*g, ab.p);
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      c[i][j] = adapted->structure(i, j);
      if (ab.signs[i][twist_index] < 0 && ab.signs[j][twist_index] < 0)
        c[i][j] = scale(c[i][j], Rational(-1));
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("d" + std::to_string(i + 1));
  // Duals are abstract: no realization is carried over.
  auto dual = std::make_shared<LieAlgebra>(std::move(labels), std::move(c));
  DualResult res;
  res.algebra = dual;
  for (std::size_t k = 0; k < family.size(); ++k) {
    Vec diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = ab.signs[i][k];
    res.involutions.push_back(Automorphism::certify(dual, Matrix::diagonal(diag)));
  }
  res.basis = std::move(ab);
  return res;
}

}  // namespace

DualResult cartan_dual(const AlgebraPtr& g, const Automorphism& tau,
                       const std::vector<Automorphism>& extra) {
  std::vector<Automorphism> family{tau};
  family.insert(family.end(), extra.begin(), extra.end());
  return twist(g, family, 0);
}

bool is_cartan_involution(const LieAlgebra& g, const Automorphism& theta) {
  if (!g.is_semisimple())
    throw std::invalid_argument("is_cartan_involution: algebra not semisimple");
  if (!theta.is_involution()) throw std::invalid_argument("is_cartan_involution: not involutive");
  Matrix b = (g.killing() * theta.matrix()) * Rational(-1);
  if (!b.is_symmetric()) return false;
  Inertia s = signature(b);
  return s.pos == g.dim();
}

DualResult compact_dual(const AlgebraPtr& g, const Automorphism& theta, const Automorphism& tau,
                        const Automorphism& sigma) {
  if (!is_cartan_involution(*g, theta))
    throw std::invalid_argument("compact_dual: theta is not a Cartan involution");
  if (!theta.commutes_with(tau) || !theta.commutes_with(sigma))
    throw std::invalid_argument("compact_dual: theta does not commute with tau and sigma");
  return twist(g, {theta, tau, sigma}, 0);
}

std::optional<Automorphism> canonical_cartan_involution(const AlgebraPtr& g) {
  Inertia k = signature(g->killing());
  if (k.neg == g->dim()) return Automorphism::identity(g);
  if (!g->realization()) return std::nullopt;
  std::size_t n = g->dim();
  const auto& mats = g->realization()->basis_matrices;
  std::size_t nr = mats[0].rows(), nc = mats[0].cols();
  Matrix span_cols(nr * nc, n);
  for (std::size_t k2 = 0; k2 < n; ++k2)
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) span_cols.at(r * nc + c, k2) = mats[k2].at(r, c);
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix target = mats[i].transposed() * Rational(-1);
    Vec flat(nr * nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) flat[r * nc + c] = target.at(r, c);
    auto x = solve(span_cols, flat);
    if (!x) return std::nullopt;  // -x^T leaves the realized algebra
    for (std::size_t r = 0; r < n; ++r) t.at(r, i) = (*x)[r];
  }
  try {
    Automorphism theta = Automorphism::certify(g, t);
    if (theta.is_involution() && is_cartan_involution(*g, theta)) return theta;
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

}  // namespace dissect
