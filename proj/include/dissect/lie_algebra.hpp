#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dissect/matrix.hpp"
#include "dissect/polynomial.hpp"

namespace dissect {

/// Optional matrix model of a structure-constant algebra: each basis vector
/// as an N x N matrix, optionally preserving a bilinear form J
/// (x^T J + J x = 0).
struct MatrixRealization {
  std::vector<Matrix> basis_matrices;
  std::optional<Matrix> form;
};

/// Finite-dimensional real Lie algebra given by rational structure constants
/// over a labeled basis. The constructor certifies antisymmetry, the Jacobi
/// identity on all basis triples, and consistency of any matrix realization.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> basis_labels,
             std::vector<std::vector<Vec>> structure,
             std::optional<MatrixRealization> realization = std::nullopt);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<MatrixRealization>& realization() const { return realization_; }
  /// Coordinates of [b_i, b_j].
  const Vec& structure(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  Matrix ad(const Vec& x) const;
  Matrix killing() const;
  bool is_semisimple() const;

  bool operator==(const LieAlgebra& o) const {
    return labels_ == o.labels_ && c_ == o.c_;
  }

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Vec> c_;  // c_[i*dim+j] = coords of [b_i, b_j]
  std::optional<MatrixRealization> realization_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Element of a specific algebra; carries its owner so that mixed-algebra
/// brackets can be rejected.
struct Element {
  AlgebraPtr algebra;
  Vec coords;
};

Element bracket(const Element& x, const Element& y);

Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& s);
Subspace derived(const LieAlgebra& g);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

AlgebraPtr direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// New algebra on the basis given by the columns of P (old coordinates).
AlgebraPtr change_basis(const LieAlgebra& g, const Matrix& p);

/// Structure constants induced on a bracket-closed subspace.
AlgebraPtr subalgebra(const LieAlgebra& g, const Subspace& s,
                      const std::string& label_prefix = "s");

/// Basis of the space of linear maps f with f ad(x) = ad(x) f and
/// f([x,y]) = [f(x), y] for all basis x, y.
std::vector<Matrix> centroid(const LieAlgebra& g);

/// Decomposition of a semisimple algebra into simple ideals, by splitting a
/// generic centroid element. Complex-type ideals are kept whole.
std::vector<Subspace> simple_ideals(const LieAlgebra& g);

/// True iff the simple real algebra g carries a complex structure commuting
/// with ad g (centroid of dimension 2 with an imaginary quadratic element).
bool is_complex_simple(const LieAlgebra& g);

}  // namespace dissect
