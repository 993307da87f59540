#pragma once

#include <string>
#include <utility>

#include "dissect/lie_algebra.hpp"

namespace dissect {

/// Invertible matrix on the basis of an algebra, certified bracket-preserving
/// at construction.
class Automorphism {
 public:
  static Automorphism certify(AlgebraPtr g, Matrix a);
  static Automorphism identity(AlgebraPtr g);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Matrix& matrix() const { return matrix_; }
  bool is_involution() const;
  bool commutes_with(const Automorphism& o) const;

  Automorphism compose(const Automorphism& o) const;  // this after o

 private:
  Automorphism(AlgebraPtr g, Matrix a) : algebra_(std::move(g)), matrix_(std::move(a)) {}
  AlgebraPtr algebra_;
  Matrix matrix_;
};

/// (+1, -1) eigenspace pair of an involution.
std::pair<Subspace, Subspace> eigensplit(const Automorphism& a);

/// An algebra with two commuting involutive automorphisms.
class CommutingTriple {
 public:
  CommutingTriple(Automorphism tau, Automorphism sigma);
  const AlgebraPtr& algebra() const { return tau_.algebra(); }
  const Automorphism& tau() const { return tau_; }
  const Automorphism& sigma() const { return sigma_; }

 private:
  Automorphism tau_, sigma_;
};

/// Joint eigenspace split of two commuting involutions:
/// g = h_l + h_m + q_l + q_m with h = fixed(tau), q = antifixed(tau),
/// l = fixed(sigma), m = antifixed(sigma).
struct QuadDecomposition {
  Subspace h_l, h_m, q_l, q_m;
};

QuadDecomposition quad_decompose(const CommutingTriple& t);

struct DissectingResult {
  bool dissecting;
  std::size_t dim_qm;
};
DissectingResult is_dissecting(const CommutingTriple& t);

/// For semisimple g: the simple ideals form one tau-orbit and the antifixed
/// space is nonzero. For a 1-dimensional abelian g: tau = -id.
bool is_irreducible_pair(const LieAlgebra& g, const Automorphism& tau);

enum class ElementType { Zero, Elliptic, Hyperbolic, Nilpotent, Mixed, Indeterminate };
std::string to_string(ElementType t);

/// Exact spectral classification of ad(x) via minimal polynomial, Sturm
/// counting, and the root-square polynomial.
ElementType classify_element(const LieAlgebra& g, const Vec& x);

/// Fixed-point algebra g^tau with induced structure constants.
AlgebraPtr fixed_algebra(const LieAlgebra& g, const Automorphism& tau);

}  // namespace dissect
