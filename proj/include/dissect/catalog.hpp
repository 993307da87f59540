#pragma once

#include <vector>

#include "dissect/involution.hpp"

namespace dissect {
namespace catalog {

/// so(p,q) with the basis convention B_ij = E_ij - eps_i eps_j E_ji for
/// i < j (lexicographic order), eps_k = +1 for k <= p and -1 for k > p.
struct SoAlgebra {
  AlgebraPtr algebra;
  std::size_t p, q;
  std::vector<int> eps;                           // per coordinate axis
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // basis index -> (i, j), 0-based
};

SoAlgebra so(std::size_t p, std::size_t q);

/// x -> r_j x r_j for the reflection in the j-th coordinate hyperplane
/// (1-based j).
Automorphism reflection_involution(const SoAlgebra& a, std::size_t j);

/// Ad(diag(s)) for a +-1 sign vector s; s and -s give the same automorphism.
Automorphism signature_involution(const SoAlgebra& a, const std::vector<int>& s);

/// Automorphism of so(p,q) induced by conjugation with an orthogonal matrix w
/// (w^T J w = J required).
Automorphism so_conjugation(const SoAlgebra& a, const Matrix& w);

AlgebraPtr sl2r();      // {h, e, f}: [h,e] = 2e, [h,f] = -2f, [e,f] = h
AlgebraPtr su2();       // {u1, u2, u3}: [u1,u2] = 2u3 cyclically
AlgebraPtr sl2c_real(); // 6-dim real form of the complexification of sl2

/// (x, y) -> (y, x) on g1 (+) g1; both summands must be structurally equal.
Automorphism flip(const AlgebraPtr& gg);
/// (x, y) -> (sigma1 y, sigma1 x).
Automorphism swap_twist(const AlgebraPtr& gg, const Matrix& sigma1);

Automorphism sl2_neg_transpose(const AlgebraPtr& g);  // x -> -x^T, fixes e - f
Automorphism sl2_conj_I11(const AlgebraPtr& g);       // x -> I11 x I11, fixes h
Automorphism su2_involution_I11(const AlgebraPtr& g); // fixes u1

/// Lie algebra homomorphism rho(a,b): X -> aX - Xb on a 4-dimensional space
/// with bilinear form beta (Gram matrix `form` in the chosen basis).
struct EmbeddingData {
  AlgebraPtr domain;
  std::vector<Matrix> images;  // 4x4 matrix per domain basis vector
  Matrix form;
};

EmbeddingData embed_sl2sl2_to_so22();
EmbeddingData embed_su2su2_to_so4();

struct SignatureForm {
  std::size_t p, q;
};

/// Tangent dimension of the fixed hypersurface of the reflection in y at x,
/// and the sign of beta(y, y).
struct QuadricReflection {
  std::size_t fixed_tangent_dim;
  int type_of_y;
};
QuadricReflection quadric_reflection_data(const SignatureForm& form, const Vec& x, const Vec& y);

}  // namespace catalog
}  // namespace dissect
