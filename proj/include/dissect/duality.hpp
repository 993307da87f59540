#pragma once

#include <optional>
#include <vector>

#include "dissect/involution.hpp"

namespace dissect {

/// Joint +-1 eigenbasis of a commuting family of involutions. Columns of P
/// are the adapted basis vectors in the old coordinates; signs[v][k] is the
/// eigenvalue of family member k on adapted vector v.
struct AdaptedBasis {
  Matrix p;
  std::vector<std::vector<int>> signs;
};

AdaptedBasis adapt_basis(const LieAlgebra& g, const std::vector<Automorphism>& family);

/// Dual algebra with the involutions transported to it (same order as the
/// input family) and the adapted basis that was used.
struct DualResult {
  AlgebraPtr algebra;
  std::vector<Automorphism> involutions;
  AdaptedBasis basis;
};

/// Cartan dual h + iq: in a joint eigenbasis of {tau} + extra, negate
/// c[i][j][k] exactly when adapted vectors i and j both lie in q = g^{-tau}.
DualResult cartan_dual(const AlgebraPtr& g, const Automorphism& tau,
                       const std::vector<Automorphism>& extra = {});

/// True iff B_theta(x, y) = -kappa(x, theta y) is positive definite.
bool is_cartan_involution(const LieAlgebra& g, const Automorphism& theta);

/// Compact dual k + ip over the split of a Cartan involution theta commuting
/// with tau and sigma; involutions returned as {theta^r, tau^r, sigma^r}.
DualResult compact_dual(const AlgebraPtr& g, const Automorphism& theta,
                        const Automorphism& tau, const Automorphism& sigma);

/// id for compact algebras; x -> -x^T for matrix-realized algebras when it
/// certifies as a Cartan involution; empty otherwise.
std::optional<Automorphism> canonical_cartan_involution(const AlgebraPtr& g);

}  // namespace dissect
