#pragma once

#include <optional>

#include "dissect/catalog.hpp"
#include "dissect/duality.hpp"
#include "dissect/report.hpp"

namespace dissect {
namespace verify {

/// All unordered pairs of distinct sign-vector involution classes on
/// so(p,q), with quad dimensions, dissecting status, x0 classification, and
/// equivalence class ids. `jobs` > 1 evaluates pairs concurrently.
std::vector<TripleRecord> enumerate_dissecting(std::size_t p, std::size_t q,
                                               unsigned jobs = 1,
                                               std::size_t max_n = 7);

/// Sign-vector class behind a record descriptor like "signs(+--)".
std::vector<int> parse_signs_desc(const std::string& desc);

/// Searches the block-preserving permutation family for a conjugation
/// carrying (tau1, sigma1) to (tau2, sigma2) (in either order); returns the
/// witness matrix on the ambient space.
std::optional<Matrix> equivalent_triples(const catalog::SoAlgebra& a,
                                         const std::vector<int>& tau1,
                                         const std::vector<int>& sigma1,
                                         const std::vector<int>& tau2,
                                         const std::vector<int>& sigma2);

/// g^{sigma tau} = h_l + R x0, x0 central, x0 elliptic or hyperbolic.
VerificationReport check_lemma_x0(const CommutingTriple& t);

/// z_g(q_m) = h_l + q_m and q_m maximal abelian in q.
VerificationReport check_ha_cent(const CommutingTriple& t);

/// min poly of ad x0 is t(t - l)(t + l) for a single rational l > 0.
VerificationReport check_rank1_spectrum(const CommutingTriple& t);

/// Dissecting status identical for the triple, its Cartan dual, and its
/// compact dual; compact dual negative definite; elliptic/hyperbolic swap.
VerificationReport check_duality_transport(const CommutingTriple& t, const Automorphism& theta);

VerificationReport check_flip_family();
VerificationReport check_complex_case();

/// Full battery over all so(p,q) with p + q <= max_n plus the flip family
/// and the complex case; deterministic ordering.
std::vector<VerificationReport> paper_suite(std::size_t max_n, unsigned jobs = 1);

/// The canonical nonzero q_m vector of a dissecting triple, as a primitive
/// integer vector.
Vec dissecting_generator(const CommutingTriple& t);

}  // namespace verify
}  // namespace dissect
