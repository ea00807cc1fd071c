#pragma once

#include <array>
#include <utility>
#include <vector>

#include "fur/linalg.hpp"

// Generalized Gell-Mann basis in dimension d and the bidirectional map
// between density matrices and Bloch vectors, normalized so that
// rho = I/d + sum_i b_i Gamma_i with Tr(Gamma_i Gamma_j) = 2 delta_ij.
// A pure state has |b| = sqrt((d-1)/(2d)); at d = 2 this is 1/2, half the
// familiar unit-ball qubit convention.

namespace fur::bloch {

using linalg::ComplexMatrix;
using linalg::DensityMatrix;
using linalg::PureState;

constexpr double kBlochNormSlack = 1e-10;

struct GellMannBasis {
    int dim = 0;
    std::vector<ComplexMatrix> gamma;  // d^2 - 1 traceless Hermitian matrices
};

struct BlochVector {
    int dim = 0;                    // Hilbert-space dimension d
    std::vector<double> components;  // length d^2 - 1

    double dot(const BlochVector& other) const;
    double norm() const;
};

// Largest admissible Bloch norm in dimension d: sqrt((d-1)/(2d)).
// Attained exactly by pure states.
double pure_state_norm(int d);

// The d^2 - 1 generalized Gell-Mann matrices in a fixed order: symmetric
// pairs (j<k), antisymmetric pairs (j<k), then diagonal matrices. Cached
// per dimension. Throws for d < 2.
const GellMannBasis& gell_mann(int d);

// b_i = Tr(rho Gamma_i) / 2.
BlochVector to_bloch(const DensityMatrix& rho);
BlochVector to_bloch(const PureState& v);

// I/d + sum_i b_i Gamma_i, plus a flag telling whether the operator is
// positive semidefinite. Bloch vectors of admissible length need not map
// to states for d >= 3, so the nonphysical operator is still returned.
// Throws if |b| exceeds the pure-state norm by more than kBlochNormSlack.
std::pair<ComplexMatrix, bool> from_bloch(const BlochVector& b);

// Tr(rho_1 rho_2) computed as 1/d + 2 b1.b2.
double overlap_via_bloch(const BlochVector& b1, const BlochVector& b2);

// Qubit helper: pure state with the given unit-length Bloch direction in
// the conventional rho = (I + r.sigma)/2 parameterization. The internal
// Gell-Mann vector of the result is r/2.
PureState qubit_state_from_unit_bloch(const std::array<double, 3>& r);

}  // namespace fur::bloch
