#pragma once

#include <string>
#include <vector>

#include "fur/linalg.hpp"

// Measurement bases for d-level systems: computational, Fourier, the
// shift/clock operator pair, and mutually unbiased families in prime
// dimension.

namespace fur::bases {

using linalg::ComplexMatrix;
using linalg::Cx;
using linalg::PureState;

constexpr double kBasisTol = 1e-12;
constexpr double kMubTol = 1e-10;

// Ordered orthonormal set of d states; a measurement with outcomes 0..d-1.
struct Basis {
    int dim = 0;
    std::vector<PureState> vectors;
    std::string label;

    // Validates pairwise orthonormality and completeness within kBasisTol.
    Basis(int d, std::vector<PureState> vecs, std::string name);
    Basis() = default;
};

struct MubFamily {
    int dim = 0;
    std::vector<Basis> bases;
};

// exp(2 pi i k / d)
Cx root_of_unity(int d, long long k);

Basis computational_basis(int d);

// e_p = (1/sqrt d) sum_q omega^{pq} |q>
Basis fourier_basis(int d);

// X = sum_q |q+1><q| (indices mod d)
ComplexMatrix shift_operator(int d);
// Z = sum_q omega^q |q><q|
ComplexMatrix clock_operator(int d);

// True iff | |<a_i|b_j>|^2 - 1/d | <= tol for every pair.
bool is_mub(const Basis& a, const Basis& b, double tol = kMubTol);

bool is_prime(int n);

// `count` pairwise mutually unbiased bases in prime dimension d: the
// computational basis followed by the eigenbases of X Z^k, k = 0..count-2.
// Global phases are fixed by making the first amplitude real positive.
// Throws if d is not prime or count exceeds d + 1.
MubFamily mub_family(int d, int count);

}  // namespace fur::bases
