#pragma once

#include <optional>
#include <vector>

#include "fur/linalg.hpp"

// Fine-grained uncertainty functionals: the weighted certainty sum over a
// set of chosen measurement outcomes, its analytic upper bounds, the
// maximally certain state construction, and the Landau-Pollak inequality.

namespace fur::uncertainty {

using linalg::DensityMatrix;
using linalg::PureState;

constexpr double kBoundTol = 1e-9;

// One chosen outcome vector per observable plus the probability of each
// observable being measured.
struct OutcomeSet {
    int dim = 0;
    std::vector<PureState> outcomes;
    std::vector<double> weights;  // nonnegative, sums to 1

    // Validates dimensions and the weight distribution.
    OutcomeSet(int d, std::vector<PureState> outs, std::vector<double> w);
    // Uniform weights 1/N.
    static OutcomeSet uniform(int d, std::vector<PureState> outs);

    int count() const { return static_cast<int>(outcomes.size()); }
};

struct FurReport {
    double certainty = 0.0;  // value attained at the reported maximizer
    double bound = 0.0;
    std::optional<PureState> maximizer;
    bool maximizer_physical = false;
    bool saturated = false;  // maximizer is a state and attains the bound
};

struct LandauPollakReport {
    double lhs = 0.0;  // arccos<x1> + arccos<x2>
    double rhs = 0.0;  // arccos|<x1|x2>|
    bool holds = false;
};

// sum_i w_i Tr(rho |x_i><x_i|), in [0,1].
double certainty_sum(const DensityMatrix& rho, const OutcomeSet& s);

// Upper bound for N arbitrary outcome vectors chosen uniformly:
// (1/d)(1 + (d-1) sqrt(N') / N) with N' = N + 2 sum_{j>k} cos(theta_jk),
// cos(theta_jk) = (d |<x_j|x_k>|^2 - 1)/(d - 1). The candidate maximizer
// has Bloch vector sum_i x_i / sqrt(N'); it is always a state for d = 2
// but may be nonphysical for d >= 3, in which case the bound need not be
// attainable. If the outcome Bloch vectors sum to zero the bound
// degenerates to 1/d with no maximizer reported.
// Requires uniform weights.
FurReport max_certainty_bound(const OutcomeSet& s);

// Tight two-outcome bound (1 + |<x1|x2>|)/2, attained in every dimension
// by the phase-aligned superposition of the two outcome vectors.
FurReport pair_certainty_bound(const PureState& x1, const PureState& x2);

// Closed-form bound for n mutually unbiased outcome vectors:
// (1/d)(1 + (d-1)/sqrt(n)).
double mub_certainty_bound(int n, int d);

// arccos<x1>_rho + arccos<x2>_rho >= arccos|<x1|x2>| with
// <x>_rho = sqrt(Tr rho |x><x|).
LandauPollakReport landau_pollak_check(const DensityMatrix& rho, const PureState& x1,
                                       const PureState& x2);

}  // namespace fur::uncertainty
