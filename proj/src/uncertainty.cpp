#include "fur/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fur/bloch.hpp"

namespace fur::uncertainty {

using linalg::ComplexMatrix;
using linalg::Cx;

OutcomeSet::OutcomeSet(int d, std::vector<PureState> outs, std::vector<double> w)
    : dim(d), outcomes(std::move(outs)), weights(std::move(w)) {
    if (outcomes.empty()) throw std::invalid_argument("OutcomeSet: needs at least one outcome");
    if (outcomes.size() != weights.size())
        throw std::invalid_argument("OutcomeSet: outcome/weight count mismatch");
    double total = 0.0;
    for (double x : weights) {
        if (x < -1e-15) throw std::invalid_argument("OutcomeSet: negative weight");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("OutcomeSet: weights must sum to 1");
    for (const PureState& v : outcomes)
        if (v.dim != dim) throw std::invalid_argument("OutcomeSet: outcome dimension mismatch");
}

OutcomeSet OutcomeSet::uniform(int d, std::vector<PureState> outs) {
    const std::size_t n = outs.size();
    return OutcomeSet(d, std::move(outs),
                      std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double certainty_sum(const DensityMatrix& rho, const OutcomeSet& s) {
    if (rho.dim() != s.dim) throw std::invalid_argument("certainty_sum: dimension mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < s.outcomes.size(); ++i)
        total += s.weights[i] * linalg::born_probability(rho, s.outcomes[i]);
    return std::clamp(total, 0.0, 1.0);
}

namespace {

// <x|M|x> for a Hermitian operator that may not be a state.
double expectation(const ComplexMatrix& m, const PureState& x) {
    Cx acc{0.0, 0.0};
    for (int j = 0; j < m.dim; ++j) {
        Cx row{0.0, 0.0};
        for (int k = 0; k < m.dim; ++k)
            row += m.at(j, k) * x.amplitudes[static_cast<std::size_t>(k)];
        acc += std::conj(x.amplitudes[static_cast<std::size_t>(j)]) * row;
    }
    return acc.real();
}

// State vector of a rank-one projector: the column with the largest
// diagonal entry, rescaled, with the first significant amplitude made
// real positive.
PureState pure_state_from_rank_one(const ComplexMatrix& m) {
    int best = 0;
    for (int j = 1; j < m.dim; ++j)
        if (m.at(j, j).real() > m.at(best, best).real()) best = j;
    std::vector<Cx> amps(static_cast<std::size_t>(m.dim));
    const double scale = 1.0 / std::sqrt(m.at(best, best).real());
    for (int i = 0; i < m.dim; ++i) amps[static_cast<std::size_t>(i)] = m.at(i, best) * scale;
    for (const Cx& a : amps) {
        if (std::abs(a) > 1e-9) {
            const Cx phase = a / std::abs(a);
            for (Cx& c : amps) c /= phase;
            break;
        }
    }
    return PureState::normalized(std::move(amps));
}

}  // namespace

FurReport max_certainty_bound(const OutcomeSet& s) {
    const int n = s.count();
    const int d = s.dim;
    for (double w : s.weights)
        if (std::abs(w - 1.0 / n) > 1e-12)
            throw std::invalid_argument("max_certainty_bound: weights must be uniform");

    double pair_sum = 0.0;  // sum over j > k of cos(theta_jk)
    for (int j = 1; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            const double overlap =
                std::norm(linalg::inner(s.outcomes[static_cast<std::size_t>(j)],
                                        s.outcomes[static_cast<std::size_t>(k)]));
            pair_sum += (d * overlap - 1.0) / (d - 1.0);
        }
    }
    const double n_eff = n + 2.0 * pair_sum;

    FurReport report;
    if (n_eff <= 1e-12) {
        // Outcome Bloch vectors cancel; the certainty sum is 1/d for every
        // state and the collinearity construction has no direction to offer.
        report.bound = 1.0 / d;
        report.certainty = 1.0 / d;
        report.maximizer_physical = true;
        report.saturated = false;
        return report;
    }
    report.bound = (1.0 + (d - 1.0) * std::sqrt(n_eff) / n) / d;

    bloch::BlochVector sum;
    sum.dim = d;
    sum.components.assign(static_cast<std::size_t>(d) * d - 1, 0.0);
    for (const PureState& x : s.outcomes) {
        const bloch::BlochVector bx = bloch::to_bloch(x);
        for (std::size_t i = 0; i < sum.components.size(); ++i)
            sum.components[i] += bx.components[i];
    }
    const double eta = 1.0 / std::sqrt(n_eff);
    for (double& c : sum.components) c *= eta;

    auto [matrix, physical] = bloch::from_bloch(sum);
    double attained = 0.0;
    for (std::size_t i = 0; i < s.outcomes.size(); ++i)
        attained += s.weights[i] * expectation(matrix, s.outcomes[i]);
    report.certainty = attained;
    report.maximizer_physical = physical;
    if (physical) report.maximizer = pure_state_from_rank_one(matrix);
    report.saturated = physical && std::abs(attained - report.bound) <= kBoundTol;
    return report;
}

FurReport pair_certainty_bound(const PureState& x1, const PureState& x2) {
    if (x1.dim != x2.dim)
        throw std::invalid_argument("pair_certainty_bound: dimension mismatch");
    const Cx overlap = linalg::inner(x1, x2);
    const double c = std::abs(overlap);

    FurReport report;
    report.bound = (1.0 + c) / 2.0;

    // Phase-align x2 so the overlap becomes real positive, then superpose.
    const Cx phase = (c > 1e-15) ? std::conj(overlap) / c : Cx{1.0, 0.0};
    std::vector<Cx> amps(static_cast<std::size_t>(x1.dim));
    for (int i = 0; i < x1.dim; ++i)
        amps[static_cast<std::size_t>(i)] = x1.amplitudes[static_cast<std::size_t>(i)] +
                                            phase * x2.amplitudes[static_cast<std::size_t>(i)];
    const PureState maximizer = PureState::normalized(std::move(amps));

    const OutcomeSet pair = OutcomeSet::uniform(x1.dim, {x1, x2});
    report.certainty = certainty_sum(linalg::projector(maximizer), pair);
    report.maximizer = maximizer;
    report.maximizer_physical = true;
    report.saturated = std::abs(report.certainty - report.bound) <= kBoundTol;
    return report;
}

double mub_certainty_bound(int n, int d) {
    if (n < 1) throw std::invalid_argument("mub_certainty_bound: n must be >= 1");
    if (d < 2) throw std::invalid_argument("mub_certainty_bound: d must be >= 2");
    return (1.0 + (d - 1.0) / std::sqrt(static_cast<double>(n))) / d;
}

LandauPollakReport landau_pollak_check(const DensityMatrix& rho, const PureState& x1,
                                       const PureState& x2) {
    if (rho.dim() != x1.dim || x1.dim != x2.dim)
        throw std::invalid_argument("landau_pollak_check: dimension mismatch");
    const double e1 = std::sqrt(linalg::born_probability(rho, x1));
    const double e2 = std::sqrt(linalg::born_probability(rho, x2));
    LandauPollakReport report;
    report.lhs = std::acos(std::clamp(e1, 0.0, 1.0)) + std::acos(std::clamp(e2, 0.0, 1.0));
    report.rhs = std::acos(std::clamp(std::abs(linalg::inner(x1, x2)), 0.0, 1.0));
    report.holds = report.lhs >= report.rhs - kBoundTol;
    return report;
}

}  // namespace fur::uncertainty
