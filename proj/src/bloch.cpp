#include "fur/bloch.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fur::bloch {

using linalg::Cx;

double BlochVector::dot(const BlochVector& other) const {
    if (dim != other.dim)
        throw std::invalid_argument("BlochVector::dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < components.size(); ++i) s += components[i] * other.components[i];
    return s;
}

double BlochVector::norm() const { return std::sqrt(dot(*this)); }

double pure_state_norm(int d) { return std::sqrt((d - 1) / (2.0 * d)); }

namespace {

GellMannBasis build_gell_mann(int d) {
    GellMannBasis basis;
    basis.dim = d;
    basis.gamma.reserve(static_cast<std::size_t>(d) * d - 1);
    // Symmetric: |j><k| + |k><j|
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix m(d);
            m.at(j, k) = 1.0;
            m.at(k, j) = 1.0;
            basis.gamma.push_back(std::move(m));
        }
    }
    // Antisymmetric: -i|j><k| + i|k><j|
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix m(d);
            m.at(j, k) = Cx{0.0, -1.0};
            m.at(k, j) = Cx{0.0, 1.0};
            basis.gamma.push_back(std::move(m));
        }
    }
    // Diagonal: sqrt(2/(l(l+1))) (sum_{j<l} |j><j| - l |l><l|)
    for (int l = 1; l < d; ++l) {
        ComplexMatrix m(d);
        const double f = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) m.at(j, j) = f;
        m.at(l, l) = -f * l;
        basis.gamma.push_back(std::move(m));
    }
    return basis;
}

}  // namespace

const GellMannBasis& gell_mann(int d) {
    if (d < 2) throw std::invalid_argument("gell_mann: dimension must be >= 2");
    static std::mutex mutex;
    static std::map<int, GellMannBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, build_gell_mann(d)).first;
    return it->second;
}

namespace {

BlochVector bloch_of_matrix(const ComplexMatrix& rho) {
    const int d = rho.dim;
    const GellMannBasis& basis = gell_mann(d);
    BlochVector b;
    b.dim = d;
    b.components.resize(basis.gamma.size());
    for (std::size_t i = 0; i < basis.gamma.size(); ++i) {
        // Tr(rho Gamma_i) without forming the product
        Cx t{0.0, 0.0};
        const ComplexMatrix& g = basis.gamma[i];
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) t += rho.at(r, c) * g.at(c, r);
        b.components[i] = 0.5 * t.real();
    }
    return b;
}

}  // namespace

BlochVector to_bloch(const DensityMatrix& rho) { return bloch_of_matrix(rho.matrix); }

BlochVector to_bloch(const PureState& v) { return bloch_of_matrix(linalg::projector(v).matrix); }

std::pair<ComplexMatrix, bool> from_bloch(const BlochVector& b) {
    const int d = b.dim;
    if (d < 2) throw std::invalid_argument("from_bloch: dimension must be >= 2");
    const GellMannBasis& basis = gell_mann(d);
    if (b.components.size() != basis.gamma.size())
        throw std::invalid_argument("from_bloch: component count mismatch");
    if (b.norm() > pure_state_norm(d) + kBlochNormSlack)
        throw std::invalid_argument("from_bloch: Bloch vector exceeds the pure-state norm");

    ComplexMatrix m = linalg::scale(ComplexMatrix::identity(d), Cx{1.0 / d, 0.0});
    for (std::size_t i = 0; i < basis.gamma.size(); ++i) {
        const double bi = b.components[i];
        if (bi == 0.0) continue;
        const ComplexMatrix& g = basis.gamma[i];
        for (std::size_t e = 0; e < m.entries.size(); ++e) m.entries[e] += bi * g.entries[e];
    }
    const std::vector<double> eig = linalg::hermitian_eigenvalues(m);
    const bool physical = eig.front() >= linalg::kPsdTol;
    return {std::move(m), physical};
}

double overlap_via_bloch(const BlochVector& b1, const BlochVector& b2) {
    if (b1.dim != b2.dim)
        throw std::invalid_argument("overlap_via_bloch: dimension mismatch");
    return 1.0 / b1.dim + 2.0 * b1.dot(b2);
}

PureState qubit_state_from_unit_bloch(const std::array<double, 3>& r) {
    const double n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (std::abs(n - 1.0) > 1e-9)
        throw std::invalid_argument("qubit_state_from_unit_bloch: direction must be unit length");
    const double theta = std::acos(std::clamp(r[2] / n, -1.0, 1.0));
    const double phi = std::atan2(r[1], r[0]);
    std::vector<Cx> amps(2);
    amps[0] = Cx{std::cos(theta / 2.0), 0.0};
    amps[1] = std::polar(std::sin(theta / 2.0), phi);
    // First nonzero amplitude real positive; cos(theta/2) can vanish only
    // at the south pole, where the second amplitude is already 1.
    if (std::abs(amps[0]) < 1e-15) amps[1] = Cx{1.0, 0.0};
    return PureState::normalized(std::move(amps));
}

}  // namespace fur::bloch
