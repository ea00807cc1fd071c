#include "fur/bases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fur::bases {

Cx root_of_unity(int d, long long k) {
    long long r = k % d;
    if (r < 0) r += d;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
    return Cx{std::cos(angle), std::sin(angle)};
}

Basis::Basis(int d, std::vector<PureState> vecs, std::string name)
    : dim(d), vectors(std::move(vecs)), label(std::move(name)) {
    if (static_cast<int>(vectors.size()) != d)
        throw std::invalid_argument("Basis: expected " + std::to_string(d) + " vectors");
    ComplexMatrix completeness(d);
    for (int i = 0; i < d; ++i) {
        if (vectors[static_cast<std::size_t>(i)].dim != d)
            throw std::invalid_argument("Basis: vector dimension mismatch");
        for (int j = 0; j < d; ++j) {
            const Cx ov = linalg::inner(vectors[static_cast<std::size_t>(i)],
                                        vectors[static_cast<std::size_t>(j)]);
            const Cx expected = (i == j) ? Cx{1.0, 0.0} : Cx{0.0, 0.0};
            if (std::abs(ov - expected) > kBasisTol)
                throw std::invalid_argument("Basis: vectors are not orthonormal");
        }
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                completeness.at(r, c) +=
                    vectors[static_cast<std::size_t>(i)].amplitudes[static_cast<std::size_t>(r)] *
                    std::conj(
                        vectors[static_cast<std::size_t>(i)].amplitudes[static_cast<std::size_t>(c)]);
    }
    if (linalg::max_abs_diff(completeness, ComplexMatrix::identity(d)) > kBasisTol)
        throw std::invalid_argument("Basis: completeness relation fails");
}

Basis computational_basis(int d) {
    if (d < 2) throw std::invalid_argument("computational_basis: dimension must be >= 2");
    std::vector<PureState> vecs;
    vecs.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) vecs.push_back(PureState::basis_vector(d, i));
    return Basis(d, std::move(vecs), "computational");
}

Basis fourier_basis(int d) {
    if (d < 2) throw std::invalid_argument("fourier_basis: dimension must be >= 2");
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<PureState> vecs;
    vecs.reserve(static_cast<std::size_t>(d));
    for (int p = 0; p < d; ++p) {
        std::vector<Cx> amps(static_cast<std::size_t>(d));
        for (int q = 0; q < d; ++q)
            amps[static_cast<std::size_t>(q)] =
                root_of_unity(d, static_cast<long long>(p) * q) * scale;
        vecs.push_back(PureState::normalized(std::move(amps)));
    }
    return Basis(d, std::move(vecs), "fourier");
}

ComplexMatrix shift_operator(int d) {
    if (d < 2) throw std::invalid_argument("shift_operator: dimension must be >= 2");
    ComplexMatrix x(d);
    for (int q = 0; q < d; ++q) x.at((q + 1) % d, q) = 1.0;
    return x;
}

ComplexMatrix clock_operator(int d) {
    if (d < 2) throw std::invalid_argument("clock_operator: dimension must be >= 2");
    ComplexMatrix z(d);
    for (int q = 0; q < d; ++q) z.at(q, q) = root_of_unity(d, q);
    return z;
}

bool is_mub(const Basis& a, const Basis& b, double tol) {
    if (a.dim != b.dim) throw std::invalid_argument("is_mub: dimension mismatch");
    const double target = 1.0 / a.dim;
    for (const PureState& u : a.vectors)
        for (const PureState& v : b.vectors)
            if (std::abs(std::norm(linalg::inner(u, v)) - target) > tol) return false;
    return true;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; static_cast<long long>(f) * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {

// Eigenbasis of X Z^k in odd prime dimension:
// psi_m(q) = omega^{k q(q-1)/2 - m q} / sqrt(d).
Basis shift_clock_eigenbasis(int d, int k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<PureState> vecs;
    vecs.reserve(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        std::vector<Cx> amps(static_cast<std::size_t>(d));
        for (int q = 0; q < d; ++q) {
            const long long exponent =
                static_cast<long long>(k) * q * (q - 1) / 2 - static_cast<long long>(m) * q;
            amps[static_cast<std::size_t>(q)] = root_of_unity(d, exponent) * scale;
        }
        vecs.push_back(PureState::normalized(std::move(amps)));
    }
    return Basis(d, std::move(vecs), "XZ^" + std::to_string(k));
}

Basis qubit_basis(Cx second_amp_unit, std::string label) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<PureState> vecs;
    vecs.push_back(PureState(2, {Cx{s, 0.0}, second_amp_unit * s}));
    vecs.push_back(PureState(2, {Cx{s, 0.0}, -second_amp_unit * s}));
    return Basis(2, std::move(vecs), std::move(label));
}

}  // namespace

MubFamily mub_family(int d, int count) {
    if (!is_prime(d))
        throw std::invalid_argument("mub_family: complete construction requires prime dimension");
    if (count < 2 || count > d + 1)
        throw std::invalid_argument("mub_family: count must be in [2, d+1]");
    MubFamily family;
    family.dim = d;
    family.bases.push_back(computational_basis(d));
    if (d == 2) {
        // Eigenbases of X and XZ; the latter coincides with the sigma_y basis.
        const Basis xs[] = {qubit_basis(Cx{1.0, 0.0}, "XZ^0"), qubit_basis(Cx{0.0, 1.0}, "XZ^1")};
        for (int k = 0; k + 1 < count; ++k) family.bases.push_back(xs[k]);
        return family;
    }
    for (int k = 0; k + 1 < count; ++k) family.bases.push_back(shift_clock_eigenbasis(d, k));
    return family;
}

}  // namespace fur::bases
