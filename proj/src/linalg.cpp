#include "fur/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fur::linalg {

namespace {

void require_same_dim(int a, int b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

double norm_sq(const std::vector<Cx>& v) {
    double n = 0.0;
    for (const Cx& c : v) n += std::norm(c);
    return n;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int d) : dim(d) {
    if (d < 1) throw std::invalid_argument("ComplexMatrix: dimension must be >= 1");
    entries.assign(static_cast<std::size_t>(d) * d, Cx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int d) {
    ComplexMatrix m(d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int d) { return ComplexMatrix(d); }

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim, b.dim, "add");
    ComplexMatrix r(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = a.entries[i] + b.entries[i];
    return r;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim, b.dim, "subtract");
    ComplexMatrix r(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = a.entries[i] - b.entries[i];
    return r;
}

ComplexMatrix scale(const ComplexMatrix& a, Cx factor) {
    ComplexMatrix r(a.dim);
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = a.entries[i] * factor;
    return r;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim, b.dim, "multiply");
    const int d = a.dim;
    ComplexMatrix r(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const Cx aik = a.at(i, k);
            if (aik == Cx{0.0, 0.0}) continue;
            for (int j = 0; j < d; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

Cx trace(const ComplexMatrix& a) {
    Cx t{0.0, 0.0};
    for (int i = 0; i < a.dim; ++i) t += a.at(i, i);
    return t;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim, b.dim, "max_abs_diff");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        mx = std::max(mx, std::abs(a.entries[i] - b.entries[i]));
    return mx;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = i; j < a.dim; ++j)
            if (std::abs(a.at(i, j) - std::conj(a.at(j, i))) > tol) return false;
    return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    return max_abs_diff(multiply(adjoint(a), a), ComplexMatrix::identity(a.dim)) <= tol;
}

Cx determinant(const ComplexMatrix& a) {
    const int d = a.dim;
    ComplexMatrix lu = a;
    Cx det{1.0, 0.0};
    for (int col = 0; col < d; ++col) {
        int pivot = col;
        double best = std::abs(lu.at(col, col));
        for (int r = col + 1; r < d; ++r) {
            if (std::abs(lu.at(r, col)) > best) {
                best = std::abs(lu.at(r, col));
                pivot = r;
            }
        }
        if (best == 0.0) return Cx{0.0, 0.0};
        if (pivot != col) {
            for (int c = 0; c < d; ++c) std::swap(lu.at(pivot, c), lu.at(col, c));
            det = -det;
        }
        det *= lu.at(col, col);
        for (int r = col + 1; r < d; ++r) {
            const Cx f = lu.at(r, col) / lu.at(col, col);
            for (int c = col; c < d; ++c) lu.at(r, c) -= f * lu.at(col, c);
        }
    }
    return det;
}

PureState::PureState(int d, std::vector<Cx> amps) : dim(d), amplitudes(std::move(amps)) {
    if (d < 1) throw std::invalid_argument("PureState: dimension must be >= 1");
    if (static_cast<int>(amplitudes.size()) != d)
        throw std::invalid_argument("PureState: amplitude count mismatch");
    const double n = std::sqrt(norm_sq(amplitudes));
    if (std::abs(n - 1.0) > kNormTol)
        throw std::invalid_argument("PureState: vector is not normalized (norm " +
                                    std::to_string(n) + ")");
}

PureState PureState::normalized(std::vector<Cx> amps) {
    const double n = std::sqrt(norm_sq(amps));
    if (n < 1e-14) throw std::invalid_argument("PureState::normalized: zero vector");
    for (Cx& c : amps) c /= n;
    const int d = static_cast<int>(amps.size());
    return PureState(d, std::move(amps));
}

PureState PureState::basis_vector(int d, int index) {
    if (index < 0 || index >= d)
        throw std::invalid_argument("PureState::basis_vector: index out of range");
    std::vector<Cx> amps(static_cast<std::size_t>(d), Cx{0.0, 0.0});
    amps[static_cast<std::size_t>(index)] = 1.0;
    return PureState(d, std::move(amps));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix(std::move(m)) {
    if (!is_hermitian(matrix, kHermitianTol))
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(trace(matrix) - Cx{1.0, 0.0}) > kTraceTol)
        throw std::invalid_argument("DensityMatrix: trace differs from 1");
    const std::vector<double> eig = hermitian_eigenvalues(matrix);
    if (eig.front() < kPsdTol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(eig.front()));
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
    return DensityMatrix(scale(ComplexMatrix::identity(d), Cx{1.0 / d, 0.0}));
}

Cx inner(const PureState& u, const PureState& v) {
    require_same_dim(u.dim, v.dim, "inner");
    Cx s{0.0, 0.0};
    for (int i = 0; i < u.dim; ++i)
        s += std::conj(u.amplitudes[static_cast<std::size_t>(i)]) *
             v.amplitudes[static_cast<std::size_t>(i)];
    return s;
}

DensityMatrix projector(const PureState& v) {
    ComplexMatrix m(v.dim);
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < v.dim; ++j)
            m.at(i, j) = v.amplitudes[static_cast<std::size_t>(i)] *
                         std::conj(v.amplitudes[static_cast<std::size_t>(j)]);
    return DensityMatrix(std::move(m));
}

double born_probability(const DensityMatrix& rho, const PureState& outcome) {
    require_same_dim(rho.dim(), outcome.dim, "born_probability");
    // <outcome| rho |outcome>
    Cx acc{0.0, 0.0};
    const int d = outcome.dim;
    for (int j = 0; j < d; ++j) {
        Cx row{0.0, 0.0};
        for (int k = 0; k < d; ++k)
            row += rho.matrix.at(j, k) * outcome.amplitudes[static_cast<std::size_t>(k)];
        acc += std::conj(outcome.amplitudes[static_cast<std::size_t>(j)]) * row;
    }
    double p = acc.real();
    if (p < 0.0 && p > -1e-12) p = 0.0;
    if (p > 1.0 && p < 1.0 + 1e-12) p = 1.0;
    return p;
}

namespace {

// One complex Jacobi rotation zeroing the (p,q) entry.
// Basis change |p'> = c|p> + s|q>, |q'> = -conj(s)|p> + c|q> with
// s = sin(theta) e^{-i phi}, phi = arg(A_pq).
void jacobi_rotate(ComplexMatrix& a, int p, int q) {
    const Cx apq = a.at(p, q);
    const double rho = std::abs(apq);
    if (rho == 0.0) return;
    const double app = a.at(p, p).real();
    const double aqq = a.at(q, q).real();
    const Cx phase = apq / rho;  // e^{i phi}

    const double tau = (app - aqq) / (2.0 * rho);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const Cx s = t * c * std::conj(phase);

    const int d = a.dim;
    for (int k = 0; k < d; ++k) {
        if (k == p || k == q) continue;
        const Cx akp = a.at(k, p);
        const Cx akq = a.at(k, q);
        a.at(k, p) = c * akp + s * akq;
        a.at(k, q) = -std::conj(s) * akp + c * akq;
        a.at(p, k) = std::conj(a.at(k, p));
        a.at(q, k) = std::conj(a.at(k, q));
    }
    const double sr = t * c;  // |s|
    a.at(p, p) = app * c * c + 2.0 * c * sr * rho + aqq * sr * sr;
    a.at(q, q) = app * sr * sr - 2.0 * c * sr * rho + aqq * c * c;
    a.at(p, q) = Cx{0.0, 0.0};
    a.at(q, p) = Cx{0.0, 0.0};
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!is_hermitian(m, kHermitianTol))
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    const int d = m.dim;
    if (d == 1) return {m.at(0, 0).real()};

    ComplexMatrix a = m;
    // Work on an exactly Hermitian copy.
    for (int i = 0; i < d; ++i) {
        a.at(i, i) = Cx{a.at(i, i).real(), 0.0};
        for (int j = i + 1; j < d; ++j) {
            const Cx v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
            a.at(i, j) = v;
            a.at(j, i) = std::conj(v);
        }
    }

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kJacobiOffDiagTol) break;
        for (int p = 0; p < d - 1; ++p)
            for (int q = p + 1; q < d; ++q) jacobi_rotate(a, p, q);
    }
    if (off_diagonal_norm(a) >= 1e-9)
        throw std::runtime_error("hermitian_eigenvalues: Jacobi iteration did not converge");

    std::vector<double> eig(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) eig[static_cast<std::size_t>(i)] = a.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double hermitian_max_eigenvalue(const ComplexMatrix& m) {
    return hermitian_eigenvalues(m).back();
}

}  // namespace fur::linalg
