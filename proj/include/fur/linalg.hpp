#pragma once

#include <complex>
#include <vector>

// Small dense complex linear algebra for low-dimensional quantum systems
// (d up to ~16): states, operators, Hermitian eigenvalues, positivity.

namespace fur::linalg {

using Cx = std::complex<double>;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = -1e-10;        // floor on the smallest eigenvalue
constexpr double kNormTol = 1e-12;
constexpr double kJacobiOffDiagTol = 1e-12;

// Dense d x d complex matrix, row-major.
struct ComplexMatrix {
    int dim = 0;
    std::vector<Cx> entries;   // dim*dim, entries[r*dim + c]

    ComplexMatrix() = default;
    explicit ComplexMatrix(int d);

    Cx& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
    const Cx& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }

    static ComplexMatrix identity(int d);
    static ComplexMatrix zero(int d);
};

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Cx factor);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
Cx trace(const ComplexMatrix& a);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& a, double tol = kHermitianTol);

// Determinant by LU with partial pivoting. Used to check the characteristic
// identity det(M - lambda I) ~ 0 for reported eigenvalues.
Cx determinant(const ComplexMatrix& a);

// Unit-norm complex amplitude vector of length d.
struct PureState {
    int dim = 0;
    std::vector<Cx> amplitudes;

    PureState() = default;
    // Validates |norm - 1| <= kNormTol; throws std::invalid_argument otherwise.
    PureState(int d, std::vector<Cx> amps);

    // Rescales an arbitrary nonzero vector to unit norm.
    static PureState normalized(std::vector<Cx> amps);
    // Computational basis vector |index> in dimension d.
    static PureState basis_vector(int d, int index);
};

// d x d Hermitian, unit-trace, positive semidefinite matrix.
struct DensityMatrix {
    ComplexMatrix matrix;

    DensityMatrix() = default;
    // Validates hermiticity, trace and positivity; throws std::invalid_argument.
    explicit DensityMatrix(ComplexMatrix m);

    int dim() const { return matrix.dim; }
    static DensityMatrix maximally_mixed(int d);
};

// <u|v> with conjugation on the first argument.
Cx inner(const PureState& u, const PureState& v);

// Rank-one projector |v><v|.
DensityMatrix projector(const PureState& v);

// Tr(rho |outcome><outcome|), clamped to [0,1] within reporting tolerance.
double born_probability(const DensityMatrix& rho, const PureState& outcome);

// Eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi
// rotations; converges when the off-diagonal Frobenius norm drops below
// kJacobiOffDiagTol. Throws std::invalid_argument on non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// Largest eigenvalue of a Hermitian matrix.
double hermitian_max_eigenvalue(const ComplexMatrix& m);

}  // namespace fur::linalg
