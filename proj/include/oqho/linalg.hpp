#pragma once

#include <optional>
#include <vector>

#include "oqho/matrix.hpp"

namespace oqho::linalg {

struct Spectrum {
    // sorted by descending real part, ties by descending imaginary part
    std::vector<Complex> eigenvalues;
    // unit columns aligned with eigenvalues (present for Hermitian solves)
    std::optional<ComplexMatrix> eigenvectors;
};

struct SymmetricEig {
    std::vector<double> values;  // descending
    RealMatrix vectors;          // orthogonal, columns aligned with values
};

// LU with partial pivoting. Throws NumericError on a singular pivot.
RealMatrix solve(const RealMatrix& a, const RealMatrix& rhs);
RealMatrix inverse(const RealMatrix& a);
double determinant(const RealMatrix& a);

// e^A by scaling-and-squaring with the order-13 diagonal Pade approximant;
// the scaling power comes from the 1-norm.
RealMatrix expm(const RealMatrix& a);

// Full complex spectrum of a real square matrix: balance, Householder
// reduction to Hessenberg form, Francis double-shift QR. Eigenvalues only.
Spectrum eig_general(const RealMatrix& a);

// Complex Hermitian eigensolve by cyclic Jacobi rotations. Real eigenvalues
// descending, orthonormal eigenvector matrix.
Spectrum eig_hermitian(const ComplexMatrix& h);

// Real symmetric eigensolve (same Jacobi path, real vectors).
SymmetricEig eig_symmetric(const RealMatrix& s);

// Symmetric square root / inverse square root of a positive definite matrix
// via spectral decomposition.
RealMatrix sqrtm_spd(const RealMatrix& r);
RealMatrix invsqrtm_spd(const RealMatrix& r);

// Solves A X + X A^T + Q = 0 for Hurwitz A and symmetric Q through the
// Kronecker vectorisation (I (x) A + A (x) I) vec(X) = -vec(Q).
RealMatrix solve_lyapunov(const RealMatrix& a, const RealMatrix& q);

double max_real_eigenvalue(const RealMatrix& a);
bool is_hurwitz(const RealMatrix& a);

// Hermitian positive semidefiniteness up to the shared floor tolerance.
bool psd_check(const ComplexMatrix& x);
double min_hermitian_eigenvalue(const ComplexMatrix& x);

}  // namespace oqho::linalg
