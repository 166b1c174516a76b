#pragma once

namespace oqho {

// Every numerical threshold used by the toolkit, in one place. Tests pin
// against these values; changing one here changes the contract.
struct Tolerances {
    // structural checks
    double antisymmetry = 1e-12;          // ||Theta + Theta^T|| scale-relative
    double symmetry = 1e-12;              // ||R - R^T|| scale-relative
    double hermitian = 1e-12;             // ||H - H*||_F / ||H||_F
    double nonsingular_det = 1e-12;       // |det Theta| > tol * ||Theta||^n

    // eigen machinery
    double eig_orthonormal = 1e-10;       // ||V*V - I||_F
    double degeneracy_gap = 1e-8;         // min |omega_j - omega_k| > tol * max|omega|
    double phase_significant = 1e-8;      // first component used to fix eigenvector phase
    double quadform_imag = 1e-9;          // imaginary residue of Hermitian quadratic forms

    // linear algebra residuals (relative)
    double sqrtm_residual = 1e-10;        // ||S*S - R||_F <= tol * ||R||_F
    double lyapunov_residual = 1e-9;      // ||A X + X A^T + Q||_F <= tol * max(1, ||Q||_F)

    // verdicts
    double hurwitz_margin = -1e-12;       // max Re(lambda) must lie below this
    double psd_floor = 1e-8;              // min eig >= -tol * (1 + ||X||_F)
    double mu_strict = 1e-10;             // mu_k > tol for the weak-coupling verdict

    // decoherence-time search
    double march_divisor = 1000.0;        // step = T / march_divisor
    double fallback_step_factor = 0.01;   // step = factor / |max Re lambda| when no period
    double bisect_rel_width = 1e-10;
    double horizon_steps = 1e4;

    // network assembly
    double assembly_consistency = 1e-10;  // block path vs (R, M) reconstruction

    // eigensolver iteration cap multiplier (iterations <= cap * n)
    int qr_iteration_cap = 100;
};

inline const Tolerances& tols() {
    static const Tolerances t{};
    return t;
}

}  // namespace oqho
