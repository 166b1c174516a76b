#pragma once

#include <vector>

#include "oqho/matrix.hpp"
#include "oqho/model.hpp"

namespace oqho {

// Weak-coupling decomposition M = epsilon * shape: the dynamics matrix splits
// as A = A0 + epsilon^2 * Atilde1 and B = epsilon * Bshape.
struct CouplingDecomposition {
    double epsilon = 0.0;
    RealMatrix shape;    // m x n
    RealMatrix Atilde1;  // 2 Theta shape^T J shape
    RealMatrix Bshape;   // 2 Theta shape^T
};

// Requires the model to carry a coupling decomposition.
CouplingDecomposition coupling_decomposition(const OscillatorModel& model);

// A0 + eps^2 * Atilde1 for the model's spectral data.
RealMatrix dynamics_at(const OscillatorModel& model, const CouplingDecomposition& dec,
                       double epsilon);

// First-order damping coefficients of the eigenfrequency modes:
// mu_k = -i v_k^* R^{-1/2} shape^T J shape R^{-1/2} v_k (real).
std::vector<double> compute_mus(const SpectralStructure& spectral, const RealMatrix& shape,
                                const RealMatrix& j);

// lambda_hat_k = omega_k (i - eps^2 mu_k)
std::vector<Complex> eigen_asymptote(const std::vector<double>& mus,
                                     const std::vector<double>& omegas, double epsilon);

struct StabilityVerdict {
    bool stable = false;   // mu_k strictly positive for every positive-frequency mode
    double margin = 0.0;   // min over those mu_k
};

StabilityVerdict stability_verdict(const std::vector<double>& mus);

struct ThresholdSet {
    double lead = 0.0;       // min over positive-frequency modes of omega_k mu_k
    double eps_hat = 0.0;    // sqrt(min omega / (2 pi lead))
    double eps_tilde = 0.0;  // 1 / sqrt(2 pi max mu)
};

// Throws StabilityError("weak_coupling_unstable") when the verdict fails.
ThresholdSet thresholds(const std::vector<double>& mus, const std::vector<double>& omegas);

// eps^{-2} / lead
double tau_hat(const ThresholdSet& t, double epsilon);

struct SweepRow {
    double epsilon = 0.0;
    double exact = 0.0;   // max Re eigenvalue of A_eps
    double approx = 0.0;  // -eps^2 * lead
};

std::vector<SweepRow> lyapunov_exponent_sweep(const OscillatorModel& model,
                                              std::vector<double> eps_values);

// Everything the weak-coupling analysis produces for one model, assembled.
struct AsymptoticsReport {
    std::vector<double> omegas;
    std::vector<double> mus;
    std::vector<double> omega_mu_products;  // k = 1..n/2
    bool stable_weak_coupling = false;
    double margin = 0.0;
    double lead = 0.0;
    double eps_hat = 0.0;
    double eps_tilde = 0.0;
    double epsilon = 0.0;
    double tau_hat = 0.0;     // meaningful when epsilon > 0
    double eps_ratio = 0.0;   // epsilon / eps_hat
};

AsymptoticsReport analyze_asymptotics(const OscillatorModel& model);

}  // namespace oqho
