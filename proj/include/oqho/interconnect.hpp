#pragma once

#include <array>
#include <vector>

#include "oqho/asymptotics.hpp"
#include "oqho/covariance.hpp"
#include "oqho/decay.hpp"
#include "oqho/matrix.hpp"
#include "oqho/model.hpp"

namespace oqho {

// One constituent oscillator of a two-system coherent feedback loop.
// Mshape couples it to its own input field; Lshape couples it to the other
// system's output, so Lshape has as many rows as the other system selects
// output channels. The selection matrix D picks conjugate channel pairs out
// of the input field (1-based row indices of I_m).
struct SubsystemSpec {
    std::size_t n = 0, m = 0, p = 0;
    RealMatrix Theta;
    RealMatrix R;
    RealMatrix Mshape;               // m x n
    RealMatrix Lshape;               // p_other x n
    std::vector<std::size_t> d_rows; // p selected rows, 1-based
    RealMatrix D;                    // p x m, built from d_rows
};

// Builds D from d_rows and validates the conjugate-pair selection.
void finalize_selection(SubsystemSpec& spec);

struct ClosedLoopNetwork {
    std::array<SubsystemSpec, 2> subs;
    RealMatrix R12;
    double epsilon = 0.0;

    // augmented structural data
    RealMatrix Theta, J, R0;
    RealMatrix sM;  // closed-loop coupling shape
    RealMatrix sR;  // symmetric field-mediated energy correction shape

    // direct block assembly
    RealMatrix A, B;
    // reconstruction through the augmented oscillator structure
    RealMatrix Rclos, Mclos;

    // per-subsystem state-space pieces (index 0/1)
    std::array<RealMatrix, 2> A_k, B_k, C_k, E_k, F_k, Jt_k;

    // the augmented oscillator, ready for the generic analyses
    OscillatorModel model;
};

// Assembles the feedback loop at the given coupling strength and verifies
// that the block path and the augmented-oscillator path agree.
ClosedLoopNetwork assemble(const SubsystemSpec& sub1, const SubsystemSpec& sub2,
                           const RealMatrix& r12, double epsilon);

struct ClosedLoopAsymptotics {
    std::vector<double> omegas;  // of 2 Theta R0
    std::vector<double> mus;     // damping coefficients (diagonal of K)
    std::vector<double> sigmas;  // frequency-shift coefficients
    ComplexMatrix K;             // Hermitian coupling matrix
};

ClosedLoopAsymptotics closed_loop_asymptotics(const ClosedLoopNetwork& network);

// lambda_hat_k = omega_k (i (1 + eps^2 sigma_k) - eps^2 mu_k)
std::vector<Complex> closed_loop_asymptote(const ClosedLoopAsymptotics& a, double epsilon);

// Full analysis of the augmented oscillator: weak-coupling verdict and
// thresholds from the closed-loop coefficients, decoherence time, optimised
// bound and steady covariance at the assembled coupling strength.
struct ClosedLoopReport {
    ClosedLoopAsymptotics asymptotics;
    StabilityVerdict verdict;   // from mu positivity; sigma carries no claim
    ThresholdSet threshold_set;
    double tau_hat = 0.0;
    DecoherenceTimeResult decoherence;
    LyapunovBound bound;
    CovarianceResult covariance;
};

ClosedLoopReport analyze_closed_loop(const ClosedLoopNetwork& network,
                                     std::size_t lambda_grid_size);

}  // namespace oqho
