#pragma once

#include <string>
#include <vector>

#include "oqho/matrix.hpp"
#include "oqho/model.hpp"

namespace oqho {

enum class NormKind { frobenius, r_weighted };

// Two-point commutator kernel e^{tau A} Theta (tau >= 0) and
// Theta e^{-tau A^T} (tau < 0), with Frobenius norms attached.
struct KernelSample {
    double tau = 0.0;
    RealMatrix value;
    double norm = 0.0;
};

struct CommutatorKernel {
    std::vector<KernelSample> samples;
};

CommutatorKernel commutator_kernel(const OscillatorModel& model, const std::vector<double>& taus);

// First time the chosen norm of e^{tau A} Theta falls to 1/e of its initial
// value. Located by a forward march (step = period/1000, or
// 0.01/|max Re lambda| when the model has no spectral structure) followed by
// bisection; first-crossing semantics, no monotonicity assumed.
struct DecoherenceTimeResult {
    double tau_star = 0.0;
    NormKind norm_kind = NormKind::frobenius;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double ratio = 0.0;  // achieved norm ratio at tau_star
};

DecoherenceTimeResult decoherence_time(const OscillatorModel& model, NormKind norm_kind);

// Upper bound on the decoherence time from the Lyapunov inequality
// A Gamma + Gamma A^T + 2 lambda Gamma < 0 with Gamma solving the shifted
// Lyapunov equation driven by N.
struct LyapunovBound {
    double lambda = 0.0;
    RealMatrix N;       // symmetric positive definite, trace 1
    RealMatrix Gamma;
    double bound = 0.0;
    std::string n_kind; // which candidate N produced the bound
    double lmi_max_eig = 0.0;  // largest eigenvalue of A Gamma + Gamma A^T + 2 lambda Gamma
};

LyapunovBound lyapunov_bound(const OscillatorModel& model, double lambda);

// Minimises the bound over a geometric lambda grid crossed with the candidate
// family { I/n, P/tr(P), Theta Theta^T / tr(Theta Theta^T) }.
LyapunovBound optimize_bound(const OscillatorModel& model, std::size_t lambda_grid_size);

std::string_view norm_kind_name(NormKind kind);

}  // namespace oqho
