#pragma once

#include <vector>

#include "oqho/matrix.hpp"
#include "oqho/model.hpp"

namespace oqho {

// Steady-state real covariance: solution of A P + P A^T + B B^T = 0, with a
// positive-semidefiniteness check of the quantum covariance P + i Theta.
struct CovarianceResult {
    RealMatrix P;
    double residual = 0.0;
    bool psd_quantum = false;
    double min_quantum_eig = 0.0;
};

CovarianceResult steady_covariance(const OscillatorModel& model);

struct TrajectoryPoint {
    double t = 0.0;
    RealMatrix P;
};

// Classical fourth-order one-step integration of
// Pdot = A P + P A^T + B B^T with symmetrisation each step.
std::vector<TrajectoryPoint> transient_covariance(const OscillatorModel& model,
                                                  const RealMatrix& p0, double t_end, double dt);

// Weak-coupling limit of the invariant covariance, assembled from the
// positive-frequency modes.
struct ModeContribution {
    std::size_t k = 0;       // mode index (0-based, positive-frequency half)
    double omega_mu = 0.0;   // omega_k * mu_k
    double weight = 0.0;     // |Bshape^T sqrtR v_k|^2
    RealMatrix term;         // weight / omega_mu * R^{-1/2} Re(v_k v_k^*) R^{-1/2}
};

struct WeakCouplingLimit {
    RealMatrix Pi;
    std::vector<ModeContribution> contributions;
};

WeakCouplingLimit weak_coupling_limit(const OscillatorModel& model);

// Mean-energy drift rate 1/2 (<Atilde^T R + R Atilde, P> + <R, B B^T>); zero
// at the steady-state covariance.
struct EnergyRate {
    double value = 0.0;
    double coupling_component = 0.0;  // <Atilde^T R + R Atilde, P>
    double field_component = 0.0;     // <R, B B^T>
};

EnergyRate energy_rate(const OscillatorModel& model, const RealMatrix& p);

// 1/2 <R, P>
double mean_energy(const OscillatorModel& model, const RealMatrix& p);

}  // namespace oqho
