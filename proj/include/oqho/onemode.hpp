#pragma once

#include <utility>

#include "oqho/matrix.hpp"
#include "oqho/model.hpp"

namespace oqho {

// Closed-form analysis of a single-mode oscillator (n = 2). Internally the
// variables are rescaled so the CCR scalar equals 1/2; the scale matrix maps
// canonical coordinates back to the original ones and all returned matrices
// live in the original frame.
struct OneModeParams {
    double theta_original = 0.0;  // Theta(0,1) of the input model
    bool rescaled = false;
    double epsilon = 0.0;

    // canonical frame (theta = 1/2)
    RealMatrix Theta;  // (1/2) bj
    RealMatrix R;
    RealMatrix shape;  // m x 2 coupling shape
    RealMatrix J;      // m x m
    double gamma = 0.0;  // shape^T J shape = gamma * bj
    double omega = 0.0;  // sqrt(det R)
    double mu = 0.0;     // gamma / omega

    RealMatrix scale;      // X_original = scale * X_canonical
    RealMatrix R_original;
    RealMatrix Theta_original;
};

OneModeParams extract_params(const OscillatorModel& model);

// lambda_{1,2} = omega(-mu eps^2 +- i); exact for every coupling strength.
std::pair<Complex, Complex> exact_spectrum(const OneModeParams& p, double epsilon);

// e^{tau A_eps} in the original coordinates:
// exp(-eps^2 gamma tau) R^{-1/2} Sigma(omega tau) R^{1/2}, conjugated back.
RealMatrix exact_propagator(const OneModeParams& p, double tau, double epsilon);

// planar rotation [[cos, sin], [-sin, cos]]
RealMatrix rotation(double phi);

// R-weighted norm decay: || e^{tau A_eps} Theta ||_R = exp(-eps^2 gamma tau) ||Theta||_R.
struct WeightedDecay {
    double norm_value = 0.0;      // the weighted norm at tau
    double ratio = 0.0;           // exp(-eps^2 gamma tau)
    double tau_r = 0.0;           // eps^{-2} / gamma
    double eps_threshold = 0.0;   // 1 / sqrt(2 pi mu): necessary for tau_* > period
};

WeightedDecay weighted_decay(const OneModeParams& p, double epsilon, double tau);

// Invariant covariance in closed form (original coordinates): the
// weak-coupling limit plus the exact O(eps^2) remainder.
RealMatrix exact_covariance(const OneModeParams& p, double epsilon);

}  // namespace oqho
