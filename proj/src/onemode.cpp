#include "oqho/onemode.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oqho/errors.hpp"
#include "oqho/linalg.hpp"
#include "oqho/tolerances.hpp"

namespace oqho {

RealMatrix rotation(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return RealMatrix{{c, s}, {-s, c}};
}

OneModeParams extract_params(const OscillatorModel& model) {
    if (model.n != 2) throw DimensionError("onemode: model must have n = 2");
    auto rep = validate(model);
    if (!rep.theta_antisymmetric) throw ValidationError("onemode: Theta is not antisymmetric");
    if (!rep.r_symmetric || !rep.r_positive_definite)
        throw ValidationError("onemode: energy matrix must be symmetric positive definite");

    OneModeParams p;
    p.theta_original = model.Theta(0, 1);
    if (std::abs(p.theta_original) <= tols().nonsingular_det)
        throw ValidationError("onemode: singular CCR matrix (theta = 0)");
    p.Theta_original = model.Theta;
    p.R_original = model.R;

    RealMatrix shape;
    if (model.coupling) {
        p.epsilon = model.coupling->epsilon;
        shape = model.coupling->shape;
    } else {
        p.epsilon = 1.0;
        shape = model.M;
    }
    p.J = model.J;

    // rescale X1 so the CCR scalar becomes 1/2
    const double th = p.theta_original;
    p.rescaled = std::abs(th - 0.5) > 1e-12;
    p.scale = RealMatrix{{2.0 * th, 0.0}, {0.0, 1.0}};
    if (p.rescaled) {
        p.R = p.scale * model.R * p.scale;
        p.shape = shape * p.scale;
    } else {
        p.R = model.R;
        p.shape = shape;
    }
    p.Theta = 0.5 * bj();

    const RealMatrix g = p.shape.transpose() * (p.J * p.shape);
    p.gamma = g(0, 1);
    const double det_r = linalg::determinant(p.R);
    if (det_r <= 0.0) throw ValidationError("onemode: energy matrix has nonpositive determinant");
    p.omega = std::sqrt(det_r);
    p.mu = p.gamma / p.omega;
    return p;
}

std::pair<Complex, Complex> exact_spectrum(const OneModeParams& p, double epsilon) {
    const double re = -epsilon * epsilon * p.gamma;
    return {Complex(re, p.omega), Complex(re, -p.omega)};
}

RealMatrix exact_propagator(const OneModeParams& p, double tau, double epsilon) {
    const RealMatrix sqrt_r = linalg::sqrtm_spd(symmetrized(p.R));
    const RealMatrix invsqrt_r = linalg::invsqrtm_spd(symmetrized(p.R));
    RealMatrix e = std::exp(-epsilon * epsilon * p.gamma * tau) *
                   (invsqrt_r * rotation(p.omega * tau) * sqrt_r);
    if (!p.rescaled) return e;
    return p.scale * e * linalg::inverse(p.scale);
}

WeightedDecay weighted_decay(const OneModeParams& p, double epsilon, double tau) {
    if (!(p.gamma > 0.0))
        throw StabilityError("onemode: gamma must be positive for decay (gamma = " +
                             std::to_string(p.gamma) + ")");
    WeightedDecay out;
    out.ratio = std::exp(-epsilon * epsilon * p.gamma * tau);
    const RealMatrix sqrt_r0 = linalg::sqrtm_spd(symmetrized(p.R_original));
    out.norm_value = out.ratio * frobenius_norm(sqrt_r0 * p.Theta_original);
    out.tau_r = 1.0 / (epsilon * epsilon * p.gamma);
    out.eps_threshold = 1.0 / std::sqrt(2.0 * std::numbers::pi * p.mu);
    return out;
}

RealMatrix exact_covariance(const OneModeParams& p, double epsilon) {
    if (!(p.gamma > 0.0)) throw StabilityError("onemode: gamma must be positive");
    if (!(epsilon > 0.0)) throw ParameterError("onemode: coupling strength must be positive");

    const RealMatrix sqrt_r = linalg::sqrtm_spd(symmetrized(p.R));
    const RealMatrix invsqrt_r = linalg::invsqrtm_spd(symmetrized(p.R));
    const RealMatrix bshape = 2.0 * (p.Theta * p.shape.transpose());

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::vector<Complex> v1{inv_sqrt2, Complex(0.0, inv_sqrt2)};
    const std::vector<Complex> v2{inv_sqrt2, Complex(0.0, -inv_sqrt2)};

    // weak-coupling term
    const auto u1 = matvec(bshape.transpose(), matvec(sqrt_r, v1));
    double weight = 0.0;
    for (const auto& x : u1) weight += std::norm(x);
    RealMatrix pc = (weight / (2.0 * p.gamma)) * linalg::inverse(p.R);

    // exact remainder
    const RealMatrix gram = sqrt_r * (bshape * bshape.transpose()) * sqrt_r;
    const Complex cross = inner(v1, matvec(gram, v2));
    const Complex coeff =
        Complex(epsilon * epsilon, 0.0) / Complex(epsilon * epsilon * p.gamma, -p.omega);
    RealMatrix outer(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            outer(i, j) = (coeff * cross * v1[i] * std::conj(v2[j])).real();
    pc += invsqrt_r * outer * invsqrt_r;
    pc = symmetrized(pc);

    if (!p.rescaled) return pc;
    return p.scale * pc * p.scale;
}

}  // namespace oqho
