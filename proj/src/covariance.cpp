#include "oqho/covariance.hpp"

#include <cmath>
#include <string>

#include "oqho/asymptotics.hpp"
#include "oqho/errors.hpp"
#include "oqho/linalg.hpp"
#include "oqho/tolerances.hpp"

namespace oqho {

CovarianceResult steady_covariance(const OscillatorModel& model) {
    auto ss = build_state_space(model);
    if (!linalg::is_hurwitz(ss.A))
        throw StabilityError("steady_covariance: A is not Hurwitz");
    CovarianceResult res;
    res.P = linalg::solve_lyapunov(ss.A, ss.BBt);
    res.residual = frobenius_norm(ss.A * res.P + res.P * ss.A.transpose() + ss.BBt);
    const ComplexMatrix quantum = ComplexMatrix::from_parts(res.P, model.Theta);
    res.min_quantum_eig = linalg::min_hermitian_eigenvalue(quantum);
    res.psd_quantum =
        res.min_quantum_eig >= -tols().psd_floor * (1.0 + frobenius_norm(quantum));
    return res;
}

std::vector<TrajectoryPoint> transient_covariance(const OscillatorModel& model,
                                                  const RealMatrix& p0, double t_end,
                                                  double dt) {
    if (!(dt > 0.0)) throw ParameterError("transient_covariance: dt must be positive");
    if (t_end < 0.0) throw ParameterError("transient_covariance: t_end must be nonnegative");
    if (p0.rows() != model.n || p0.cols() != model.n)
        throw DimensionError("transient_covariance: P0 shape mismatch");
    if (frobenius_norm(p0 - p0.transpose()) >
        tols().symmetry * std::max(1.0, frobenius_norm(p0)))
        throw ValidationError("transient_covariance: P0 is not symmetric");

    auto ss = build_state_space(model);
    const RealMatrix at = ss.A.transpose();
    auto deriv = [&](const RealMatrix& p) { return ss.A * p + p * at + ss.BBt; };

    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    std::vector<TrajectoryPoint> traj;
    traj.reserve(steps + 1);
    RealMatrix p = symmetrized(p0);
    traj.push_back({0.0, p});
    for (std::size_t k = 1; k <= steps; ++k) {
        const RealMatrix k1 = deriv(p);
        const RealMatrix k2 = deriv(p + (0.5 * dt) * k1);
        const RealMatrix k3 = deriv(p + (0.5 * dt) * k2);
        const RealMatrix k4 = deriv(p + dt * k3);
        p += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        p = symmetrized(p);
        if (!p.all_finite())
            throw NumericError("transient_covariance: trajectory diverged at t = " +
                               std::to_string(static_cast<double>(k) * dt));
        traj.push_back({static_cast<double>(k) * dt, p});
    }
    return traj;
}

WeakCouplingLimit weak_coupling_limit(const OscillatorModel& model) {
    auto dec = coupling_decomposition(model);
    auto spectral = spectral_structure(model);
    auto mus = compute_mus(spectral, dec.shape, model.J);
    if (!stability_verdict(mus).stable)
        throw StabilityError("weak_coupling_limit: some damping coefficient is not positive",
                             "weak_coupling_unstable");

    const std::size_t n = model.n;
    WeakCouplingLimit out;
    out.Pi = RealMatrix(n, n);
    const RealMatrix bt = dec.Bshape.transpose();
    for (std::size_t k = 0; k < n / 2; ++k) {
        const auto v = spectral.V.column(k);
        const auto sv = matvec(spectral.sqrt_r, v);
        const auto u = matvec(bt, sv);
        double weight = 0.0;
        for (const auto& x : u) weight += std::norm(x);

        RealMatrix re_vv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                re_vv(i, j) = (v[i] * std::conj(v[j])).real();

        ModeContribution c;
        c.k = k;
        c.omega_mu = spectral.omegas[k] * mus[k];
        c.weight = weight;
        c.term = (weight / c.omega_mu) *
                 (spectral.invsqrt_r * re_vv * spectral.invsqrt_r);
        out.Pi += c.term;
        out.contributions.push_back(std::move(c));
    }
    out.Pi = symmetrized(out.Pi);
    return out;
}

EnergyRate energy_rate(const OscillatorModel& model, const RealMatrix& p) {
    if (p.rows() != model.n || p.cols() != model.n)
        throw DimensionError("energy_rate: P shape mismatch");
    if (frobenius_norm(p - p.transpose()) > tols().symmetry * std::max(1.0, frobenius_norm(p)))
        throw ValidationError("energy_rate: P is not symmetric");
    auto ss = build_state_space(model);
    EnergyRate out;
    out.coupling_component =
        frobenius_inner(ss.Atilde.transpose() * model.R + model.R * ss.Atilde, p);
    out.field_component = frobenius_inner(model.R, ss.BBt);
    out.value = 0.5 * (out.coupling_component + out.field_component);
    return out;
}

double mean_energy(const OscillatorModel& model, const RealMatrix& p) {
    return 0.5 * frobenius_inner(model.R, p);
}

}  // namespace oqho
