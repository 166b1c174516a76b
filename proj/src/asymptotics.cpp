#include "oqho/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "oqho/errors.hpp"
#include "oqho/linalg.hpp"
#include "oqho/tolerances.hpp"

namespace oqho {

CouplingDecomposition coupling_decomposition(const OscillatorModel& model) {
    if (!model.coupling)
        throw ValidationError("asymptotics: model carries no coupling decomposition");
    CouplingDecomposition dec;
    dec.epsilon = model.coupling->epsilon;
    dec.shape = model.coupling->shape;
    dec.Atilde1 = 2.0 * (model.Theta * (dec.shape.transpose() * (model.J * dec.shape)));
    dec.Bshape = 2.0 * (model.Theta * dec.shape.transpose());
    return dec;
}

RealMatrix dynamics_at(const OscillatorModel& model, const CouplingDecomposition& dec,
                       double epsilon) {
    return 2.0 * (model.Theta * model.R) + (epsilon * epsilon) * dec.Atilde1;
}

std::vector<double> compute_mus(const SpectralStructure& spectral, const RealMatrix& shape,
                                const RealMatrix& j) {
    const std::size_t n = spectral.omegas.size();
    const RealMatrix g = spectral.invsqrt_r * (shape.transpose() * (j * shape)) *
                         spectral.invsqrt_r;
    std::vector<double> mus(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = spectral.V.column(k);
        const Complex q = Complex(0.0, -1.0) * inner(v, matvec(g, v));
        if (std::abs(q.imag()) > tols().quadform_imag)
            throw NumericError("compute_mus: quadratic form has imaginary residue " +
                               std::to_string(q.imag()));
        mus[k] = q.real();
    }
    return mus;
}

std::vector<Complex> eigen_asymptote(const std::vector<double>& mus,
                                     const std::vector<double>& omegas, double epsilon) {
    if (mus.size() != omegas.size()) throw DimensionError("eigen_asymptote: size mismatch");
    if (epsilon < 0.0) throw ParameterError("eigen_asymptote: negative coupling strength");
    std::vector<Complex> lam(mus.size());
    for (std::size_t k = 0; k < mus.size(); ++k)
        lam[k] = omegas[k] * Complex(-epsilon * epsilon * mus[k], 1.0);
    return lam;
}

StabilityVerdict stability_verdict(const std::vector<double>& mus) {
    const std::size_t half = mus.size() / 2;
    StabilityVerdict v;
    v.stable = half > 0;
    v.margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < half; ++k) {
        v.margin = std::min(v.margin, mus[k]);
        if (!(mus[k] > tols().mu_strict)) v.stable = false;
    }
    return v;
}

ThresholdSet thresholds(const std::vector<double>& mus, const std::vector<double>& omegas) {
    if (mus.size() != omegas.size() || mus.empty())
        throw DimensionError("thresholds: size mismatch");
    auto verdict = stability_verdict(mus);
    if (!verdict.stable)
        throw StabilityError("thresholds: some damping coefficient is not strictly positive",
                             "weak_coupling_unstable");
    const std::size_t half = mus.size() / 2;
    ThresholdSet t;
    t.lead = std::numeric_limits<double>::infinity();
    double min_omega = std::numeric_limits<double>::infinity();
    double max_mu = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        t.lead = std::min(t.lead, omegas[k] * mus[k]);
        min_omega = std::min(min_omega, omegas[k]);
        max_mu = std::max(max_mu, mus[k]);
    }
    t.eps_hat = std::sqrt(min_omega / (2.0 * std::numbers::pi * t.lead));
    t.eps_tilde = 1.0 / std::sqrt(2.0 * std::numbers::pi * max_mu);
    return t;
}

double tau_hat(const ThresholdSet& t, double epsilon) {
    if (!(epsilon > 0.0)) throw ParameterError("tau_hat: coupling strength must be positive");
    return 1.0 / (epsilon * epsilon * t.lead);
}

std::vector<SweepRow> lyapunov_exponent_sweep(const OscillatorModel& model,
                                              std::vector<double> eps_values) {
    auto dec = coupling_decomposition(model);
    auto spectral = spectral_structure(model);
    auto mus = compute_mus(spectral, dec.shape, model.J);
    auto t = thresholds(mus, spectral.omegas);

    std::sort(eps_values.begin(), eps_values.end());
    std::vector<SweepRow> rows;
    rows.reserve(eps_values.size());
    for (double e : eps_values) {
        SweepRow row;
        row.epsilon = e;
        row.exact = linalg::max_real_eigenvalue(dynamics_at(model, dec, e));
        row.approx = -e * e * t.lead;
        rows.push_back(row);
    }
    return rows;
}

AsymptoticsReport analyze_asymptotics(const OscillatorModel& model) {
    auto dec = coupling_decomposition(model);
    auto spectral = spectral_structure(model);
    auto mus = compute_mus(spectral, dec.shape, model.J);
    auto verdict = stability_verdict(mus);

    AsymptoticsReport rep;
    rep.omegas = spectral.omegas;
    rep.mus = mus;
    const std::size_t half = mus.size() / 2;
    rep.omega_mu_products.resize(half);
    for (std::size_t k = 0; k < half; ++k)
        rep.omega_mu_products[k] = spectral.omegas[k] * mus[k];
    rep.stable_weak_coupling = verdict.stable;
    rep.margin = verdict.margin;
    rep.epsilon = dec.epsilon;

    auto t = thresholds(mus, spectral.omegas);  // throws weak_coupling_unstable if not stable
    rep.lead = t.lead;
    rep.eps_hat = t.eps_hat;
    rep.eps_tilde = t.eps_tilde;
    rep.eps_ratio = dec.epsilon / t.eps_hat;
    rep.tau_hat = dec.epsilon > 0.0 ? tau_hat(t, dec.epsilon) : 0.0;
    return rep;
}

}  // namespace oqho
