#include "oqho/decay.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "oqho/errors.hpp"
#include "oqho/linalg.hpp"
#include "oqho/tolerances.hpp"

namespace oqho {

std::string_view norm_kind_name(NormKind kind) {
    return kind == NormKind::frobenius ? "frobenius" : "weighted";
}

CommutatorKernel commutator_kernel(const OscillatorModel& model,
                                   const std::vector<double>& taus) {
    auto ss = build_state_space(model);
    const RealMatrix at = ss.A.transpose();
    CommutatorKernel out;
    out.samples.reserve(taus.size());
    for (double tau : taus) {
        RealMatrix y = tau >= 0.0 ? linalg::expm(tau * ss.A) * model.Theta
                                  : model.Theta * linalg::expm((-tau) * at);
        KernelSample s;
        s.tau = tau;
        s.norm = frobenius_norm(y);
        s.value = std::move(y);
        out.samples.push_back(std::move(s));
    }
    return out;
}

namespace {

// norm evaluator for the decoherence search; weight is I or sqrt(R)
std::function<double(double)> make_norm_eval(const RealMatrix& a, const RealMatrix& theta,
                                             NormKind kind, const OscillatorModel& model) {
    if (kind == NormKind::frobenius) {
        return [a, theta](double tau) { return frobenius_norm(linalg::expm(tau * a) * theta); };
    }
    RealMatrix w = linalg::sqrtm_spd(symmetrized(model.R));
    return [a, theta, w](double tau) {
        return frobenius_norm(w * (linalg::expm(tau * a) * theta));
    };
}

}  // namespace

DecoherenceTimeResult decoherence_time(const OscillatorModel& model, NormKind norm_kind) {
    auto ss = build_state_space(model);
    const double max_re = linalg::max_real_eigenvalue(ss.A);
    if (max_re >= tols().hurwitz_margin)
        throw StabilityError("decoherence_time: A is not Hurwitz (max Re eigenvalue " +
                             std::to_string(max_re) + ")");

    double step;
    try {
        step = spectral_structure(model).period / tols().march_divisor;
    } catch (const Error&) {
        step = tols().fallback_step_factor / std::abs(max_re);
    }

    auto norm_at = make_norm_eval(ss.A, model.Theta, norm_kind, model);
    const double threshold = norm_at(0.0) / std::numbers::e;

    double lo = 0.0, hi = 0.0;
    bool crossed = false;
    for (long k = 1; k <= static_cast<long>(tols().horizon_steps); ++k) {
        const double tau = static_cast<double>(k) * step;
        if (norm_at(tau) <= threshold) {
            lo = static_cast<double>(k - 1) * step;
            hi = tau;
            crossed = true;
            break;
        }
    }
    if (!crossed)
        throw HorizonError("decoherence_time: no crossing within " +
                           std::to_string(tols().horizon_steps * step) + " time units");

    const double bracket_lo = lo, bracket_hi = hi;
    while (hi - lo > tols().bisect_rel_width * hi) {
        const double mid = 0.5 * (lo + hi);
        if (norm_at(mid) <= threshold) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    DecoherenceTimeResult res;
    res.tau_star = hi;
    res.norm_kind = norm_kind;
    res.bracket_lo = bracket_lo;
    res.bracket_hi = bracket_hi;
    res.ratio = norm_at(hi) / (threshold * std::numbers::e);
    return res;
}

namespace {

LyapunovBound bound_for(const RealMatrix& a, const RealMatrix& theta, double lambda,
                        const RealMatrix& n_mat, const std::string& n_kind) {
    const std::size_t n = a.rows();
    RealMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += lambda;
    RealMatrix gamma = linalg::solve_lyapunov(shifted, n_mat);

    auto eig = linalg::eig_symmetric(gamma);
    if (eig.values.back() <= 0.0)
        throw DefinitenessError("lyapunov_bound: Gamma is not positive definite");
    const double gamma_opnorm = eig.values.front();

    const RealMatrix sqrt_gamma = linalg::sqrtm_spd(gamma);
    const RealMatrix y = linalg::solve(sqrt_gamma, theta);  // Gamma^{-1/2} Theta

    LyapunovBound out;
    out.lambda = lambda;
    out.N = n_mat;
    out.Gamma = gamma;
    out.n_kind = n_kind;
    out.bound = (1.0 / lambda) *
                (1.0 + std::log(std::sqrt(gamma_opnorm) * frobenius_norm(y) /
                                frobenius_norm(theta)));
    // the shifted Lyapunov identity forces A G + G A^T + 2 lambda G = -N
    const RealMatrix lmi = a * gamma + gamma * a.transpose() + (2.0 * lambda) * gamma;
    out.lmi_max_eig = linalg::eig_symmetric(symmetrized(lmi)).values.front();
    if (out.lmi_max_eig >= -1e-10)
        throw InternalConsistencyError("lyapunov_bound: Lyapunov inequality not strict");
    return out;
}

}  // namespace

LyapunovBound lyapunov_bound(const OscillatorModel& model, double lambda) {
    auto ss = build_state_space(model);
    const double max_re = linalg::max_real_eigenvalue(ss.A);
    if (max_re >= tols().hurwitz_margin)
        throw StabilityError("lyapunov_bound: A is not Hurwitz");
    if (!(lambda > 0.0) || !(lambda < -max_re))
        throw ParameterError("lyapunov_bound: lambda must lie in (0, " +
                             std::to_string(-max_re) + ")");
    const std::size_t n = model.n;
    return bound_for(ss.A, model.Theta, lambda, (1.0 / static_cast<double>(n)) * RealMatrix::identity(n),
                     "identity");
}

LyapunovBound optimize_bound(const OscillatorModel& model, std::size_t lambda_grid_size) {
    if (lambda_grid_size == 0) throw ParameterError("optimize_bound: empty lambda grid");
    auto ss = build_state_space(model);
    const double max_re = linalg::max_real_eigenvalue(ss.A);
    if (max_re >= tols().hurwitz_margin)
        throw StabilityError("optimize_bound: A is not Hurwitz");

    const std::size_t n = model.n;
    std::vector<std::pair<std::string, RealMatrix>> candidates;
    candidates.emplace_back("identity", (1.0 / static_cast<double>(n)) * RealMatrix::identity(n));
    {
        RealMatrix p = linalg::solve_lyapunov(ss.A, ss.BBt);
        const double tr = trace(p);
        if (tr > 0.0) {
            p *= 1.0 / tr;
            if (linalg::eig_symmetric(p).values.back() > 1e-12) {
                candidates.emplace_back("steady_state", std::move(p));
            }
        }
    }
    {
        RealMatrix g = model.Theta * model.Theta.transpose();
        const double tr = trace(g);
        if (tr > 0.0) {
            g *= 1.0 / tr;
            if (linalg::eig_symmetric(g).values.back() > 1e-12) {
                candidates.emplace_back("ccr_gram", std::move(g));
            }
        }
    }

    const double lambda_hi = 0.999 * (-max_re);
    const double lambda_lo = lambda_hi / 1000.0;
    const double ratio = lambda_grid_size > 1
                             ? std::pow(lambda_hi / lambda_lo,
                                        1.0 / static_cast<double>(lambda_grid_size - 1))
                             : 1.0;

    bool have = false;
    LyapunovBound best;
    double lambda = lambda_grid_size > 1 ? lambda_lo : lambda_hi;
    for (std::size_t i = 0; i < lambda_grid_size; ++i) {
        for (const auto& [kind, n_mat] : candidates) {
            LyapunovBound b;
            try {
                b = bound_for(ss.A, model.Theta, lambda, n_mat, kind);
            } catch (const DefinitenessError&) {
                continue;  // candidate N degenerates for this model
            }
            if (!have || b.bound < best.bound) {
                best = std::move(b);
                have = true;
            }
        }
        lambda *= ratio;
    }
    if (!have) throw NumericError("optimize_bound: no admissible (lambda, N) pair");
    return best;
}

}  // namespace oqho
