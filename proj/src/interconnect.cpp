#include "oqho/interconnect.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "oqho/errors.hpp"
#include "oqho/linalg.hpp"
#include "oqho/tolerances.hpp"

namespace oqho {

void finalize_selection(SubsystemSpec& spec) {
    if (spec.m == 0 || spec.m % 2 != 0)
        throw DimensionError("subsystem: m must be even positive");
    if (spec.d_rows.size() != spec.p)
        throw ValidationError("subsystem: selection must list p row indices");
    if (spec.p == 0 || spec.p % 2 != 0 || spec.p > spec.m)
        throw ValidationError("subsystem: p must be even, positive and at most m");
    std::set<std::size_t> seen;
    for (std::size_t idx : spec.d_rows) {
        if (idx < 1 || idx > spec.m)
            throw ValidationError("subsystem: selection index " + std::to_string(idx) +
                                  " out of range");
        if (!seen.insert(idx).second)
            throw ValidationError("subsystem: duplicate selection index " + std::to_string(idx));
    }
    // conjugate pairing: channel i pairs with i + m/2
    const std::size_t half = spec.m / 2;
    for (std::size_t idx : spec.d_rows) {
        const std::size_t mate = idx <= half ? idx + half : idx - half;
        if (!seen.count(mate))
            throw ValidationError("subsystem: selection index " + std::to_string(idx) +
                                  " lacks its conjugate pair " + std::to_string(mate));
    }
    spec.D = RealMatrix(spec.p, spec.m);
    for (std::size_t r = 0; r < spec.p; ++r) spec.D(r, spec.d_rows[r] - 1) = 1.0;
}

namespace {

void check_subsystem(const SubsystemSpec& s, std::size_t p_other, const char* which) {
    const std::string tag = std::string("subsystem ") + which;
    if (s.n == 0 || s.n % 2 != 0) throw DimensionError(tag + ": n must be even positive");
    if (s.Theta.rows() != s.n || s.Theta.cols() != s.n)
        throw DimensionError(tag + ": Theta shape mismatch");
    if (s.R.rows() != s.n || s.R.cols() != s.n) throw DimensionError(tag + ": R shape mismatch");
    if (s.Mshape.rows() != s.m || s.Mshape.cols() != s.n)
        throw DimensionError(tag + ": Mshape must be m x n");
    if (s.Lshape.rows() != p_other || s.Lshape.cols() != s.n)
        throw DimensionError(tag + ": Lshape must have the other subsystem's p rows");
    if (s.D.rows() != s.p || s.D.cols() != s.m)
        throw ValidationError(tag + ": selection matrix not finalised");
    const double tscale = std::max(1.0, frobenius_norm(s.Theta));
    if (frobenius_norm(s.Theta + s.Theta.transpose()) > tols().antisymmetry * tscale)
        throw ValidationError(tag + ": Theta is not antisymmetric");
    const double rscale = std::max(1.0, frobenius_norm(s.R));
    if (frobenius_norm(s.R - s.R.transpose()) > tols().symmetry * rscale)
        throw ValidationError(tag + ": R is not symmetric");
}

}  // namespace

ClosedLoopNetwork assemble(const SubsystemSpec& sub1, const SubsystemSpec& sub2,
                           const RealMatrix& r12, double epsilon) {
    check_subsystem(sub1, sub2.p, "1");
    check_subsystem(sub2, sub1.p, "2");
    if (r12.rows() != sub1.n || r12.cols() != sub2.n)
        throw DimensionError("assemble: R12 must be n1 x n2");
    if (epsilon < 0.0) throw ValidationError("assemble: coupling strength must be nonnegative");

    ClosedLoopNetwork net;
    net.subs = {sub1, sub2};
    net.R12 = r12;
    net.epsilon = epsilon;

    const ItoStructure ito1 = ItoStructure::canonical(sub1.m);
    const ItoStructure ito2 = ItoStructure::canonical(sub2.m);
    const std::array<const SubsystemSpec*, 2> s{&sub1, &sub2};
    const std::array<const RealMatrix*, 2> jk{&ito1.J, &ito2.J};
    const std::array<RealMatrix, 2> r_cross{r12, r12.transpose()};

    for (int k = 0; k < 2; ++k) net.Jt_k[k] = s[k]->D * (*jk[k]) * s[k]->D.transpose();

    std::array<RealMatrix, 2> m_eps, l_eps;
    for (int k = 0; k < 2; ++k) {
        m_eps[k] = epsilon * s[k]->Mshape;
        l_eps[k] = epsilon * s[k]->Lshape;
    }

    for (int k = 0; k < 2; ++k) {
        const int o = 1 - k;
        net.A_k[k] = 2.0 * (s[k]->Theta *
                            (s[k]->R + m_eps[k].transpose() * (*jk[k]) * m_eps[k] +
                             l_eps[k].transpose() * net.Jt_k[o] * l_eps[k]));
        net.B_k[k] = 2.0 * (s[k]->Theta * m_eps[k].transpose());
        net.C_k[k] = 2.0 * (s[k]->D * (*jk[k]) * m_eps[k]);
        net.E_k[k] = 2.0 * (s[k]->Theta * l_eps[k].transpose());
        net.F_k[k] = 2.0 * (s[k]->Theta * r_cross[k]);
    }

    net.A = block2x2(net.A_k[0], net.F_k[0] + net.E_k[0] * net.C_k[1],
                     net.F_k[1] + net.E_k[1] * net.C_k[0], net.A_k[1]);
    net.B = block2x2(net.B_k[0], net.E_k[0] * sub2.D, net.E_k[1] * sub1.D, net.B_k[1]);

    net.Theta = block_diag(sub1.Theta, sub2.Theta);
    net.J = block_diag(ito1.J, ito2.J);
    net.R0 = block2x2(sub1.R, r12, r12.transpose(), sub2.R);

    const RealMatrix r_corr12 =
        0.5 * (l_eps[0].transpose() * net.C_k[1] + net.C_k[0].transpose() * l_eps[1]);
    const RealMatrix r_corr21 =
        0.5 * (net.C_k[1].transpose() * l_eps[0] + l_eps[1].transpose() * net.C_k[0]);
    net.Rclos = block2x2(sub1.R, r12 + r_corr12, r12.transpose() + r_corr21, sub2.R);
    net.Mclos = block2x2(m_eps[0], sub1.D.transpose() * l_eps[1],
                         sub2.D.transpose() * l_eps[0], m_eps[1]);

    net.sM = block2x2(sub1.Mshape, sub1.D.transpose() * sub2.Lshape,
                      sub2.D.transpose() * sub1.Lshape, sub2.Mshape);
    const std::size_t n1 = sub1.n, n2 = sub2.n;
    net.sR = block2x2(
        RealMatrix(n1, n1),
        sub1.Lshape.transpose() * sub2.D * ito2.J * sub2.Mshape -
            sub1.Mshape.transpose() * ito1.J * sub1.D.transpose() * sub2.Lshape,
        sub2.Lshape.transpose() * sub1.D * ito1.J * sub1.Mshape -
            sub2.Mshape.transpose() * ito2.J * sub2.D.transpose() * sub1.Lshape,
        RealMatrix(n2, n2));
    if (max_abs(net.sR - net.sR.transpose()) > tols().antisymmetry * std::max(1.0, max_abs(net.sR)))
        throw InternalConsistencyError("assemble: energy correction shape is not symmetric");

    // the block path must reproduce the augmented-oscillator structure
    const RealMatrix a_rec =
        2.0 * (net.Theta * (net.Rclos + net.Mclos.transpose() * (net.J * net.Mclos)));
    const RealMatrix b_rec = 2.0 * (net.Theta * net.Mclos.transpose());
    const double mismatch =
        std::max(max_abs(net.A - a_rec), max_abs(net.B - b_rec));
    if (mismatch > tols().assembly_consistency)
        throw InternalConsistencyError("assemble: block assembly deviates from reconstruction by " +
                                       std::to_string(mismatch));

    net.model.n = n1 + n2;
    net.model.m = sub1.m + sub2.m;
    net.model.Theta = net.Theta;
    net.model.R = net.Rclos;
    net.model.M = net.Mclos;
    net.model.J = net.J;
    net.model.coupling = Coupling{epsilon, net.sM};
    return net;
}

ClosedLoopAsymptotics closed_loop_asymptotics(const ClosedLoopNetwork& net) {
    const std::size_t n = net.model.n;

    // spectral data of the direct-coupling skeleton (R0, not Rclos)
    OscillatorModel skeleton;
    skeleton.n = n;
    skeleton.m = net.model.m;
    skeleton.Theta = net.Theta;
    skeleton.R = net.R0;
    skeleton.M = RealMatrix(net.model.m, n);
    skeleton.J = net.J;
    auto spectral = spectral_structure(skeleton);

    ClosedLoopAsymptotics out;
    out.omegas = spectral.omegas;
    out.mus = compute_mus(spectral, net.sM, net.J);

    // sigma_k: quadratic form of the symmetric correction shape
    const RealMatrix g = spectral.invsqrt_r * net.sR * spectral.invsqrt_r;
    out.sigmas.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = spectral.V.column(k);
        const Complex q = inner(v, matvec(g, v));
        if (std::abs(q.imag()) > tols().quadform_imag)
            throw NumericError("closed_loop_asymptotics: sigma quadratic form not real");
        out.sigmas[k] = q.real();
    }

    // K = -i V* R0^{-1/2} sM^T J sM R0^{-1/2} V; diagonal must reproduce mus
    const RealMatrix w =
        spectral.invsqrt_r * (net.sM.transpose() * (net.J * net.sM)) * spectral.invsqrt_r;
    const ComplexMatrix wc = Complex(0.0, -1.0) * ComplexMatrix::from_real(w);
    out.K = spectral.V.adjoint() * wc * spectral.V;
    if (frobenius_norm(out.K - out.K.adjoint()) > 1e-10 * std::max(1.0, frobenius_norm(out.K)))
        throw NumericError("closed_loop_asymptotics: K is not Hermitian");
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(out.K(k, k).real() - out.mus[k]) > 1e-9)
            throw InternalConsistencyError("closed_loop_asymptotics: K diagonal mismatch");
    return out;
}

std::vector<Complex> closed_loop_asymptote(const ClosedLoopAsymptotics& a, double epsilon) {
    const double e2 = epsilon * epsilon;
    std::vector<Complex> lam(a.omegas.size());
    for (std::size_t k = 0; k < a.omegas.size(); ++k)
        lam[k] = a.omegas[k] * Complex(-e2 * a.mus[k], 1.0 + e2 * a.sigmas[k]);
    return lam;
}

ClosedLoopReport analyze_closed_loop(const ClosedLoopNetwork& net,
                                     std::size_t lambda_grid_size) {
    ClosedLoopReport rep;
    rep.asymptotics = closed_loop_asymptotics(net);
    rep.verdict = stability_verdict(rep.asymptotics.mus);
    rep.threshold_set = thresholds(rep.asymptotics.mus, rep.asymptotics.omegas);
    rep.tau_hat = net.epsilon > 0.0 ? tau_hat(rep.threshold_set, net.epsilon) : 0.0;
    rep.decoherence = decoherence_time(net.model, NormKind::frobenius);
    rep.bound = optimize_bound(net.model, lambda_grid_size);
    rep.covariance = steady_covariance(net.model);
    return rep;
}

}  // namespace oqho
