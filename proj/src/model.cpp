#include "oqho/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "oqho/errors.hpp"
#include "oqho/linalg.hpp"
#include "oqho/tolerances.hpp"

namespace oqho {

RealMatrix bj() { return RealMatrix{{0.0, 1.0}, {-1.0, 0.0}}; }

RealMatrix canonical_theta(std::size_t n) {
    if (n == 0 || n % 2 != 0) throw DimensionError("canonical_theta: n must be even positive");
    return 0.5 * kron(bj(), RealMatrix::identity(n / 2));
}

ItoStructure ItoStructure::canonical(std::size_t m) {
    if (m == 0 || m % 2 != 0) throw DimensionError("ito: m must be even positive");
    ItoStructure ito;
    ito.m = m;
    ito.J = kron(bj(), RealMatrix::identity(m / 2));
    ComplexMatrix omega = ComplexMatrix::from_parts(RealMatrix::identity(m), ito.J);
    ito.Omega = std::move(omega);
    return ito;
}

namespace {
void check_dims(const OscillatorModel& model) {
    const std::size_t n = model.n, m = model.m;
    if (n == 0 || m == 0) throw DimensionError("model: n and m must be positive");
    if (model.Theta.rows() != n || model.Theta.cols() != n)
        throw DimensionError("model: Theta must be n x n");
    if (model.R.rows() != n || model.R.cols() != n) throw DimensionError("model: R must be n x n");
    if (model.M.rows() != m || model.M.cols() != n) throw DimensionError("model: M must be m x n");
    if (model.J.rows() != m || model.J.cols() != m) throw DimensionError("model: J must be m x m");
    if (model.coupling) {
        if (model.coupling->shape.rows() != m || model.coupling->shape.cols() != n)
            throw DimensionError("model: coupling shape must be m x n");
        if (model.coupling->epsilon < 0.0)
            throw ValidationError("model: coupling strength must be nonnegative");
    }
}
}  // namespace

OscillatorModel OscillatorModel::make(RealMatrix theta, RealMatrix r, RealMatrix m) {
    OscillatorModel model;
    model.n = theta.rows();
    model.m = m.rows();
    model.Theta = std::move(theta);
    model.R = std::move(r);
    model.M = std::move(m);
    model.J = ItoStructure::canonical(model.m).J;
    check_dims(model);
    return model;
}

OscillatorModel OscillatorModel::make_coupled(RealMatrix theta, RealMatrix r, RealMatrix shape,
                                              double epsilon) {
    OscillatorModel model;
    model.n = theta.rows();
    model.m = shape.rows();
    model.Theta = std::move(theta);
    model.R = std::move(r);
    model.M = epsilon * shape;
    model.J = ItoStructure::canonical(model.m).J;
    model.coupling = Coupling{epsilon, std::move(shape)};
    check_dims(model);
    return model;
}

ValidationReport validate(const OscillatorModel& model) {
    check_dims(model);
    ValidationReport rep;
    rep.dims_even = model.n % 2 == 0 && model.m % 2 == 0;

    const double theta_scale = std::max(1.0, frobenius_norm(model.Theta));
    rep.theta_antisymmetric =
        frobenius_norm(model.Theta + model.Theta.transpose()) <= tols().antisymmetry * theta_scale;

    const double r_scale = std::max(1.0, frobenius_norm(model.R));
    rep.r_symmetric =
        frobenius_norm(model.R - model.R.transpose()) <= tols().symmetry * r_scale;

    const double det = linalg::determinant(model.Theta);
    const double det_floor =
        tols().nonsingular_det * std::pow(frobenius_norm(model.Theta), model.n);
    rep.theta_nonsingular = std::abs(det) > det_floor;

    rep.r_positive_definite = false;
    if (rep.r_symmetric) {
        auto eig = linalg::eig_symmetric(symmetrized(model.R));
        rep.r_positive_definite = eig.values.back() > 0.0;
    }
    return rep;
}

StateSpace build_state_space(const OscillatorModel& model) {
    check_dims(model);
    StateSpace ss;
    ss.A0 = 2.0 * (model.Theta * model.R);
    ss.Atilde = 2.0 * (model.Theta * (model.M.transpose() * (model.J * model.M)));
    ss.A = ss.A0 + ss.Atilde;
    ss.B = 2.0 * (model.Theta * model.M.transpose());
    ss.BBt = ss.B * ss.B.transpose();
    return ss;
}

SpectralStructure spectral_structure(const OscillatorModel& model) {
    auto rep = validate(model);
    if (!rep.theta_antisymmetric || !rep.r_symmetric || !rep.dims_even)
        throw ValidationError("spectral_structure: model fails structural checks");
    if (!rep.theta_nonsingular)
        throw ValidationError("spectral_structure: CCR matrix is singular");
    if (!rep.r_positive_definite)
        throw ValidationError("spectral_structure: energy matrix is not positive definite");

    const std::size_t n = model.n;
    SpectralStructure out;
    out.sqrt_r = linalg::sqrtm_spd(symmetrized(model.R));
    out.invsqrt_r = linalg::invsqrtm_spd(symmetrized(model.R));

    // Hermitian -2i sqrtR Theta sqrtR; K is real antisymmetric so the matrix
    // is purely imaginary.
    const RealMatrix k = out.sqrt_r * model.Theta * out.sqrt_r;
    const ComplexMatrix herm = ComplexMatrix::from_parts(RealMatrix(n, n), -2.0 * k);
    auto spec = linalg::eig_hermitian(herm);

    // reject near-degenerate eigenfrequencies
    double max_abs_w = 0.0;
    for (const auto& l : spec.eigenvalues) max_abs_w = std::max(max_abs_w, std::abs(l.real()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double gap = std::abs(spec.eigenvalues[i].real() - spec.eigenvalues[j].real());
            if (gap <= tols().degeneracy_gap * max_abs_w)
                throw DegeneracyError("spectral_structure: eigenfrequencies " +
                                      std::to_string(spec.eigenvalues[i].real()) + " and " +
                                      std::to_string(spec.eigenvalues[j].real()) +
                                      " are too close");
        }

    std::size_t positives = 0;
    for (const auto& l : spec.eigenvalues)
        if (l.real() > 0.0) ++positives;
    if (positives != n / 2)
        throw NumericError("spectral_structure: spectrum is not symmetric about zero");

    // descending sort puts the positive half first; rebuild the negative half
    // from conjugate pairing
    out.omegas.assign(n, 0.0);
    out.V = ComplexMatrix(n, n);
    for (std::size_t kpos = 0; kpos < n / 2; ++kpos) {
        const double w = spec.eigenvalues[kpos].real();
        auto v = spec.eigenvectors->column(kpos);
        // phase convention: first significant component real positive
        std::size_t lead = 0;
        while (lead < n && std::abs(v[lead]) <= tols().phase_significant) ++lead;
        if (lead < n) {
            const Complex ph = std::conj(v[lead]) / std::abs(v[lead]);
            for (auto& x : v) x *= ph;
        }
        out.omegas[kpos] = w;
        out.omegas[kpos + n / 2] = -w;
        out.V.set_column(kpos, v);
        for (auto& x : v) x = std::conj(x);
        out.V.set_column(kpos + n / 2, v);
    }

    out.S = ComplexMatrix::from_parts(out.invsqrt_r, RealMatrix(n, n)) * out.V;
    out.period = 2.0 * std::numbers::pi / out.omegas[n / 2 - 1];
    return out;
}

}  // namespace oqho
