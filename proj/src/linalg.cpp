#include "oqho/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "oqho/errors.hpp"
#include "oqho/kernels.hpp"
#include "oqho/tolerances.hpp"

namespace oqho::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const RealMatrix& a, const char* who) {
    if (!a.is_square() || a.rows() == 0)
        throw DimensionError(std::string(who) + ": square matrix required");
}

void require_finite(const RealMatrix& a, const char* who) {
    if (!a.all_finite()) throw ValidationError(std::string(who) + ": non-finite entries");
}

// In-place LU factorisation with partial pivoting; returns permutation sign.
// perm[i] records the pivot row chosen at step i.
int lu_factor(RealMatrix& a, std::vector<std::size_t>& perm) {
    const std::size_t n = a.rows();
    perm.resize(n);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) throw NumericError("lu: singular matrix");
        perm[k] = piv;
        if (piv != k) {
            sign = -sign;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
        }
        const double pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / pivot;
            a(i, k) = f;
            if (f != 0.0) kern::axpy(-f, a.row(k) + k + 1, a.row(i) + k + 1, n - k - 1);
        }
    }
    return sign;
}

void lu_solve_inplace(const RealMatrix& lu, const std::vector<std::size_t>& perm, RealMatrix& b) {
    const std::size_t n = lu.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (perm[k] != k)
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(perm[k], j));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k);
            if (f != 0.0) kern::axpy(-f, b.row(k), b.row(i), b.cols());
        }
    }
    for (std::size_t k = n; k-- > 0;) {
        const double d = lu(k, k);
        for (std::size_t j = 0; j < b.cols(); ++j) b(k, j) /= d;
        for (std::size_t i = 0; i < k; ++i) {
            const double f = lu(i, k);
            if (f != 0.0) kern::axpy(-f, b.row(k), b.row(i), b.cols());
        }
    }
}

}  // namespace

RealMatrix solve(const RealMatrix& a, const RealMatrix& rhs) {
    require_square(a, "solve");
    require_finite(a, "solve");
    if (rhs.rows() != a.rows()) throw DimensionError("solve: rhs row mismatch");
    RealMatrix lu = a;
    std::vector<std::size_t> perm;
    lu_factor(lu, perm);
    RealMatrix x = rhs;
    lu_solve_inplace(lu, perm, x);
    return x;
}

RealMatrix inverse(const RealMatrix& a) { return solve(a, RealMatrix::identity(a.rows())); }

double determinant(const RealMatrix& a) {
    require_square(a, "determinant");
    RealMatrix lu = a;
    std::vector<std::size_t> perm;
    int sign;
    try {
        sign = lu_factor(lu, perm);
    } catch (const NumericError&) {
        return 0.0;
    }
    double d = sign;
    for (std::size_t i = 0; i < lu.rows(); ++i) d *= lu(i, i);
    return d;
}

// ---------------------------------------------------------------------------
// matrix exponential
// ---------------------------------------------------------------------------

RealMatrix expm(const RealMatrix& a) {
    require_square(a, "expm");
    require_finite(a, "expm");
    const std::size_t n = a.rows();

    // order-13 diagonal Pade coefficients
    static const double b[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
    static const double theta13 = 5.371920351148152;

    const double nrm = one_norm(a);
    int s = 0;
    RealMatrix as = a;
    if (nrm > theta13) {
        s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
        as *= std::ldexp(1.0, -s);
    }

    const RealMatrix eye = RealMatrix::identity(n);
    const RealMatrix a2 = as * as;
    const RealMatrix a4 = a2 * a2;
    const RealMatrix a6 = a2 * a4;

    RealMatrix u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                   b[3] * a2 + b[1] * eye;
    u = as * u;
    RealMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                   b[2] * a2 + b[0] * eye;

    RealMatrix x = solve(v - u, v + u);
    for (int i = 0; i < s; ++i) x = x * x;
    return x;
}

// ---------------------------------------------------------------------------
// general eigenvalues: balance + Hessenberg + Francis double-shift QR
// ---------------------------------------------------------------------------

namespace {

void balance(RealMatrix& a) {
    const std::size_t n = a.rows();
    const double radix = 2.0, sq = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix, f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                const double gi = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j) a(i, j) *= gi;
                for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

void hessenberg(RealMatrix& a) {
    const std::size_t n = a.rows();
    if (n < 3) return;
    std::vector<double> v(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Householder vector for column k, rows k+1..n-1
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) scale += std::abs(a(i, k));
        if (scale == 0.0) continue;
        double h = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = a(i, k) / scale;
            h += v[i] * v[i];
        }
        double g = std::sqrt(h);
        if (v[k + 1] >= 0.0) g = -g;
        h -= v[k + 1] * g;
        v[k + 1] -= g;
        // apply P = I - v v^T / h on both sides
        for (std::size_t j = 0; j < n; ++j) {
            double f = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) f += v[i] * a(i, j);
            f /= h;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= f * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double f = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) f += a(i, j) * v[j];
            f /= h;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * v[j];
        }
        a(k + 1, k) = scale * g;
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
    }
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<Complex> hqr(RealMatrix& h, int iteration_cap) {
    const int n = static_cast<int>(h.rows());
    std::vector<Complex> w(n);
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(h(i, j));
    if (anorm == 0.0) anorm = 1.0;

    int nn = n - 1;
    double t = 0.0;
    int total_its = 0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(h(l, l - 1)) <= kEps * s) {
                    h(l, l - 1) = 0.0;
                    break;
                }
            }
            double x = h(nn, nn);
            if (l == nn) {
                w[nn--] = x + t;
            } else {
                double y = h(nn - 1, nn - 1);
                double ww = h(nn, nn - 1) * h(nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + ww;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + (p >= 0.0 ? std::abs(z) : -std::abs(z));
                        w[nn - 1] = w[nn] = x + z;
                        if (z != 0.0) w[nn] = x - ww / z;
                    } else {
                        w[nn - 1] = Complex(x + p, z);
                        w[nn] = std::conj(w[nn - 1]);
                    }
                    nn -= 2;
                } else {
                    if (total_its >= iteration_cap)
                        throw NumericError("eig: QR iteration cap of " +
                                           std::to_string(iteration_cap) +
                                           " exceeded at block " + std::to_string(nn));
                    double p = 0.0, q = 0.0, r = 0.0;
                    if (its == 10 || its == 20) {
                        // exceptional shift
                        t += x;
                        for (int i = 0; i <= nn; ++i) h(i, i) -= x;
                        double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        ww = -0.4375 * s * s;
                    }
                    ++its;
                    ++total_its;
                    int m;
                    for (m = nn - 2; m >= l; --m) {
                        double z = h(m, m);
                        double rr = x - z;
                        double ss = y - z;
                        p = (rr * ss - ww) / h(m + 1, m) + h(m, m + 1);
                        q = h(m + 1, m + 1) - z - rr - ss;
                        r = h(m + 2, m + 1);
                        double s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                                        std::abs(h(m + 1, m + 1)));
                        if (u <= kEps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        h(i, i - 2) = 0.0;
                        if (i != m + 2) h(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = h(k, k - 1);
                            q = h(k + 1, k - 1);
                            r = 0.0;
                            if (k != nn - 1) r = h(k + 2, k - 1);
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        double s = std::sqrt(p * p + q * q + r * r);
                        if (p < 0.0) s = -s;
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) h(k, k - 1) = -h(k, k - 1);
                        } else {
                            h(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        double y2 = q / s;
                        double z2 = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            p = h(k, j) + q * h(k + 1, j);
                            if (k != nn - 1) {
                                p += r * h(k + 2, j);
                                h(k + 2, j) -= p * z2;
                            }
                            h(k + 1, j) -= p * y2;
                            h(k, j) -= p * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            p = x * h(i, k) + y2 * h(i, k + 1);
                            if (k != nn - 1) {
                                p += z2 * h(i, k + 2);
                                h(i, k + 2) -= p * r;
                            }
                            h(i, k + 1) -= p * q;
                            h(i, k) -= p;
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
    return w;
}

bool spectrum_order(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

}  // namespace

Spectrum eig_general(const RealMatrix& a) {
    require_square(a, "eig_general");
    require_finite(a, "eig_general");
    RealMatrix h = a;
    balance(h);
    hessenberg(h);
    auto w = hqr(h, tols().qr_iteration_cap * static_cast<int>(a.rows()));
    std::sort(w.begin(), w.end(), spectrum_order);
    return Spectrum{std::move(w), std::nullopt};
}

// ---------------------------------------------------------------------------
// Hermitian eigensolve: cyclic Jacobi
// ---------------------------------------------------------------------------

Spectrum eig_hermitian(const ComplexMatrix& h_in) {
    if (!h_in.is_square() || h_in.rows() == 0)
        throw DimensionError("eig_hermitian: square matrix required");
    const std::size_t n = h_in.rows();

    const double scale = frobenius_norm(h_in);
    {
        double dev = frobenius_norm(h_in - h_in.adjoint());
        if (dev > tols().hermitian * std::max(1.0, scale))
            throw ValidationError("eig_hermitian: input deviates from Hermitian by " +
                                  std::to_string(dev));
    }

    ComplexMatrix h = h_in;
    // exact Hermitian symmetrisation so rotations stay consistent
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = Complex(h(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&h, n]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(h(i, j));
        return std::sqrt(s);
    };

    const double stop = 1e-15 * std::max(1.0, scale);
    const int max_sweeps = 60;
    int sweep = 0;
    while (off_norm() > stop) {
        if (++sweep > max_sweeps) throw NumericError("eig_hermitian: Jacobi failed to converge");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double mag = std::abs(hpq);
                if (mag <= 1e-18 * std::max(1.0, scale)) continue;
                const double alpha = h(p, p).real();
                const double beta = h(q, q).real();
                const Complex phase = hpq / mag;
                const double d = (beta - alpha) / (2.0 * mag);
                // small-magnitude root of t^2 - 2 d t - 1 = 0
                const double tt = (d >= 0.0 ? -1.0 : 1.0) / (std::abs(d) + std::sqrt(d * d + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const Complex s = tt * c * phase;
                // G: columns (p,q) -> (c e_p + conj(s) e_q, -s e_p + c e_q)
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex hip = h(i, p), hiq = h(i, q);
                    h(i, p) = c * hip + std::conj(s) * hiq;
                    h(i, q) = -s * hip + c * hiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex hpj = h(p, j), hqj = h(q, j);
                    h(p, j) = c * hpj + s * hqj;
                    h(q, j) = -std::conj(s) * hpj + c * hqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + std::conj(s) * viq;
                    v(i, q) = -s * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&h](std::size_t a, std::size_t b) { return h(a, a).real() > h(b, b).real(); });

    Spectrum out;
    out.eigenvalues.resize(n);
    ComplexMatrix vs(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = Complex(h(order[k], order[k]).real(), 0.0);
        auto col = v.column(order[k]);
        const double nv = norm2(col);
        for (auto& x : col) x /= nv;
        vs.set_column(k, col);
    }
    out.eigenvectors = std::move(vs);
    return out;
}

SymmetricEig eig_symmetric(const RealMatrix& s) {
    require_square(s, "eig_symmetric");
    auto spec = eig_hermitian(ComplexMatrix::from_real(s));
    SymmetricEig out;
    out.values.reserve(s.rows());
    for (const auto& l : spec.eigenvalues) out.values.push_back(l.real());
    out.vectors = spec.eigenvectors->real_part();
    return out;
}

// ---------------------------------------------------------------------------
// SPD square roots
// ---------------------------------------------------------------------------

namespace {
SymmetricEig spd_decompose(const RealMatrix& r, const char* who) {
    require_square(r, who);
    require_finite(r, who);
    const double scale = frobenius_norm(r);
    if (frobenius_norm(r - r.transpose()) > tols().symmetry * std::max(1.0, scale))
        throw ValidationError(std::string(who) + ": matrix is not symmetric");
    auto eig = eig_symmetric(r);
    const double lmin = eig.values.back();
    if (lmin <= 0.0)
        throw DefinitenessError(std::string(who) + ": eigenvalue " + std::to_string(lmin) +
                                " is not positive");
    return eig;
}
}  // namespace

RealMatrix sqrtm_spd(const RealMatrix& r) {
    auto eig = spd_decompose(r, "sqrtm_spd");
    const std::size_t n = r.rows();
    RealMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = std::sqrt(eig.values[i]);
    return symmetrized(eig.vectors * d * eig.vectors.transpose());
}

RealMatrix invsqrtm_spd(const RealMatrix& r) {
    auto eig = spd_decompose(r, "invsqrtm_spd");
    const std::size_t n = r.rows();
    RealMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = 1.0 / std::sqrt(eig.values[i]);
    return symmetrized(eig.vectors * d * eig.vectors.transpose());
}

// ---------------------------------------------------------------------------
// Lyapunov equation
// ---------------------------------------------------------------------------

RealMatrix solve_lyapunov(const RealMatrix& a, const RealMatrix& q) {
    require_square(a, "solve_lyapunov");
    require_finite(a, "solve_lyapunov");
    const std::size_t n = a.rows();
    if (q.rows() != n || q.cols() != n) throw DimensionError("solve_lyapunov: Q shape mismatch");
    if (frobenius_norm(q - q.transpose()) >
        tols().symmetry * std::max(1.0, frobenius_norm(q)))
        throw ValidationError("solve_lyapunov: Q is not symmetric");
    if (!is_hurwitz(a)) throw StabilityError("solve_lyapunov: A is not Hurwitz");

    const std::size_t nn = n * n;
    RealMatrix k(nn, nn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t row = i * n + j;
            for (std::size_t l = 0; l < n; ++l) {
                k(row, l * n + j) += a(i, l);
                k(row, i * n + l) += a(j, l);
            }
        }
    RealMatrix rhs(nn, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs(i * n + j, 0) = -q(i, j);

    RealMatrix x;
    try {
        x = solve(k, rhs);
    } catch (const NumericError&) {
        throw NumericError("solve_lyapunov: singular Kronecker system");
    }
    RealMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = x(i * n + j, 0);
    p = symmetrized(p);

    const double resid = frobenius_norm(a * p + p * a.transpose() + q);
    if (resid > tols().lyapunov_residual * std::max(1.0, frobenius_norm(q)))
        throw NumericError("solve_lyapunov: residual " + std::to_string(resid) +
                           " exceeds tolerance");
    return p;
}

double max_real_eigenvalue(const RealMatrix& a) {
    auto spec = eig_general(a);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& l : spec.eigenvalues) best = std::max(best, l.real());
    return best;
}

bool is_hurwitz(const RealMatrix& a) { return max_real_eigenvalue(a) < tols().hurwitz_margin; }

double min_hermitian_eigenvalue(const ComplexMatrix& x) {
    auto spec = eig_hermitian(x);
    return spec.eigenvalues.back().real();
}

bool psd_check(const ComplexMatrix& x) {
    return min_hermitian_eigenvalue(x) >= -tols().psd_floor * (1.0 + frobenius_norm(x));
}

}  // namespace oqho::linalg
