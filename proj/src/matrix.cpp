#include "oqho/matrix.hpp"

#include <cmath>
#include <cstring>

#include "oqho/errors.hpp"
#include "oqho/kernels.hpp"

namespace oqho {

namespace {
void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc) {
    if (ar != br || ac != bc) throw DimensionError("matrix shape mismatch");
}
}  // namespace

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows.begin() == rows.end() ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& other) {
    require_same_shape(rows_, cols_, other.rows_, other.cols_);
    kern::axpy(1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

RealMatrix& RealMatrix::operator-=(const RealMatrix& other) {
    require_same_shape(rows_, cols_, other.rows_, other.cols_);
    kern::axpy(-1.0, other.data_.data(), data_.data(), data_.size());
    return *this;
}

RealMatrix& RealMatrix::operator*=(double a) {
    for (auto& x : data_) x *= a;
    return *this;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RealMatrix::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

RealMatrix operator+(RealMatrix a, const RealMatrix& b) { return a += b; }
RealMatrix operator-(RealMatrix a, const RealMatrix& b) { return a -= b; }
RealMatrix operator*(double a, RealMatrix m) { return m *= a; }

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    RealMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double* ci = c.row(i);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail != 0.0) kern::axpy(ail, b.row(l), ci, b.cols());
        }
    }
    return c;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_real(const RealMatrix& re) {
    ComplexMatrix m(re.rows(), re.cols());
    for (std::size_t i = 0; i < re.rows(); ++i)
        for (std::size_t j = 0; j < re.cols(); ++j) m(i, j) = re(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::from_parts(const RealMatrix& re, const RealMatrix& im) {
    require_same_shape(re.rows(), re.cols(), im.rows(), im.cols());
    ComplexMatrix m(re.rows(), re.cols());
    for (std::size_t i = 0; i < re.rows(); ++i)
        for (std::size_t j = 0; j < re.cols(); ++j) m(i, j) = {re(i, j), im(i, j)};
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(rows_, cols_, other.rows_, other.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(rows_, cols_, other.rows_, other.cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex a) {
    for (auto& x : data_) x *= a;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

RealMatrix ComplexMatrix::real_part() const {
    RealMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).real();
    return m;
}

RealMatrix ComplexMatrix::imag_part() const {
    RealMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).imag();
    return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t j) const {
    std::vector<Complex> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void ComplexMatrix::set_column(std::size_t j, const std::vector<Complex>& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex a, ComplexMatrix m) { return m *= a; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

RealMatrix block2x2(const RealMatrix& a11, const RealMatrix& a12, const RealMatrix& a21,
                    const RealMatrix& a22) {
    if (a11.rows() != a12.rows() || a21.rows() != a22.rows() || a11.cols() != a21.cols() ||
        a12.cols() != a22.cols())
        throw DimensionError("incompatible blocks");
    RealMatrix m(a11.rows() + a21.rows(), a11.cols() + a12.cols());
    auto put = [&m](const RealMatrix& b, std::size_t i0, std::size_t j0) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i0 + i, j0 + j) = b(i, j);
    };
    put(a11, 0, 0);
    put(a12, 0, a11.cols());
    put(a21, a11.rows(), 0);
    put(a22, a11.rows(), a11.cols());
    return m;
}

RealMatrix block_diag(const RealMatrix& a, const RealMatrix& b) {
    return block2x2(a, RealMatrix(a.rows(), b.cols()), RealMatrix(b.rows(), a.cols()), b);
}

RealMatrix subblock(const RealMatrix& m, std::size_t i0, std::size_t j0, std::size_t rows,
                    std::size_t cols) {
    if (i0 + rows > m.rows() || j0 + cols > m.cols()) throw DimensionError("subblock out of range");
    RealMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) b(i, j) = m(i0 + i, j0 + j);
    return b;
}

double frobenius_norm(const RealMatrix& m) {
    return std::sqrt(kern::dot(m.data(), m.data(), m.rows() * m.cols()));
}

double frobenius_norm(const ComplexMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) acc += std::norm(m(i, j));
    return std::sqrt(acc);
}

double frobenius_inner(const RealMatrix& a, const RealMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
    return kern::dot(a.data(), b.data(), a.rows() * a.cols());
}

double max_abs(const RealMatrix& m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) acc = std::max(acc, std::abs(m(i, j)));
    return acc;
}

double one_norm(const RealMatrix& m) {
    double best = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

double trace(const RealMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) s += m(i, i);
    return s;
}

RealMatrix symmetrized(const RealMatrix& m) {
    RealMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
    return s;
}

std::vector<Complex> matvec(const RealMatrix& m, const std::vector<Complex>& v) {
    if (m.cols() != v.size()) throw DimensionError("matvec shape mismatch");
    std::vector<Complex> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        y[i] = acc;
    }
    return y;
}

Complex inner(const std::vector<Complex>& v, const std::vector<Complex>& w) {
    if (v.size() != w.size()) throw DimensionError("inner product length mismatch");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * w[i];
    return acc;
}

double norm2(const std::vector<Complex>& v) {
    double acc = 0.0;
    for (const auto& x : v) acc += std::norm(x);
    return std::sqrt(acc);
}

}  // namespace oqho
