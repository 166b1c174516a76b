#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace oqho {

using Complex = std::complex<double>;

// Dense row-major real matrix. Plain value type: copies are deep, all
// operations return fresh values, nothing is shared.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static RealMatrix identity(std::size_t n);
    static RealMatrix zeros(std::size_t rows, std::size_t cols) { return RealMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    RealMatrix& operator+=(const RealMatrix& other);
    RealMatrix& operator-=(const RealMatrix& other);
    RealMatrix& operator*=(double a);

    RealMatrix transpose() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

RealMatrix operator+(RealMatrix a, const RealMatrix& b);
RealMatrix operator-(RealMatrix a, const RealMatrix& b);
RealMatrix operator*(double a, RealMatrix m);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_real(const RealMatrix& re);
    static ComplexMatrix from_parts(const RealMatrix& re, const RealMatrix& im);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex a);

    ComplexMatrix adjoint() const;  // conjugate transpose
    RealMatrix real_part() const;
    RealMatrix imag_part() const;

    std::vector<Complex> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Complex>& v);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex a, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// --- assembly / reshaping -------------------------------------------------

RealMatrix kron(const RealMatrix& a, const RealMatrix& b);
RealMatrix block2x2(const RealMatrix& a11, const RealMatrix& a12, const RealMatrix& a21,
                    const RealMatrix& a22);
RealMatrix block_diag(const RealMatrix& a, const RealMatrix& b);
RealMatrix subblock(const RealMatrix& m, std::size_t i0, std::size_t j0, std::size_t rows,
                    std::size_t cols);

// --- reductions -----------------------------------------------------------

double frobenius_norm(const RealMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
// <A,B>_F = tr(A^T B)
double frobenius_inner(const RealMatrix& a, const RealMatrix& b);
double max_abs(const RealMatrix& m);
double one_norm(const RealMatrix& m);  // max column abs sum
double trace(const RealMatrix& m);

RealMatrix symmetrized(const RealMatrix& m);  // (M + M^T)/2

// --- complex vector helpers -----------------------------------------------

// y = M v for real M, complex v
std::vector<Complex> matvec(const RealMatrix& m, const std::vector<Complex>& v);
// v* w
Complex inner(const std::vector<Complex>& v, const std::vector<Complex>& w);
double norm2(const std::vector<Complex>& v);

}  // namespace oqho
