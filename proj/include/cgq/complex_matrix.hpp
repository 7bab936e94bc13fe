#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cgq {

using c64 = std::complex<double>;

// Dense row-major complex matrix. Sized for few-qubit work (dims <= 16 or so);
// everything is O(n^3) at worst and no cleverness is attempted.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, c64{0.0, 0.0}) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    c64& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const c64& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    c64& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const c64& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    const std::vector<c64>& data() const { return data_; }
    std::vector<c64>& data() { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(c64 scale);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<c64> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(c64 scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix adjoint(const ComplexMatrix& m);
c64 trace(const ComplexMatrix& m);

// Kronecker product; the first factor owns the slow (most significant) index,
// so (kron(a, b))((i,k),(j,l)) = a(i,j) * b(k,l) with row index i*b.rows()+k.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |a_ij - b_ij|; the workhorse metric for closeness checks.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

// max_ij |(m - m^dag)_ij|
double hermiticity_defect(const ComplexMatrix& m);

} // namespace cgq
