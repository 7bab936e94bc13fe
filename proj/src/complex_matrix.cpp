#include "cgq/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "cgq/errors.hpp"

namespace cgq {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

namespace {
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw invalid_input_error("matrix shape mismatch");
}
} // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(c64 scale) {
    for (auto& x : data_) x *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(c64 scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw invalid_input_error("matrix product shape mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const c64 aik = a.at(i, k);
            if (aik == c64{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    ComplexMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(j, i) = std::conj(m.at(i, j));
    return out;
}

c64 trace(const ComplexMatrix& m) {
    if (!m.square()) throw invalid_input_error("trace of non-square matrix");
    c64 t{0.0, 0.0};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const c64 aij = a.at(i, j);
            if (aij == c64{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    return m;
}

double max_abs(const ComplexMatrix& m) {
    double v = 0.0;
    for (const auto& x : m.data()) v = std::max(v, std::abs(x));
    return v;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& x : m.data()) s += std::norm(x);
    return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (!m.square()) throw invalid_input_error("hermiticity defect of non-square matrix");
    double d = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            d = std::max(d, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return d;
}

} // namespace cgq
