#include "qent/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qent {

CMat CMat::dagger() const {
    CMat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

CMat CMat::transpose() const {
    CMat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

CMat CMat::conj() const {
    CMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

cplx CMat::trace() const {
    require(square(), "trace of non-square matrix");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::norm_fro() const {
    double s = 0.0;
    for (const cplx& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double CMat::herm_defect() const {
    require(square(), "herm_defect of non-square matrix");
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

CMat& CMat::operator+=(const CMat& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

CMat& CMat::operator-=(const CMat& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "shape mismatch in -=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

CMat& CMat::operator*=(cplx s) {
    for (cplx& z : data_) z *= s;
    return *this;
}

namespace serial {
CMat matmul(const CMat& a, const CMat& b) {
    require(a.cols() == b.rows(), "shape mismatch in matmul");
    CMat out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}
}  // namespace serial

CMat matmul(const CMat& a, const CMat& b) {
    require(a.cols() == b.rows(), "shape mismatch in matmul");
    CMat out(a.rows(), b.cols());
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

CMat operator*(const CMat& a, const CMat& b) { return matmul(a, b); }

double max_abs_diff(const CMat& a, const CMat& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

}  // namespace qent
