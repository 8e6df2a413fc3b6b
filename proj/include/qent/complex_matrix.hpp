#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qent/errors.hpp"

namespace qent {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Sides are capped at 4096: every algorithm
// in this library is O(d^3) or worse, so anything larger is a caller bug.
inline constexpr std::size_t kMaxSide = 4096;

class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        require(rows <= kMaxSide && cols <= kMaxSide, "matrix side exceeds 4096");
        data_.assign(rows * cols, cplx(0.0, 0.0));
    }

    static CMat identity(std::size_t n) {
        CMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CMat dagger() const;
    CMat transpose() const;
    CMat conj() const;

    cplx trace() const;
    double norm_fro() const;
    double max_abs() const;         // entrywise max modulus
    double herm_defect() const;     // ||M - M^dag||_max, square only

    CMat& operator+=(const CMat& o);
    CMat& operator-=(const CMat& o);
    CMat& operator*=(cplx s);

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cplx s, CMat a) { return a *= s; }
    friend CMat operator*(CMat a, cplx s) { return a *= s; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

// Matrix product (OpenMP over output rows) and the serial reference used by
// the kernel-equivalence tests. Both accumulate in the same k-order, so the
// outputs are bit-identical.
CMat matmul(const CMat& a, const CMat& b);
namespace serial {
CMat matmul(const CMat& a, const CMat& b);
}

CMat operator*(const CMat& a, const CMat& b);

// max |a - b| over entries; shapes must match.
double max_abs_diff(const CMat& a, const CMat& b);

}  // namespace qent
