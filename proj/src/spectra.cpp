#include "qent/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qent/tolerances.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qent {

namespace {

CMat symmetrize(const CMat& m) {
    CMat h(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return h;
}

}  // namespace

EigenSystem hermitian_spectrum(const CMat& m) {
    require(m.square(), "hermitian_spectrum needs a square matrix");
    const auto& tol = Tolerances::get();
    require(m.herm_defect() <= tol.herm, "matrix is not Hermitian within tolerance");

    const lapack_int n = static_cast<lapack_int>(m.rows());
    CMat a = symmetrize(m);
    std::vector<double> w(m.rows());
    lapack_int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', n, a.data(), n, w.data());
    if (info != 0) throw_numerical("zheev failed, info=" + std::to_string(info));

    // LAPACK returns ascending eigenvalues with eigenvectors in the columns.
    // Reorder to descending; exact ties keep ascending original index, which
    // the stable reverse of an ascending list provides only if we sort by
    // (-value, original ascending index) explicitly.
    std::vector<std::size_t> idx(m.rows());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return w[i] > w[j]; });

    EigenSystem out;
    out.values.resize(m.rows());
    out.vectors = CMat(m.rows(), m.rows());
    for (std::size_t j = 0; j < m.rows(); ++j) {
        out.values[j] = w[idx[j]];
        for (std::size_t r = 0; r < m.rows(); ++r) out.vectors(r, j) = a(r, idx[j]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMat& m) {
    require(m.square(), "hermitian_eigenvalues needs a square matrix");
    const auto& tol = Tolerances::get();
    require(m.herm_defect() <= tol.herm, "matrix is not Hermitian within tolerance");

    const lapack_int n = static_cast<lapack_int>(m.rows());
    CMat a = symmetrize(m);
    std::vector<double> w(m.rows());
    lapack_int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data());
    if (info != 0) throw_numerical("zheev failed, info=" + std::to_string(info));
    std::reverse(w.begin(), w.end());
    return w;
}

std::vector<double> singular_values(const CMat& m) {
    const lapack_int rows = static_cast<lapack_int>(m.rows());
    const lapack_int cols = static_cast<lapack_int>(m.cols());
    CMat a = m;  // zgesdd destroys the input
    std::vector<double> s(std::min(m.rows(), m.cols()));
    // Our row-major buffer is the transpose when read column-major, and
    // transposition preserves singular values.  The column-major path also
    // accepts ldu = ldvt = 1 when no vectors are requested.
    lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'N', cols, rows, a.data(),
                                     std::max<lapack_int>(1, cols), s.data(), nullptr, 1,
                                     nullptr, 1);
    if (info != 0) throw_numerical("zgesdd failed, info=" + std::to_string(info));
    return s;  // already descending
}

double trace_norm(const CMat& m) {
    auto s = singular_values(m);
    double t = 0.0;
    for (double v : s) t += v;
    return t;
}

double operator_norm(const CMat& m) {
    auto s = singular_values(m);
    return s.empty() ? 0.0 : s.front();
}

CMat psd_sqrt(const CMat& m) {
    const auto& tol = Tolerances::get();
    EigenSystem es = hermitian_spectrum(m);
    for (double v : es.values)
        require(v >= -tol.eig, "psd_sqrt of a matrix with negative spectrum");
    const std::size_t n = m.rows();
    CMat out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = std::sqrt(std::max(0.0, es.values[k]));
        if (s == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) {
            cplx vr = es.vectors(r, k) * s;
            for (std::size_t c = 0; c < n; ++c)
                out(r, c) += vr * std::conj(es.vectors(c, k));
        }
    }
    return out;
}

CMat herm_pow(const CMat& m, double alpha) {
    require(alpha >= 0.0, "herm_pow needs alpha >= 0");
    const auto& tol = Tolerances::get();
    EigenSystem es = hermitian_spectrum(m);
    const std::size_t n = m.rows();
    CMat out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = es.values[k];
        if (lam <= tol.rank) continue;
        double s = std::pow(lam, alpha);
        for (std::size_t r = 0; r < n; ++r) {
            cplx vr = es.vectors(r, k) * s;
            for (std::size_t c = 0; c < n; ++c)
                out(r, c) += vr * std::conj(es.vectors(c, k));
        }
    }
    return out;
}

std::size_t herm_rank(const CMat& m) {
    const auto& tol = Tolerances::get();
    auto w = hermitian_eigenvalues(m);
    std::size_t r = 0;
    for (double v : w)
        if (std::abs(v) > tol.rank) ++r;
    return r;
}

}  // namespace qent
