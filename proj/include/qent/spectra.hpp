#pragma once

#include <vector>

#include "qent/complex_matrix.hpp"

namespace qent {

struct EigenSystem {
    std::vector<double> values;  // descending; ties keep ascending original index
    CMat vectors;                // column j is the eigenvector of values[j]
};

// Hermitian eigendecomposition. Symmetrizes (M + M^dag)/2, checks the
// Hermiticity defect against tol.herm first, then calls LAPACK zheev.
EigenSystem hermitian_spectrum(const CMat& m);
std::vector<double> hermitian_eigenvalues(const CMat& m);

// Singular values, descending (LAPACK zgesdd). Works on rectangular input.
std::vector<double> singular_values(const CMat& m);

// Sum of singular values.
double trace_norm(const CMat& m);

// Largest singular value.
double operator_norm(const CMat& m);

// Hermitian PSD square root via eigendecomposition; negative eigenvalues
// within tol.eig are clipped to zero, beyond that it is a contract error.
CMat psd_sqrt(const CMat& m);

// Hermitian matrix power rho^alpha for alpha >= 0 (used by Renyi entropies);
// eigenvalues below tol.rank contribute zero.
CMat herm_pow(const CMat& m, double alpha);

// Numerical rank = count of eigenvalues (Hermitian) above tol.rank.
std::size_t herm_rank(const CMat& m);

}  // namespace qent
