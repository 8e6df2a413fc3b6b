#include "qent/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qent/tolerances.hpp"

namespace qent {

State State::make_pure(Dims dims, std::vector<cplx> amps) {
    check_dims_match(dims, amps.size(), "make_pure");
    State s;
    s.kind = Kind::pure;
    s.dims = std::move(dims);
    s.psi = std::move(amps);
    return s;
}

State State::make_density(Dims dims, CMat rho) {
    require(rho.square(), "make_density needs a square matrix");
    check_dims_match(dims, rho.rows(), "make_density");
    State s;
    s.kind = Kind::density;
    s.dims = std::move(dims);
    s.rho = std::move(rho);
    return s;
}

CMat State::density() const {
    if (kind == Kind::density) return rho;
    return dyad(psi);
}

void State::validate() const {
    const auto& tol = Tolerances::get();
    if (kind == Kind::pure) {
        double n = vec_norm(psi);
        require(std::abs(n - 1.0) <= tol.tr, "ket is not normalized");
        return;
    }
    require(rho.herm_defect() <= tol.herm, "density matrix is not Hermitian");
    require(std::abs(rho.trace().real() - 1.0) <= tol.tr &&
                std::abs(rho.trace().imag()) <= tol.tr,
            "density matrix trace is not 1");
    auto w = hermitian_eigenvalues(rho);
    require(w.empty() || w.back() >= -tol.eig, "density matrix has negative eigenvalues");
}

State State::with_dims(Dims new_dims) const {
    require(dims_product(new_dims) == dim(), "with_dims: total dimension changed");
    State s = *this;
    s.dims = std::move(new_dims);
    return s;
}

double vec_norm(const std::vector<cplx>& psi) {
    double s = 0.0;
    for (const cplx& z : psi) s += std::norm(z);
    return std::sqrt(s);
}

void normalize(std::vector<cplx>& psi) {
    double n = vec_norm(psi);
    require(n > Tolerances::get().prob, "cannot normalize a (near-)zero vector");
    for (cplx& z : psi) z /= n;
}

CMat dyad(const std::vector<cplx>& psi) { return dyad(psi, psi); }

CMat dyad(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    CMat out(a.size(), b.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) out(r, c) = a[r] * std::conj(b[c]);
    return out;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    require(a.size() == b.size(), "inner: size mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

SchmidtDecomposition schmidt(const std::vector<cplx>& psi, const Dims& dims,
                             const std::vector<std::size_t>& cut_a) {
    check_dims_match(dims, psi.size(), "schmidt");
    require(!cut_a.empty() && cut_a.size() < dims.size(),
            "schmidt cut must be a proper nonempty subset");
    const auto& tol = Tolerances::get();

    // Bring the A-side subsystems to the front, then reshape to dA x dB.
    std::vector<std::size_t> perm = cut_a;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (!std::binary_search(cut_a.begin(), cut_a.end(), k)) perm.push_back(k);
    std::vector<cplx> v = permute_systems_vec(psi, dims, perm);

    std::size_t da = 1, db = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        (i < cut_a.size() ? da : db) *= dims[perm[i]];

    CMat m(da, db);
    for (std::size_t a = 0; a < da; ++a)
        for (std::size_t b = 0; b < db; ++b) m(a, b) = v[a * db + b];

    // rho_A = M M^dag; its eigenvectors are the left Schmidt vectors, the
    // right ones follow by contraction f_i = M^dag e_i / a_i.
    EigenSystem es = hermitian_spectrum(matmul(m, m.dagger()));

    const std::size_t k = std::min(da, db);
    SchmidtDecomposition out;
    out.coeffs.resize(k);
    out.vectors_a = CMat(da, k);
    out.vectors_b = CMat(db, k);
    out.rank = 0;
    for (std::size_t i = 0; i < k; ++i) {
        double lam = std::max(0.0, es.values[i]);
        out.coeffs[i] = std::sqrt(lam);
        for (std::size_t r = 0; r < da; ++r) out.vectors_a(r, i) = es.vectors(r, i);
        // Rank counts at the probability level (eigenvalues of rho_A), the
        // same cutoff herm_rank uses; thresholding the amplitudes instead
        // would promote sqrt-of-noise terms to full Schmidt directions.
        if (lam > tol.rank) {
            ++out.rank;
            for (std::size_t b = 0; b < db; ++b) {
                cplx s = 0.0;
                for (std::size_t a = 0; a < da; ++a) s += std::conj(es.vectors(a, i)) * m(a, b);
                out.vectors_b(b, i) = s / out.coeffs[i];
            }
        }
    }

    // Complete the right vectors beyond the Schmidt rank by Gram-Schmidt
    // against the columns already placed.
    for (std::size_t i = out.rank; i < k; ++i) {
        for (std::size_t cand = 0; cand < db; ++cand) {
            std::vector<cplx> w(db, 0.0);
            w[cand] = 1.0;
            for (std::size_t j = 0; j < i; ++j) {
                cplx ov = 0.0;
                for (std::size_t b = 0; b < db; ++b) ov += std::conj(out.vectors_b(b, j)) * w[b];
                for (std::size_t b = 0; b < db; ++b) w[b] -= ov * out.vectors_b(b, j);
            }
            double n = vec_norm(w);
            if (n > 0.5) {  // safely independent of the previous columns
                for (std::size_t b = 0; b < db; ++b) out.vectors_b(b, i) = w[b] / n;
                break;
            }
        }
    }
    return out;
}

State purify(const CMat& rho, const Dims& dims) {
    require(rho.square(), "purify needs a square matrix");
    check_dims_match(dims, rho.rows(), "purify");
    const auto& tol = Tolerances::get();
    EigenSystem es = hermitian_spectrum(rho);

    std::size_t rank = 0;
    for (double v : es.values)
        if (v > tol.rank) ++rank;
    if (rank == 0) throw_contract("purify of a zero matrix");

    const std::size_t d = rho.rows();
    std::vector<cplx> psi(d * rank, 0.0);
    for (std::size_t i = 0; i < rank; ++i) {
        double s = std::sqrt(std::max(0.0, es.values[i]));
        for (std::size_t r = 0; r < d; ++r) psi[r * rank + i] = s * es.vectors(r, i);
    }
    Dims ndims = dims;
    ndims.push_back(rank);
    return State::make_pure(std::move(ndims), std::move(psi));
}

BipartiteView bipartite_view(const CMat& rho, const Dims& dims,
                             const std::vector<std::size_t>& cut_a) {
    require(rho.square(), "bipartite_view needs a square matrix");
    check_dims_match(dims, rho.rows(), "bipartite_view");
    require(!cut_a.empty() && cut_a.size() < dims.size(),
            "bipartite cut must be a nonempty proper subset");
    for (std::size_t i = 0; i < cut_a.size(); ++i) {
        require(cut_a[i] < dims.size(), "bipartite cut index out of range");
        if (i > 0) require(cut_a[i - 1] < cut_a[i], "bipartite cut must be strictly increasing");
    }

    std::vector<std::size_t> perm = cut_a;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (std::find(cut_a.begin(), cut_a.end(), k) == cut_a.end()) perm.push_back(k);

    BipartiteView v;
    v.cut_a = cut_a;
    v.da = 1;
    for (std::size_t i : cut_a) v.da *= dims[i];
    v.db = dims_product(dims) / v.da;
    bool identity = true;
    for (std::size_t k = 0; k < perm.size(); ++k) identity = identity && perm[k] == k;
    v.rho = identity ? rho : permute_systems(rho, dims, perm);
    return v;
}

double shannon2(const std::vector<double>& p) {
    double s = 0.0;
    for (double v : p) {
        require(v >= -Tolerances::get().eig, "negative probability in shannon2");
        if (v > 0.0) s -= v * std::log2(v);
    }
    return s;
}

double binary_entropy(double p) {
    require(p >= -Tolerances::get().eig && p <= 1.0 + Tolerances::get().eig,
            "binary_entropy argument outside [0,1]");
    p = std::clamp(p, 0.0, 1.0);
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

double von_neumann_entropy(const CMat& rho) {
    auto w = hermitian_eigenvalues(rho);
    for (double& v : w) v = std::max(0.0, v);
    return shannon2(w);
}

double renyi_entropy(const CMat& rho, double alpha) {
    require(alpha >= 0.0, "Renyi order must be >= 0");
    const auto& tol = Tolerances::get();
    if (std::isinf(alpha)) return renyi_inf_entropy(rho);
    if (alpha == 1.0) return von_neumann_entropy(rho);
    auto w = hermitian_eigenvalues(rho);
    if (alpha == 0.0) {
        std::size_t r = 0;
        for (double v : w)
            if (v > tol.rank) ++r;
        return std::log2(static_cast<double>(std::max<std::size_t>(r, 1)));
    }
    double s = 0.0;
    for (double v : w)
        if (v > 0.0) s += std::pow(v, alpha);
    return std::log2(s) / (1.0 - alpha);
}

double renyi_inf_entropy(const CMat& rho) {
    auto w = hermitian_eigenvalues(rho);
    require(!w.empty(), "empty matrix");
    return -std::log2(std::max(w.front(), std::numeric_limits<double>::min()));
}

}  // namespace qent
