#pragma once

#include <string>
#include <vector>

#include "qent/spectra.hpp"
#include "qent/tensor.hpp"

namespace qent {

// A state is either a ket or a density matrix over an explicit subsystem
// decomposition. This mirrors the QSTATE file format one-to-one.
struct State {
    enum class Kind { pure, density };
    Kind kind = Kind::pure;
    Dims dims;
    std::vector<cplx> psi;  // kind == pure
    CMat rho;               // kind == density

    static State make_pure(Dims dims, std::vector<cplx> amps);
    static State make_density(Dims dims, CMat rho);

    std::size_t dim() const { return dims_product(dims); }
    std::size_t parties() const { return dims.size(); }
    bool is_pure() const { return kind == Kind::pure; }

    // |psi><psi| for kets, rho unchanged for density inputs.
    CMat density() const;

    // Contract checks: normalization for kets; Hermiticity, unit trace and
    // positivity (within tolerances) for density matrices.
    void validate() const;

    // Reinterpret the same underlying state with a different factorization
    // of the same total dimension (e.g. merge qubits into a 4-level system).
    State with_dims(Dims new_dims) const;
};

void normalize(std::vector<cplx>& psi);
double vec_norm(const std::vector<cplx>& psi);
CMat dyad(const std::vector<cplx>& psi);  // |psi><psi|
CMat dyad(const std::vector<cplx>& a, const std::vector<cplx>& b);  // |a><b|
cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b);  // <a|b>

// Schmidt decomposition across the bipartite cut (cut_a | rest), where cut_a
// lists the subsystems of the A side (strictly increasing). Coefficients are
// descending and nonnegative; vectors are columns of unitaries completed by
// Gram-Schmidt beyond the Schmidt rank.
struct SchmidtDecomposition {
    std::vector<double> coeffs;   // length min(dA, dB), descending
    CMat vectors_a;               // dA x min(dA,dB), column i = |e_i>
    CMat vectors_b;               // dB x min(dA,dB), column i = |f_i>
    std::size_t rank;             // coefficients above tol.rank
};
SchmidtDecomposition schmidt(const std::vector<cplx>& psi, const Dims& dims,
                             const std::vector<std::size_t>& cut_a);

// Purification of rho on H ⊗ H_aux: sum_i sqrt(lambda_i) |e_i>|i>, with
// aux dimension = rank(rho) rounded up to at least 1.
State purify(const CMat& rho, const Dims& dims);

// Reorders an n-party density matrix so the cut_a subsystems come first and
// merges each side into a single factor (da x db bipartite layout).
struct BipartiteView {
    CMat rho;
    std::size_t da = 0, db = 0;
    std::vector<std::size_t> cut_a;
};
BipartiteView bipartite_view(const CMat& rho, const Dims& dims,
                             const std::vector<std::size_t>& cut_a);

// Base-2 entropies of a Hermitian PSD spectrum / density matrix.
double shannon2(const std::vector<double>& p);        // -sum p log2 p
double binary_entropy(double p);                      // H(p), base 2
double von_neumann_entropy(const CMat& rho);
// Renyi entropy of order alpha >= 0; alpha==1 -> von Neumann,
// alpha==0 -> log2 rank, alpha==inf handled by renyi_inf.
double renyi_entropy(const CMat& rho, double alpha);
double renyi_inf_entropy(const CMat& rho);

}  // namespace qent
