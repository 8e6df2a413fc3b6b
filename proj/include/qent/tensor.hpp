#pragma once

#include <cstdint>
#include <vector>

#include "qent/complex_matrix.hpp"

namespace qent {

using Dims = std::vector<std::size_t>;

// Subsystem 0 is the leftmost tensor factor throughout: a basis index i of
// the composite space decomposes as i = ((i0*d1 + i1)*d2 + i2)... (row-major
// multi-index, "big digit first").
std::size_t dims_product(const Dims& dims);
void check_dims_match(const Dims& dims, std::size_t dim, const char* where);

// Unravel/ravel between flat index and per-subsystem digits.
void unravel(std::size_t flat, const Dims& dims, std::size_t* digits);
std::size_t ravel(const std::size_t* digits, const Dims& dims);

CMat kron(const CMat& a, const CMat& b);
std::vector<cplx> kron_vec(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Trace out every subsystem not in `keep`; kept subsystems stay in their
// original relative order. `keep` must be strictly increasing.
CMat partial_trace(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& keep);

// Transpose the subsystems listed in `which` (strictly increasing).
CMat partial_transpose(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& which);

// Bipartite realignment R[(m,mu),(n,nu)] = rho[(m,n),(mu,nu)] where m,mu
// index the dA-dimensional factor and n,nu the dB one. Output is dA^2 x dB^2.
CMat realign(const CMat& rho, std::size_t da, std::size_t db);

// Reorder subsystems of a ket / density matrix: perm[k] = which original
// subsystem lands at position k of the output.
std::vector<cplx> permute_systems_vec(const std::vector<cplx>& psi, const Dims& dims,
                                      const std::vector<std::size_t>& perm);
CMat permute_systems(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& perm);

// Generic index-permutation map over the 2n tensor slots of an n-partite
// density matrix. Slots 0..n-1 are the row (ket) indices r_1..r_n, slots
// n..2n-1 the column (bra) indices c_1..c_n; `slot_perm[s]` = which source
// slot feeds output slot s. The output is reshaped back to a matrix whose
// row gathers the first n output slots (identity slot_perm returns rho,
// slot_perm (0,2,1,3) on 2 systems is the realignment above up to reshape,
// swapping slots 1 and 3 is the partial transpose on system B).
// Output row dims are the dims of the source slots feeding slots 0..n-1.
CMat apply_slot_permutation(const CMat& rho, const Dims& dims,
                            const std::vector<std::size_t>& slot_perm);

// Serial reference kernels (same contract, plain loops) for equivalence tests.
namespace serial {
CMat kron(const CMat& a, const CMat& b);
CMat partial_trace(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& keep);
CMat partial_transpose(const CMat& rho, const Dims& dims, const std::vector<std::size_t>& which);
CMat realign(const CMat& rho, std::size_t da, std::size_t db);
}  // namespace serial

}  // namespace qent
