#pragma once

#include "qent/rng.hpp"
#include "qent/state.hpp"

namespace qent {

// Pauli matrices in the correlation-tensor order: 0 = I, 1 = x, 2 = y, 3 = z.
CMat pauli(std::size_t i);

// Swap ("flip") operator V = sum |i><j| (x) |j><i| on d(x)d, and the
// symmetric/antisymmetric projectors P± = (I ± V)/2.
CMat swap_operator(std::size_t d);
CMat proj_sym(std::size_t d);
CMat proj_anti(std::size_t d);

// |Phi+_d> = d^{-1/2} sum |ii> and its projector.
std::vector<cplx> ket_maxent_vec(std::size_t d);
CMat maxent_projector(std::size_t d);

// Bell basis in the dense-coding order: k in {0,1,2,3} -> {psi-, phi-,
// psi+, phi+}, i.e. |psi_k> = (sigma_k (x) I)|psi-> up to global phase with
// sigma = (I, x, z, y). Constructors return the canonical +-phase vectors.
State make_bell(std::size_t k);
CMat dense_coding_sigma(std::size_t k);

State make_maxent(std::size_t d);
State make_ghz(std::size_t n, std::size_t d);
State make_w(std::size_t n);

// Werner family: W(p) = (1-p) 2/(d^2+d) Psym + p 2/(d^2-d) Panti; and the
// isotropic family with Tr(rho_F P+) = F.
State make_werner(std::size_t d, double p);
State make_isotropic(std::size_t d, double F);

// Four-qubit Smolin state 1/4 sum_k P^bell_k (x) P^bell_k on AB|CD.
State make_smolin();

// The 3(x)3 one-parameter PPT-entangled family (normalization 1/(8a+1)),
// 0 < a < 1.
State make_chessboard(double a);

// m-qubit family rho^(m) = sum_± l0± |Psi_0^±><Psi_0^±| +
// sum_{k≠0} l_k (|Psi_k^+><...| + |Psi_k^-><...|), where |Psi_k^±> =
// (|k_1..k_{m-1}>|0> ± |kbar_1..kbar_{m-1}>|1>)/sqrt2. lk[k-1] holds the
// weight of bit string k = 1..2^{m-1}-1 (k_1 is the most significant bit).
State make_dur_cirac(std::size_t m, double l0p, double l0m,
                     const std::vector<double>& lk);

// The bipartition A(k)|B(k) attached to bit string k: qubit i < m-1 goes to
// the A side iff k_{i+1} = 0; the last qubit is always on the A side.
// Returns the A-side subsystem indices (increasing).
std::vector<std::size_t> dur_cirac_partition(std::size_t m, std::size_t k);

// Closed form: rho^(m) is separable w.r.t. A(k)|B(k) iff l_k >= Delta/2,
// Delta = l0p - l0m >= 0 (equivalent to PPT across that cut).
bool dur_cirac_partition_separable(double l0p, double l0m,
                                   const std::vector<double>& lk, std::size_t k);

// Unextendible product basis Shift = {|000>, |+>|1>|->, |1>|->|+>,
// |->|+>|1>} and the associated state (I - P_Shift)/4.
std::vector<std::vector<cplx>> upb_shift_vectors();
State make_upb_shift_state();

// Totally antisymmetric three-qutrit singlet
// (|012>+|120>+|201>-|021>-|210>-|102>)/sqrt6.
State make_aharonov();

// Two-photon hyperentangled state: singlet in polarization times singlet in
// path, subsystem order [polA, pathA, polB, pathB].
State make_avn_hyper();

// Seeded random families (see rng.hpp for the generator contract).
State make_random_pure(const Dims& dims, std::uint64_t seed);
State make_random_density(const Dims& dims, std::size_t rank, std::uint64_t seed);
State make_random_separable(const Dims& dims, std::size_t terms, std::uint64_t seed);

}  // namespace qent
