#pragma once

#include <string>
#include <vector>

#include "qent/state.hpp"

namespace qent {

// Exact commutant projections: output is the Werner state with the same Tr(rho V)
// (resp. the isotropic state with the same Tr(rho P+)). Both idempotent.
CMat twirl_werner(const CMat& rho, std::size_t d);
CMat twirl_isotropic(const CMat& rho, std::size_t d);

// Local contraction pair; both A†A and B†B must sit below I (within 1e-10).
struct LocalFilter {
    CMat A;
    CMat B;

    void validate() const;
    // Rescales so the larger of ||A†A||, ||B†B|| is exactly 1 (maximizes the
    // success probability without changing the conditional output).
    LocalFilter normalized() const;
};

struct FilterOutcome {
    bool success = false;
    double probability = 0.0;
    CMat state;  // empty on failure
};
FilterOutcome local_filter(const CMat& rho, std::size_t da, std::size_t db,
                           const LocalFilter& f);

// Builds the filter M_psi (x) I from the rho^PT eigenvector with the most
// negative eigenvalue; for any NPT two-qubit input, filtering pushes the
// singlet fraction above 1/2. Contract error if rho is PPT.
LocalFilter filter_from_ppt_violation(const CMat& rho);

// One recurrence round at the fidelity level, and its success probability.
double recurrence_map(double F);
double recurrence_success_probability(double F);

// Exact 16-dimensional two-copy simulation of one recurrence round: bilateral
// CNOTs, target measurement, postselection on agreeing outcomes, deterministic
// twirl back to isotropic form.
struct RecurrenceStep {
    CMat state;  // 2-qubit output
    double fidelity = 0.0;
    double pSuccess = 0.0;
};
RecurrenceStep recurrence_step_exact(const CMat& rho);

struct DistillationRound {
    double F = 0.0;
    double pSuccess = 0.0;
    double survivingFraction = 0.0;
};
struct DistillationTrace {
    std::vector<DistillationRound> rounds;
    double finalYieldEstimate = 0.0;
    bool reachedTarget = false;
};
// Iterates recurrence_map from F0 until targetF (error if F0 <= 1/2). With
// exact = true each round runs recurrence_step_exact on the isotropic state
// instead of the closed form.
DistillationTrace distill_recurrence(double F0, double targetF,
                                     std::size_t maxRounds = 64, bool exact = false);

// max{0, 1 - H({p})} distillation rate of a Bell-diagonal state with spectrum p.
double hashing_rate(const std::vector<double>& bellDiagP);

// Distillability via the reduction criterion (sufficient, not necessary).
bool reduction_distillable(const CMat& rho, std::size_t da, std::size_t db);

// LOCC convertibility between bipartite pure states given their Schmidt
// probability vectors: phi majorizes psi <=> deterministic psi -> phi; the
// optimal conversion probability is min_k E_k(psi)/E_k(phi).
bool nielsen_can_transform(const std::vector<double>& lamPsi,
                           const std::vector<double>& lamPhi);
double vidal_probability(const std::vector<double>& lamPsi,
                         const std::vector<double>& lamPhi);

// Exact teleportation of one qubit through a two-qubit resource: Bell
// measurement on (input, A), correction sigma_k on B. The protocol is matched
// to the singlet, so the resource's psi- fraction drives the fidelity.
State teleport_state(const CMat& resource, const std::vector<cplx>& psi_in);
double teleport_fidelity(const CMat& resource, const std::vector<cplx>& psi_in);

struct TeleportationReport {
    double resourceFraction = 0.0;   // <psi-|rho|psi->
    double analyticFidelity = 0.0;   // (2F+1)/3 via the twirled resource's Choi
    double axialAverage = 0.0;       // mean over the six axis states
    double haarAverage = 0.0;        // seeded Haar sample mean
    std::size_t haarSamples = 0;
};
TeleportationReport simulate_teleportation(const CMat& resource,
                                           std::size_t haarSamples = 2000,
                                           std::uint64_t seed = 1);

struct DenseCodingReport {
    std::vector<State> encoded;      // sigma_k applied to Alice's half
    double maxCrossOverlap = 0.0;    // largest |<i|j>| between distinct codes
    double bits = 0.0;               // log2(#perfectly distinguishable)
};
DenseCodingReport simulate_dense_coding();

struct SwappingReport {
    std::vector<double> outcomeProbabilities;  // Bell measurement on BC
    std::vector<double> correctedFidelity;     // F(AD after correction, phi+)
};
SwappingReport simulate_swapping();

struct KrausChannel {
    std::vector<CMat> ops;  // each dOut x dIn

    std::size_t dim_in() const;
    std::size_t dim_out() const;
    void validate() const;  // sum V†V = I within 1e-10
    CMat apply(const CMat& rho) const;
};

// State-channel correspondence rho_Lambda = (I (x) Lambda)(P+); the left
// reduction is I/dIn by construction (checked).
CMat channel_to_state(const KrausChannel& ch);
// Coherent information S(rho_B) - S(rho_AB) of a bipartite state.
double state_coherent_info(const CMat& rho, std::size_t da, std::size_t db);

// The binary phase-damping channel {sqrt(p) I, sqrt(1-p) sigma_z}.
KrausChannel phase_channel(double p);

}  // namespace qent
