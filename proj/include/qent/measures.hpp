#pragma once

#include <string>
#include <vector>

#include "qent/state.hpp"

namespace qent {

struct MeasureValue {
    std::string measure;
    double value = 0.0;
    bool exact = true;  // closed form vs lower bound
};

// Entropy of entanglement S(rho_A) across cut_a (pure states only).
double entropy_of_entanglement(const State& s, const std::vector<std::size_t>& cut_a);

// Pure-state concurrence sqrt(2(1 - Tr rho_A^2)) across cut_a.
double concurrence_pure(const State& s, const std::vector<std::size_t>& cut_a);

// Wootters concurrence and entanglement of formation for two-qubit densities.
double concurrence_2q(const CMat& rho);
double eof_2q(const CMat& rho);

// Lower bounds on mixed-state concurrence across the cut:
//   normBound = sqrt(2/(m(m-1))) * (max(||rho^PT||_1, ||R(rho)||_1) - 1),
//               m = min(dA, dB), clipped at 0;
//   twoCopyWitnessBound = -<W~> on rho(x)rho, clipped at 0.
struct ConcurrenceBounds {
    double normBound = 0.0;
    double twoCopyWitnessBound = 0.0;
};
ConcurrenceBounds concurrence_lower_bounds(const CMat& rho, const Dims& dims,
                                           const std::vector<std::size_t>& cut_a);

// N = (||rho^PT||_1 - 1)/2 and E_N = log2 ||rho^PT||_1.
double negativity(const CMat& rho, const Dims& dims,
                  const std::vector<std::size_t>& cut_a);
double log_negativity(const CMat& rho, const Dims& dims,
                      const std::vector<std::size_t>& cut_a);

// Singlet fraction F = Tr(rho P+_d) of a d(x)d state (d inferred), and the
// teleportation fidelity formula f = (dF + 1)/(d + 1).
double singlet_fraction(const CMat& rho);
double teleport_fidelity(const CMat& rho);

// Vidal monotones E_k = sum_{i=k..d} lambda_i (descending Schmidt
// probabilities), k = 1..d; E_1 = 1 on normalized states.
std::vector<double> vidal_monotones(const State& s, const std::vector<std::size_t>& cut_a);

// tau_p = elementary symmetric polynomial e_p of the Schmidt probabilities;
// tau_1 = 1, tau_p = 0 beyond the Schmidt rank.
double tau_measures(const State& s, const std::vector<std::size_t>& cut_a, std::size_t p);

// Residual tangle C^2(A:BC) - C^2(AB) - C^2(AC) of a three-qubit ket. Tiny
// negative noise (>= -1e-6) clips to 0; lower values raise a numerical error.
double three_tangle(const State& s);

enum class SlocClass { PRODUCT, BISEP_A, BISEP_B, BISEP_C, W_CLASS, GHZ_CLASS };
std::string sloc_class_name(SlocClass c);
// Classification of a three-qubit ket by single-party reduction ranks;
// among the fully entangled, GHZ_CLASS iff three_tangle > tol.cls.
SlocClass sloc_class_3q(const State& s);

// Coherent information S(rho_B) - S(rho_AB); may be negative.
double coherent_information(const CMat& rho, const Dims& dims,
                            const std::vector<std::size_t>& cut_a);

// Closed-form relative entropy of entanglement for the d(x)d Werner family
// (0 for p <= 1/2; see the d=2 domain note in the implementation).
double werner_relent_reference(std::size_t d, double p);

// Distillable-entanglement reference for mixtures of exactly two Bell
// projectors: 1 - H(p). Contract error on any other input.
double ed_two_bell_reference(const CMat& rho);

// Parses CLI measure tokens -- ee, conc, eof, neg, logneg, fsing, ftel, ek,
// tau:<p>, tangle3, coh, relent-werner -- against a state and cut; "ek"
// expands to one entry per k.
std::vector<MeasureValue> run_measures(const std::vector<std::string>& tokens,
                                       const State& s,
                                       const std::vector<std::size_t>& cut_a);

}  // namespace qent
