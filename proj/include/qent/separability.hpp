#pragma once

#include <string>
#include <vector>

#include "qent/state.hpp"

namespace qent {

enum class Verdict { SEPARABLE, ENTANGLED, INCONCLUSIVE };

std::string verdict_name(Verdict v);

// One criterion evaluation across one bipartition. `evidence` is the scalar
// the verdict was read off, `threshold` the firing boundary. Sign conventions:
//   ppt / reduction / choi / breuer / witness:* -> minimum eigenvalue or
//       expectation; fires when evidence < threshold (negative side).
//   realign / permute / majorization / entropic -> excess over the separable
//       bound; fires when evidence > threshold (positive side).
//   det2q -> det(rho^PT); fires when evidence < threshold.
struct CriterionReport {
    std::string criterion;
    std::vector<std::size_t> partition;  // A-side subsystem indices
    Verdict verdict = Verdict::INCONCLUSIVE;
    double evidence = 0.0;
    double threshold = 0.0;
    std::string note;
    CMat witness;  // optional (rows == 0 when absent)
};

// All checks take the n-party density matrix plus the A-side index set.

CriterionReport check_ppt(const CMat& rho, const Dims& dims,
                          const std::vector<std::size_t>& cut_a);
CriterionReport check_reduction(const CMat& rho, const Dims& dims,
                                const std::vector<std::size_t>& cut_a);

// Positive-map checks applied to the B factor: the Choi map (needs dB == 3)
// and the Breuer-Hall map Lambda_red - U (.)^T U† (needs even dB >= 4,
// U antisymmetric unitary; default U = antidiag(1,-1,1,-1,...)).
enum class PositiveMapKind { choi, breuerHall };
CriterionReport check_map(const CMat& rho, const Dims& dims,
                          const std::vector<std::size_t>& cut_a,
                          PositiveMapKind kind, const CMat* breuer_u = nullptr);

CriterionReport check_realignment(const CMat& rho, const Dims& dims,
                                  const std::vector<std::size_t>& cut_a);
CriterionReport check_majorization(const CMat& rho, const Dims& dims,
                                   const std::vector<std::size_t>& cut_a);
CriterionReport check_entropic(const CMat& rho, const Dims& dims,
                               const std::vector<std::size_t>& cut_a, double alpha);
// Two-qubit determinant test; necessary and sufficient, never INCONCLUSIVE.
CriterionReport check_two_qubit_det(const CMat& rho, const Dims& dims);

// Index-permutation family. A test permutes the 2n tensor slots of rho
// (slots 0..n-1 row digits, n..2n-1 column digits); separable states keep
// trace norm <= 1 under every one. Permutations related by row-slot or
// col-slot relabeling, whole-matrix transposition, or the Hermitian input
// transposition give equal norms and collapse to one representative.
struct SlotPermutationTest {
    std::vector<std::size_t> slot_perm;
    std::string label;  // e.g. "(0,3,2,1)"
};
std::vector<SlotPermutationTest> distinct_slot_permutations(std::size_t parties);
CriterionReport check_permutation(const CMat& rho, const Dims& dims,
                                  const std::vector<std::size_t>& slot_perm);
// Runs every deduplicated representative; evidence = worst excess.
CriterionReport check_permutations_all(const CMat& rho, const Dims& dims);

// Entanglement witnesses: expectation below -tau_eig flags entanglement.
struct WitnessOperator {
    CMat matrix;
    std::string kind;
    std::vector<std::size_t> dims;  // factor dims the witness acts on
};
WitnessOperator make_witness_swap(std::size_t d);
WitnessOperator make_witness_fidelity(std::size_t d);
// CHSH witness 2I - B with settings optimized for the given two-qubit state.
WitnessOperator make_witness_chsh(const CMat& rho);
double evaluate_witness(const WitnessOperator& w, const CMat& rho);
CriterionReport check_witness(const std::string& kind, const CMat& rho,
                              const Dims& dims, const std::vector<std::size_t>& cut_a);

// Schmidt rank of a ket across the cut.
std::size_t schmidt_rank(const std::vector<cplx>& psi, const Dims& dims,
                         const std::vector<std::size_t>& cut_a);

// Parses a CLI criterion token -- "ppt", "reduction", "choi", "breuer",
// "realign", "permute", "majorization", "entropic:<alpha>", "det2q",
// "witness:<swap|fidelity|chsh>" -- and runs it across the given cut.
CriterionReport run_criterion(const std::string& token, const State& s,
                              const std::vector<std::size_t>& cut_a);

struct BatteryResult {
    Verdict verdict = Verdict::INCONCLUSIVE;
    std::vector<CriterionReport> reports;
    std::string note;
};

// Runs the requested criteria (default: all applicable) on every listed
// partition; empty partition list means all bipartitions (plus the
// permutation family once, for multipartite input). Combined verdict is
// ENTANGLED as soon as any criterion fires; SEPARABLE only on a sufficiency
// argument (PPT in 2x2/2x3, pure Schmidt rank 1 across every cut); otherwise
// INCONCLUSIVE -- all-cut separability is not sufficient beyond two parties.
BatteryResult battery(const State& s,
                      const std::vector<std::vector<std::size_t>>& partitions = {},
                      const std::vector<std::string>& criteria = {});

// Every bipartition of {0..parties-1}, as the subset containing party 0.
std::vector<std::vector<std::size_t>> all_bipartitions(std::size_t parties);

}  // namespace qent
