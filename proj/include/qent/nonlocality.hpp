#pragma once

#include <array>
#include <functional>
#include <vector>

#include "qent/state.hpp"

namespace qent {

using Vec3 = std::array<double, 3>;

// Full correlation tensor of an n-qubit state: 4^n real components
// t_{i1...in} = Tr[rho (sigma_{i1} (x) ... (x) sigma_{in})], index 0 = identity,
// flat index = base-4 ravel (first site = most significant digit).
struct CorrelationTensor {
    std::size_t n = 0;
    std::vector<double> t;

    double at(const std::vector<std::size_t>& idx) const;
};

CorrelationTensor correlation_tensor(const CMat& rho, std::size_t n);

// Two unit vectors per site; site 0 is the first entry.
struct BellSettings {
    std::vector<std::array<Vec3, 2>> site;

    void validate() const;  // unit norm within 1e-12
};

// a.sigma observable for a unit vector.
CMat axis_observable(const Vec3& a);

// CHSH operator a1.(b1+b2) + a2.(b1-b2) pattern and its expectation.
CMat chsh_operator(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2);
double bell_chsh_value(const CMat& rho, const BellSettings& settings);

// Horodecki criterion data for a two-qubit state: M = sum of the two largest
// eigenvalues of T^T T (violation iff M > 1), B = sqrt(max{0, sqrt(M) - 1}),
// best value 2 sqrt(M), plus the settings achieving it.
struct ChshAnalysis {
    double M = 0.0;
    double B = 0.0;
    double max_value = 0.0;
    BellSettings optimal;
};
ChshAnalysis chsh_analyze(const CMat& rho);
double chsh_M(const CMat& rho);
double chsh_B(const CMat& rho);

// WWZB series. E is the full correlation table over the 2^n setting choices
// k in {0,1}^n (k_j picks site j's first or second setting), flat binary ravel.
// lhs = sum_s |sum_k (-1)^<k,s> E(k)|; LHV bound 2^n.
struct WwzbResult {
    double lhs = 0.0;
    double bound = 0.0;
    bool pass = false;
};
WwzbResult wwzb_check(const std::vector<double>& E, std::size_t n);

// Correlation table of a state for given settings (n <= 6).
std::vector<double> correlation_table(const CMat& rho, const BellSettings& settings);

// Single full-correlation expectation <a1.sigma (x) ... (x) an.sigma>.
double correlation_value(const CMat& rho, const std::vector<Vec3>& axes);

// Necessary-and-sufficient tensor form: rotate the (3^n-component) correlation
// part per-site by the given frames R_j, then maximize
// sum over k in {1,2}^n of |t'_k| prod_j c_j(k_j) over unit two-vectors c_j.
// Passes (admits the inequality set for these frames) iff max <= 1 + 1e-9.
struct Frame3 {
    std::array<double, 9> r;  // row-major 3x3 rotation
};
bool wwzb_tensor_check(const CorrelationTensor& t, const std::vector<Frame3>& frames);

// Bell-Mermin-type operator for a pair of two-qubit carriers (polarization and
// path per photon), subsystem order [polA, pathA, polB, pathB]; eigenoperator
// of the doubled singlet with eigenvalue 9, LHV bound 7.
CMat avn_operator();
double ghz_avn_value(const State& s);

// CHSH monogamy across the AB and AC pairs of a 3-qubit state. The <= 4 bound
// is guaranteed when both settings share the A-side pair.
struct TonerResult {
    double vAB = 0.0;
    double vAC = 0.0;
    double sum = 0.0;  // |vAB| + |vAC|
    bool pass = false;
};
TonerResult toner_monogamy(const CMat& rho, const BellSettings& settingsAB,
                           const BellSettings& settingsAC);

}  // namespace qent
