#include "qent/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "qent/errors.hpp"
#include "qent/tolerances.hpp"
#include "qent/zoo.hpp"

namespace qent {

namespace {

// Descending Schmidt probabilities of a ket across cut_a.
std::vector<double> schmidt_probs(const State& s, const std::vector<std::size_t>& cut_a) {
    require(s.is_pure(), "pure-state measure applied to a density matrix");
    SchmidtDecomposition sd = schmidt(s.psi, s.dims, cut_a);
    std::vector<double> p(sd.coeffs.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = sd.coeffs[i] * sd.coeffs[i];
    return p;
}

double re_trace_prod(const CMat& a, const CMat& b) {  // Re Tr(a b)
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s += std::real(a(r, c) * b(c, r));
    return s;
}

// Spin flip (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
CMat spin_flipped(const CMat& rho) {
    CMat yy = kron(pauli(2), pauli(2));
    return yy * rho.conj() * yy;
}

std::size_t maxent_side(const CMat& rho, const char* who) {
    require(rho.square(), std::string(who) + " needs a square density matrix");
    std::size_t d = static_cast<std::size_t>(std::llround(std::sqrt(double(rho.rows()))));
    require(d >= 2 && d * d == rho.rows(),
            std::string(who) + " needs a d (x) d system with equal sides");
    return d;
}

double pt_trace_norm(const CMat& rho, const Dims& dims,
                     const std::vector<std::size_t>& cut_a) {
    BipartiteView v = bipartite_view(rho, dims, cut_a);
    CMat g = partial_transpose(v.rho, {v.da, v.db}, {0});
    double s = 0.0;  // Hermitian, so the trace norm is just sum |eigenvalue|
    for (double lam : hermitian_eigenvalues(g)) s += std::abs(lam);
    return s;
}

}  // namespace

double entropy_of_entanglement(const State& s, const std::vector<std::size_t>& cut_a) {
    return shannon2(schmidt_probs(s, cut_a));
}

double concurrence_pure(const State& s, const std::vector<std::size_t>& cut_a) {
    double purity = 0.0;
    for (double p : schmidt_probs(s, cut_a)) purity += p * p;
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double concurrence_2q(const CMat& rho) {
    require(rho.square() && rho.rows() == 4, "concurrence_2q needs a two-qubit state");
    std::vector<double> lam = singular_values(psd_sqrt(rho) * psd_sqrt(spin_flipped(rho)));
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double eof_2q(const CMat& rho) {
    double c = concurrence_2q(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

ConcurrenceBounds concurrence_lower_bounds(const CMat& rho, const Dims& dims,
                                           const std::vector<std::size_t>& cut_a) {
    BipartiteView v = bipartite_view(rho, dims, cut_a);
    std::size_t m = std::min(v.da, v.db);
    require(m >= 2, "concurrence bounds need both sides at least two-dimensional");
    Dims two = {v.da, v.db};

    ConcurrenceBounds out;
    double excess = std::max(pt_trace_norm(v.rho, two, {0}),
                             trace_norm(realign(v.rho, v.da, v.db))) -
                    1.0;
    out.normBound = std::max(0.0, std::sqrt(2.0 / (double(m) * double(m - 1))) * excess);

    // Two-copy witness 2P+(x)P- + 2P-(x)P- - 4P-(x)P- on (A,A')(B,B'); the
    // sum collapses to 2(P+ - P-)(x)P- = 2 V_AA' (x) P-_BB'.
    CMat sigma = kron(v.rho, v.rho);  // ordered (A, B, A', B')
    sigma = permute_systems(sigma, {v.da, v.db, v.da, v.db}, {0, 2, 1, 3});
    CMat w = kron(swap_operator(v.da), proj_anti(v.db));
    w *= 2.0;
    out.twoCopyWitnessBound = std::max(0.0, -re_trace_prod(w, sigma));
    return out;
}

double negativity(const CMat& rho, const Dims& dims,
                  const std::vector<std::size_t>& cut_a) {
    return 0.5 * (pt_trace_norm(rho, dims, cut_a) - 1.0);
}

double log_negativity(const CMat& rho, const Dims& dims,
                      const std::vector<std::size_t>& cut_a) {
    return std::log2(pt_trace_norm(rho, dims, cut_a));
}

double singlet_fraction(const CMat& rho) {
    std::size_t d = maxent_side(rho, "singlet_fraction");
    return re_trace_prod(maxent_projector(d), rho);
}

double teleport_fidelity(const CMat& rho) {
    double d = double(maxent_side(rho, "teleport_fidelity"));
    return (d * singlet_fraction(rho) + 1.0) / (d + 1.0);
}

std::vector<double> vidal_monotones(const State& s, const std::vector<std::size_t>& cut_a) {
    std::vector<double> p = schmidt_probs(s, cut_a);
    std::vector<double> ek(p.size());
    double tail = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) {
        tail += p[i];
        ek[i] = tail;  // ek[k-1] = sum of the d-k+1 smallest probabilities
    }
    return ek;
}

double tau_measures(const State& s, const std::vector<std::size_t>& cut_a, std::size_t p) {
    std::vector<double> lam = schmidt_probs(s, cut_a);
    if (p > lam.size()) return 0.0;
    std::vector<double> e(p + 1, 0.0);  // elementary symmetric polynomials e_0..e_p
    e[0] = 1.0;
    for (double l : lam)
        for (std::size_t j = p; j >= 1; --j) e[j] += l * e[j - 1];
    return e[p];
}

double three_tangle(const State& s) {
    require(s.is_pure() && s.dims == Dims{2, 2, 2}, "three_tangle needs a three-qubit ket");
    double ca = concurrence_pure(s, {0});
    CMat rho = s.density();
    double cab = concurrence_2q(partial_trace(rho, s.dims, {0, 1}));
    double cac = concurrence_2q(partial_trace(rho, s.dims, {0, 2}));
    double tau = ca * ca - cab * cab - cac * cac;
    if (tau < 0.0) {
        if (tau < -1e-6)
            throw_numerical("three_tangle: residual tangle " + std::to_string(tau) +
                            " is negative beyond numerical noise");
        tau = 0.0;
    }
    return tau;
}

std::string sloc_class_name(SlocClass c) {
    switch (c) {
        case SlocClass::PRODUCT: return "product";
        case SlocClass::BISEP_A: return "bisep-A";
        case SlocClass::BISEP_B: return "bisep-B";
        case SlocClass::BISEP_C: return "bisep-C";
        case SlocClass::W_CLASS: return "W-class";
        case SlocClass::GHZ_CLASS: return "GHZ-class";
    }
    return "?";
}

SlocClass sloc_class_3q(const State& s) {
    require(s.is_pure() && s.dims == Dims{2, 2, 2}, "sloc_class_3q needs a three-qubit ket");
    CMat rho = s.density();
    std::size_t r[3];
    for (std::size_t q = 0; q < 3; ++q) r[q] = herm_rank(partial_trace(rho, s.dims, {q}));
    if (r[0] == 1 && r[1] == 1 && r[2] == 1) return SlocClass::PRODUCT;
    if (r[0] == 1) return SlocClass::BISEP_A;
    if (r[1] == 1) return SlocClass::BISEP_B;
    if (r[2] == 1) return SlocClass::BISEP_C;
    return three_tangle(s) > Tolerances::get().cls ? SlocClass::GHZ_CLASS
                                                   : SlocClass::W_CLASS;
}

double coherent_information(const CMat& rho, const Dims& dims,
                            const std::vector<std::size_t>& cut_a) {
    BipartiteView v = bipartite_view(rho, dims, cut_a);
    CMat rb = partial_trace(v.rho, {v.da, v.db}, {1});
    return von_neumann_entropy(rb) - von_neumann_entropy(v.rho);
}

double werner_relent_reference(std::size_t d, double p) {
    require(d >= 2, "werner_relent_reference needs d >= 2");
    require(p >= 0.0 && p <= 1.0, "werner_relent_reference needs p in [0,1]");
    if (p <= 0.5) return 0.0;
    // For d = 2 the closed interval (1/2, 1/2 + 1/d] is all of (1/2, 1] and
    // the log((d-2)/d) branch is degenerate; it is only reachable for d >= 3.
    if (p <= 0.5 + 1.0 / double(d)) return 1.0 - binary_entropy(p);
    double dd = double(d);
    return std::log2((dd - 2.0) / dd) + p * std::log2((dd + 2.0) / (dd - 2.0));
}

double ed_two_bell_reference(const CMat& rho) {
    require(rho.square() && rho.rows() == 4, "ed_two_bell_reference needs a two-qubit state");
    const Tolerances& tol = Tolerances::get();
    double weight[4];
    CMat recon(4, 4);
    for (std::size_t k = 0; k < 4; ++k) {
        State b = make_bell(k);
        CMat proj = dyad(b.psi);
        weight[k] = re_trace_prod(proj, rho);
        proj *= weight[k];
        recon += proj;
    }
    require(max_abs_diff(recon, rho) <= tol.rec,
            "ed_two_bell_reference: input is not Bell-diagonal");
    std::size_t support = 0;
    double top = 0.0;
    for (double w : weight) {
        if (w > tol.rank) ++support;
        top = std::max(top, w);
    }
    require(support >= 1 && support <= 2,
            "ed_two_bell_reference: input must mix exactly two Bell projectors");
    return std::max(0.0, 1.0 - binary_entropy(top));
}

std::vector<MeasureValue> run_measures(const std::vector<std::string>& tokens,
                                       const State& s,
                                       const std::vector<std::size_t>& cut_a) {
    s.validate();
    const CMat rho = s.density();
    std::vector<MeasureValue> out;
    for (const std::string& t : tokens) {
        if (t == "ee") {
            out.push_back({t, entropy_of_entanglement(s, cut_a), true});
        } else if (t == "conc") {
            if (s.is_pure()) {
                out.push_back({t, concurrence_pure(s, cut_a), true});
            } else {
                BipartiteView v = bipartite_view(rho, s.dims, cut_a);
                if (v.da == 2 && v.db == 2) {
                    out.push_back({t, concurrence_2q(v.rho), true});
                } else {
                    ConcurrenceBounds b = concurrence_lower_bounds(rho, s.dims, cut_a);
                    out.push_back({t, std::max(b.normBound, b.twoCopyWitnessBound), false});
                }
            }
        } else if (t == "eof") {
            BipartiteView v = bipartite_view(rho, s.dims, cut_a);
            require(v.da == 2 && v.db == 2, "eof needs a two-qubit state");
            out.push_back({t, eof_2q(v.rho), true});
        } else if (t == "neg") {
            out.push_back({t, negativity(rho, s.dims, cut_a), true});
        } else if (t == "logneg") {
            out.push_back({t, log_negativity(rho, s.dims, cut_a), true});
        } else if (t == "fsing") {
            out.push_back({t, singlet_fraction(rho), true});
        } else if (t == "ftel") {
            out.push_back({t, teleport_fidelity(rho), true});
        } else if (t == "ek") {
            std::vector<double> ek = vidal_monotones(s, cut_a);
            for (std::size_t k = 0; k < ek.size(); ++k)
                out.push_back({"ek:" + std::to_string(k + 1), ek[k], true});
        } else if (t.rfind("tau:", 0) == 0) {
            std::size_t used = 0, p = 0;
            std::string arg = t.substr(4);
            try {
                p = std::stoul(arg, &used);
            } catch (const std::exception&) {
                throw_contract("bad tau order: " + t);
            }
            require(used == arg.size() && p >= 1, "bad tau order: " + t);
            out.push_back({t, tau_measures(s, cut_a, p), true});
        } else if (t == "tangle3") {
            out.push_back({t, three_tangle(s), true});
        } else if (t == "coh") {
            out.push_back({t, coherent_information(rho, s.dims, cut_a), true});
        } else if (t == "relent-werner") {
            std::size_t d = maxent_side(rho, "relent-werner");
            double p = 0.5 * (1.0 - re_trace_prod(swap_operator(d), rho));
            p = std::clamp(p, 0.0, 1.0);
            State w = make_werner(d, p);
            require(max_abs_diff(w.rho, rho) <= Tolerances::get().rec,
                    "relent-werner: input is not a Werner state");
            out.push_back({t, werner_relent_reference(d, p), true});
        } else {
            throw_contract("unknown measure token: " + t);
        }
    }
    return out;
}

}  // namespace qent
