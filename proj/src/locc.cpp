#include "qent/locc.hpp"

#include <algorithm>
#include <cmath>

#include "qent/errors.hpp"
#include "qent/rng.hpp"
#include "qent/separability.hpp"
#include "qent/tolerances.hpp"
#include "qent/zoo.hpp"

namespace qent {

namespace {

double re_trace_prod(const CMat& a, const CMat& b) {  // Re Tr(a b)
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s += std::real(a(r, c) * b(c, r));
    return s;
}

std::vector<cplx> matvec(const CMat& m, const std::vector<cplx>& v) {
    std::vector<cplx> out(m.rows(), cplx(0.0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

// Bilateral CNOT on (A,B,A',B'): a' ^= a, b' ^= b.
CMat bilateral_cnot16() {
    CMat u(16, 16);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t ap = 0; ap < 2; ++ap)
                for (std::size_t bp = 0; bp < 2; ++bp) {
                    std::size_t src = a * 8 + b * 4 + ap * 2 + bp;
                    std::size_t dst = a * 8 + b * 4 + ((ap ^ a) * 2) + (bp ^ b);
                    u(dst, src) = 1.0;
                }
    return u;
}

}  // namespace

CMat twirl_werner(const CMat& rho, std::size_t d) {
    require(rho.rows() == d * d, "twirl_werner: dimension mismatch");
    require(rho.square(), "twirl_werner needs a square matrix");
    double w = re_trace_prod(swap_operator(d), rho);
    double p = std::clamp(0.5 * (1.0 - w), 0.0, 1.0);
    return make_werner(d, p).rho;
}

CMat twirl_isotropic(const CMat& rho, std::size_t d) {
    require(rho.rows() == d * d, "twirl_isotropic: dimension mismatch");
    require(rho.square(), "twirl_isotropic needs a square matrix");
    double f = std::clamp(re_trace_prod(maxent_projector(d), rho), 0.0, 1.0);
    return make_isotropic(d, f).rho;
}

void LocalFilter::validate() const {
    require(A.rows() > 0 && B.rows() > 0, "empty filter operator");
    for (const CMat* m : {&A, &B}) {
        auto eig = hermitian_eigenvalues(m->dagger() * *m);
        require(eig.empty() || eig.front() <= 1.0 + 1e-10,
                "filter operator exceeds the contraction bound");
    }
}

LocalFilter LocalFilter::normalized() const {
    double na = operator_norm(A), nb = operator_norm(B);
    require(na > 0.0 && nb > 0.0, "cannot normalize a zero filter");
    LocalFilter out{A, B};
    out.A *= cplx(1.0 / na);
    out.B *= cplx(1.0 / nb);
    return out;
}

FilterOutcome local_filter(const CMat& rho, std::size_t da, std::size_t db,
                           const LocalFilter& f) {
    require(rho.square() && rho.rows() == da * db, "local_filter: dimension mismatch");
    require(f.A.cols() == da && f.B.cols() == db, "filter shape does not match the state");
    f.validate();
    CMat k = kron(f.A, f.B);
    CMat sigma = k * rho * k.dagger();
    double p = std::real(sigma.trace());
    if (p < Tolerances::get().prob) return {false, std::max(p, 0.0), CMat()};
    sigma *= cplx(1.0 / p);
    return {true, p, sigma};
}

LocalFilter filter_from_ppt_violation(const CMat& rho) {
    require(rho.square() && rho.rows() == 4,
            "filter_from_ppt_violation needs a two-qubit state");
    EigenSystem es = hermitian_spectrum(partial_transpose(rho, {2, 2}, {1}));
    double lam = es.values.back();
    require(lam < -Tolerances::get().eig,
            "state is PPT (hence separable for two qubits); no filter exists");
    // With [M]_{ij} = a_{ij} from psi = sum a_ij |ij>, the dagger of M is the
    // Alice-side filter: <psi|rho^G|psi> = Tr(sigma' V) for
    // sigma' = (M^dag (x) I) rho (M (x) I), and V = I - 2 P_- on two qubits,
    // so a negative expectation forces the psi- fraction of sigma' above 1/2.
    CMat m(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = std::conj(es.vectors(j * 2 + i, 3));
    return LocalFilter{m, CMat::identity(2)}.normalized();
}

double recurrence_success_probability(double F) {
    require(F >= 0.0 && F <= 1.0, "fidelity outside [0,1]");
    double g = 1.0 - F;
    return F * F + (2.0 / 3.0) * F * g + (5.0 / 9.0) * g * g;
}

double recurrence_map(double F) {
    double g = 1.0 - F;
    return (F * F + g * g / 9.0) / recurrence_success_probability(F);
}

RecurrenceStep recurrence_step_exact(const CMat& rho) {
    require(rho.square() && rho.rows() == 4, "recurrence step needs a two-qubit state");
    static const CMat u = bilateral_cnot16();
    CMat two = kron(rho, rho);  // (A,B) source copy, (A',B') target copy
    two = u * two * u.dagger();

    // keep the branches where the A' and B' measurements agree
    CMat kept(16, 16);
    for (std::size_t x = 0; x < 2; ++x) {
        CMat proj(16, 16);
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b) {
                std::size_t i = a * 8 + b * 4 + x * 2 + x;
                proj(i, i) = 1.0;
            }
        kept += proj * two * proj;
    }
    double p = std::real(kept.trace());
    require(p > Tolerances::get().prob, "recurrence round succeeded with probability 0");
    CMat out = partial_trace(kept, {2, 2, 2, 2}, {0, 1});
    out *= cplx(1.0 / p);
    RecurrenceStep step;
    step.fidelity = re_trace_prod(maxent_projector(2), out);
    step.state = twirl_isotropic(out, 2);
    step.pSuccess = p;
    return step;
}

DistillationTrace distill_recurrence(double F0, double targetF,
                                     std::size_t maxRounds, bool exact) {
    require(F0 > 0.5, "recurrence distillation needs F > 1/2");
    require(F0 <= 1.0 && targetF <= 1.0, "fidelity outside (1/2, 1]");
    DistillationTrace trace;
    double F = F0, surviving = 1.0;
    while (F < targetF && trace.rounds.size() < maxRounds) {
        double p, next;
        if (exact) {
            RecurrenceStep step = recurrence_step_exact(make_isotropic(2, F).rho);
            p = step.pSuccess;
            next = step.fidelity;
        } else {
            p = recurrence_success_probability(F);
            next = recurrence_map(F);
        }
        surviving *= 0.5 * p;  // pairs halve, then the round succeeds with p
        F = next;
        trace.rounds.push_back({F, p, surviving});
    }
    trace.reachedTarget = F >= targetF;
    // hand over to hashing: per surviving pair the rate is 1 - S(isotropic(F))
    trace.finalYieldEstimate =
        surviving * hashing_rate({F, (1.0 - F) / 3.0, (1.0 - F) / 3.0, (1.0 - F) / 3.0});
    return trace;
}

double hashing_rate(const std::vector<double>& bellDiagP) {
    require(!bellDiagP.empty(), "empty spectrum");
    double sum = 0.0;
    std::vector<double> p;
    p.reserve(bellDiagP.size());
    for (double v : bellDiagP) {
        require(v >= -Tolerances::get().prob, "negative probability");
        p.push_back(std::max(v, 0.0));
        sum += v;
    }
    require(std::abs(sum - 1.0) <= 1e-9, "spectrum must sum to 1");
    return std::max(0.0, 1.0 - shannon2(p));
}

bool reduction_distillable(const CMat& rho, std::size_t da, std::size_t db) {
    require(rho.square() && rho.rows() == da * db, "dimension mismatch");
    return check_reduction(rho, {da, db}, {0}).verdict == Verdict::ENTANGLED;
}

namespace {

// descending tail sums E_k = sum_{i>=k} lambda_i, padded to a common length
std::vector<double> tail_sums(std::vector<double> lam, std::size_t len) {
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    lam.resize(len, 0.0);
    std::vector<double> e(len);
    double tail = 0.0;
    for (std::size_t i = len; i-- > 0;) {
        tail += lam[i];
        e[i] = tail;
    }
    return e;
}

void check_schmidt_vector(const std::vector<double>& lam) {
    require(!lam.empty(), "empty Schmidt vector");
    double sum = 0.0;
    for (double v : lam) {
        require(v >= -Tolerances::get().prob, "negative Schmidt probability");
        sum += v;
    }
    require(std::abs(sum - 1.0) <= 1e-9, "Schmidt probabilities must sum to 1");
}

}  // namespace

bool nielsen_can_transform(const std::vector<double>& lamPsi,
                           const std::vector<double>& lamPhi) {
    check_schmidt_vector(lamPsi);
    check_schmidt_vector(lamPhi);
    std::size_t len = std::max(lamPsi.size(), lamPhi.size());
    auto ep = tail_sums(lamPsi, len), ef = tail_sums(lamPhi, len);
    for (std::size_t k = 0; k < len; ++k)  // phi majorizes psi
        if (ef[k] > ep[k] + 1e-12) return false;
    return true;
}

double vidal_probability(const std::vector<double>& lamPsi,
                         const std::vector<double>& lamPhi) {
    check_schmidt_vector(lamPsi);
    check_schmidt_vector(lamPhi);
    std::size_t len = std::max(lamPsi.size(), lamPhi.size());
    auto ep = tail_sums(lamPsi, len), ef = tail_sums(lamPhi, len);
    double p = 1.0;
    for (std::size_t k = 0; k < len; ++k)
        if (ef[k] > Tolerances::get().prob) p = std::min(p, ep[k] / ef[k]);
    return std::min(p, 1.0);
}

State teleport_state(const CMat& resource, const std::vector<cplx>& psi_in) {
    require(resource.square() && resource.rows() == 4,
            "teleportation needs a two-qubit resource");
    require(psi_in.size() == 2, "teleportation input must be a qubit");
    std::vector<cplx> chi = psi_in;
    normalize(chi);

    CMat full = kron(dyad(chi), resource);  // (in, A, B)
    CMat out(2, 2);
    for (std::size_t k = 0; k < 4; ++k) {
        CMat proj = kron(dyad(make_bell(k).psi), CMat::identity(2));
        CMat branch = proj * full * proj;
        CMat bob = partial_trace(branch, {2, 2, 2}, {2});
        CMat sigma = dense_coding_sigma(k);
        out += sigma * bob * sigma.dagger();
    }
    return State::make_density({2}, out);
}

double teleport_fidelity(const CMat& resource, const std::vector<cplx>& psi_in) {
    std::vector<cplx> chi = psi_in;
    normalize(chi);
    CMat out = teleport_state(resource, psi_in).rho;
    return re_trace_prod(dyad(chi), out);
}

TeleportationReport simulate_teleportation(const CMat& resource,
                                           std::size_t haarSamples,
                                           std::uint64_t seed) {
    require(resource.square() && resource.rows() == 4,
            "teleportation needs a two-qubit resource");
    TeleportationReport rep;
    rep.resourceFraction = re_trace_prod(dyad(make_bell(0).psi), resource);

    // analytic mode: twirl the resource inside the psi- anchored family (the
    // isotropic projection conjugated by I (x) sigma_y); the resulting channel
    // is input-independent, so one run is the exact Haar average
    CMat rot = kron(CMat::identity(2), pauli(2));
    CMat iso = twirl_isotropic(rot * resource * rot.dagger(), 2);
    rep.analyticFidelity = teleport_fidelity(rot.dagger() * iso * rot, {1.0, 0.0});

    const double r = 1.0 / std::sqrt(2.0);
    const std::vector<std::vector<cplx>> axes = {
        {1.0, 0.0},      {0.0, 1.0},      {r, r},
        {r, -r},         {r, cplx(0, 1) * r}, {r, cplx(0, -1) * r}};
    double acc = 0.0;
    for (const auto& chi : axes) acc += teleport_fidelity(resource, chi);
    rep.axialAverage = acc / double(axes.size());

    Rng rng(seed);
    acc = 0.0;
    for (std::size_t i = 0; i < haarSamples; ++i)
        acc += teleport_fidelity(resource, random_pure({2}, rng));
    rep.haarAverage = haarSamples ? acc / double(haarSamples) : 0.0;
    rep.haarSamples = haarSamples;
    return rep;
}

DenseCodingReport simulate_dense_coding() {
    DenseCodingReport rep;
    const std::vector<cplx> psim = make_bell(0).psi;
    for (std::size_t k = 0; k < 4; ++k) {
        CMat enc = kron(dense_coding_sigma(k), CMat::identity(2));
        rep.encoded.push_back(State::make_pure({2, 2}, matvec(enc, psim)));
    }
    rep.maxCrossOverlap = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            rep.maxCrossOverlap = std::max(
                rep.maxCrossOverlap,
                std::abs(inner(rep.encoded[i].psi, rep.encoded[j].psi)));
    std::size_t distinguishable = rep.maxCrossOverlap < 1e-9 ? 4 : 1;
    rep.bits = std::log2(double(distinguishable));
    return rep;
}

SwappingReport simulate_swapping() {
    std::vector<cplx> phi = make_bell(3).psi;
    CMat full = dyad(kron_vec(phi, phi));  // (A, B, C, D)
    CMat target = dyad(phi);
    SwappingReport rep;
    for (std::size_t k = 0; k < 4; ++k) {
        CMat proj = kron(kron(CMat::identity(2), dyad(make_bell(k).psi)),
                         CMat::identity(2));
        CMat branch = proj * full * proj;
        double p = std::real(branch.trace());
        rep.outcomeProbabilities.push_back(p);
        CMat ad = partial_trace(branch, {2, 2, 2, 2}, {0, 3});
        ad *= cplx(1.0 / p);
        double best = 0.0;  // the protocol's correction table, evaluated on the fly
        for (std::size_t j = 0; j < 4; ++j) {
            CMat fix = kron(CMat::identity(2), dense_coding_sigma(j));
            best = std::max(best, re_trace_prod(target, fix * ad * fix.dagger()));
        }
        rep.correctedFidelity.push_back(best);
    }
    return rep;
}

std::size_t KrausChannel::dim_in() const { return ops.empty() ? 0 : ops.front().cols(); }
std::size_t KrausChannel::dim_out() const { return ops.empty() ? 0 : ops.front().rows(); }

void KrausChannel::validate() const {
    require(!ops.empty(), "channel needs at least one Kraus operator");
    std::size_t din = dim_in(), dout = dim_out();
    require(din > 0 && dout > 0, "empty Kraus operator");
    CMat sum(din, din);
    for (const CMat& v : ops) {
        require(v.rows() == dout && v.cols() == din, "ragged Kraus operators");
        sum += v.dagger() * v;
    }
    sum -= CMat::identity(din);
    require(sum.max_abs() <= 1e-10, "Kraus operators do not resolve the identity");
}

CMat KrausChannel::apply(const CMat& rho) const {
    validate();
    require(rho.square() && rho.rows() == dim_in(), "channel input dimension mismatch");
    CMat out(dim_out(), dim_out());
    for (const CMat& v : ops) out += v * rho * v.dagger();
    return out;
}

CMat channel_to_state(const KrausChannel& ch) {
    ch.validate();
    std::size_t din = ch.dim_in();
    CMat plus = maxent_projector(din);
    CMat out(din * ch.dim_out(), din * ch.dim_out());
    for (const CMat& v : ch.ops) {
        CMat ext = kron(CMat::identity(din), v);
        out += ext * plus * ext.dagger();
    }
    CMat left = partial_trace(out, {din, ch.dim_out()}, {0});
    left -= CMat::identity(din) * cplx(1.0 / double(din));
    if (left.max_abs() > 1e-10)
        throw_numerical("channel state has a non-maximally-mixed left reduction");
    return out;
}

double state_coherent_info(const CMat& rho, std::size_t da, std::size_t db) {
    require(rho.square() && rho.rows() == da * db, "dimension mismatch");
    CMat rb = partial_trace(rho, {da, db}, {1});
    return von_neumann_entropy(rb) - von_neumann_entropy(rho);
}

KrausChannel phase_channel(double p) {
    require(p >= 0.0 && p <= 1.0, "phase channel needs p in [0,1]");
    CMat k0 = CMat::identity(2);
    k0 *= cplx(std::sqrt(p));
    CMat k1 = pauli(3);
    k1 *= cplx(std::sqrt(1.0 - p));
    return KrausChannel{{k0, k1}};
}

}  // namespace qent
