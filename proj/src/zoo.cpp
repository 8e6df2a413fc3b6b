#include "qent/zoo.hpp"

#include <cmath>

#include "qent/tolerances.hpp"

namespace qent {

namespace {
const cplx kI(0.0, 1.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

CMat pauli(std::size_t i) {
    require(i < 4, "pauli index out of range");
    CMat m(2, 2);
    switch (i) {
        case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;          // I
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;          // x
        case 2: m(0, 1) = -kI; m(1, 0) = kI; break;           // y
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;         // z
    }
    return m;
}

CMat swap_operator(std::size_t d) {
    CMat v(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
    return v;
}

CMat proj_sym(std::size_t d) {
    CMat p = swap_operator(d);
    p += CMat::identity(d * d);
    p *= 0.5;
    return p;
}

CMat proj_anti(std::size_t d) {
    CMat p = CMat::identity(d * d);
    p -= swap_operator(d);
    p *= 0.5;
    return p;
}

std::vector<cplx> ket_maxent_vec(std::size_t d) {
    require(d >= 1, "maxent needs d >= 1");
    std::vector<cplx> psi(d * d, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i) psi[i * d + i] = a;
    return psi;
}

CMat maxent_projector(std::size_t d) { return dyad(ket_maxent_vec(d)); }

CMat dense_coding_sigma(std::size_t k) {
    require(k < 4, "bell index out of range");
    // dense-coding rotation list (I, x, z, y)
    static const std::size_t order[4] = {0, 1, 3, 2};
    return pauli(order[k]);
}

State make_bell(std::size_t k) {
    require(k < 4, "bell index out of range");
    std::vector<cplx> psi(4, 0.0);
    switch (k) {
        case 0: psi[1] = kInvSqrt2; psi[2] = -kInvSqrt2; break;  // psi-
        case 1: psi[0] = kInvSqrt2; psi[3] = -kInvSqrt2; break;  // phi-
        case 2: psi[1] = kInvSqrt2; psi[2] = kInvSqrt2; break;   // psi+
        case 3: psi[0] = kInvSqrt2; psi[3] = kInvSqrt2; break;   // phi+
    }
    return State::make_pure({2, 2}, std::move(psi));
}

State make_maxent(std::size_t d) { return State::make_pure({d, d}, ket_maxent_vec(d)); }

State make_ghz(std::size_t n, std::size_t d) {
    require(n >= 2 && d >= 2, "ghz needs n >= 2 and d >= 2");
    Dims dims(n, d);
    const std::size_t total = dims_product(dims);
    std::vector<cplx> psi(total, 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(d));
    // |i>^(x)n has flat index i * (d^n - 1)/(d - 1)
    std::size_t rep = 0;
    for (std::size_t k = 0; k < n; ++k) rep = rep * d + 1;
    for (std::size_t i = 0; i < d; ++i) psi[i * rep] = a;
    return State::make_pure(std::move(dims), std::move(psi));
}

State make_w(std::size_t n) {
    require(n >= 2, "w needs n >= 2");
    Dims dims(n, 2);
    std::vector<cplx> psi(dims_product(dims), 0.0);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) psi[std::size_t(1) << k] = a;
    return State::make_pure(std::move(dims), std::move(psi));
}

State make_werner(std::size_t d, double p) {
    require(d >= 2, "werner needs d >= 2");
    require(p >= 0.0 && p <= 1.0, "werner parameter p outside [0,1]");
    const double dd = static_cast<double>(d);
    CMat rho = proj_sym(d);
    rho *= (1.0 - p) * 2.0 / (dd * dd + dd);
    CMat anti = proj_anti(d);
    anti *= p * 2.0 / (dd * dd - dd);
    rho += anti;
    return State::make_density({d, d}, std::move(rho));
}

State make_isotropic(std::size_t d, double F) {
    require(d >= 2, "isotropic needs d >= 2");
    require(F >= 0.0 && F <= 1.0, "isotropic parameter F outside [0,1]");
    const double dd = static_cast<double>(d);
    CMat rho = CMat::identity(d * d);
    rho *= (1.0 - F) / (dd * dd - 1.0);
    CMat p = maxent_projector(d);
    p *= (F * dd * dd - 1.0) / (dd * dd - 1.0);
    rho += p;
    return State::make_density({d, d}, std::move(rho));
}

State make_smolin() {
    CMat rho(16, 16);
    for (std::size_t k = 0; k < 4; ++k) {
        CMat pk = make_bell(k).density();
        rho += 0.25 * kron(pk, pk);
    }
    return State::make_density({2, 2, 2, 2}, std::move(rho));
}

State make_chessboard(double a) {
    require(a > 0.0 && a < 1.0, "chessboard parameter a outside (0,1)");
    CMat rho(9, 9);
    for (std::size_t i : {0, 1, 2, 3, 4, 5, 7}) rho(i, i) = a;
    rho(6, 6) = rho(8, 8) = (1.0 + a) / 2.0;
    rho(0, 4) = rho(4, 0) = a;
    rho(0, 8) = rho(8, 0) = a;
    rho(4, 8) = rho(8, 4) = a;
    rho(6, 8) = rho(8, 6) = std::sqrt(1.0 - a * a) / 2.0;
    rho *= 1.0 / (8.0 * a + 1.0);
    return State::make_density({3, 3}, std::move(rho));
}

namespace {

// |Psi_k^±> for the m-qubit family: bit string k over the first m-1 qubits,
// last qubit 0, superposed with the complemented string and last qubit 1.
std::vector<cplx> dur_cirac_ket(std::size_t m, std::size_t k, int sign) {
    const std::size_t total = std::size_t(1) << m;
    const std::size_t half = std::size_t(1) << (m - 1);
    std::vector<cplx> psi(total, 0.0);
    psi[2 * k] = kInvSqrt2;
    psi[2 * (half - 1 - k) + 1] = sign * kInvSqrt2;
    return psi;
}

}  // namespace

State make_dur_cirac(std::size_t m, double l0p, double l0m,
                     const std::vector<double>& lk) {
    require(m >= 2 && m <= 12, "durCirac needs 2 <= m <= 12");
    const std::size_t half = std::size_t(1) << (m - 1);
    require(lk.size() == half - 1, "durCirac needs 2^(m-1)-1 weights");
    require(l0p >= 0.0 && l0m >= 0.0, "durCirac weights must be nonnegative");
    double tot = l0p + l0m;
    for (double w : lk) {
        require(w >= 0.0, "durCirac weights must be nonnegative");
        tot += 2.0 * w;
    }
    require(std::abs(tot - 1.0) <= Tolerances::get().tr, "durCirac weights must normalize");

    const std::size_t total = std::size_t(1) << m;
    CMat rho(total, total);
    rho += l0p * dyad(dur_cirac_ket(m, 0, +1));
    rho += l0m * dyad(dur_cirac_ket(m, 0, -1));
    for (std::size_t k = 1; k < half; ++k) {
        if (lk[k - 1] == 0.0) continue;
        rho += lk[k - 1] * dyad(dur_cirac_ket(m, k, +1));
        rho += lk[k - 1] * dyad(dur_cirac_ket(m, k, -1));
    }
    return State::make_density(Dims(m, 2), std::move(rho));
}

std::vector<std::size_t> dur_cirac_partition(std::size_t m, std::size_t k) {
    require(m >= 2, "partition needs m >= 2");
    const std::size_t half = std::size_t(1) << (m - 1);
    require(k >= 1 && k < half, "partition index k must be in 1..2^(m-1)-1");
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const std::size_t bit = (k >> (m - 2 - i)) & 1;  // k_1 is the MSB
        if (bit == 0) a.push_back(i);
    }
    a.push_back(m - 1);
    return a;
}

bool dur_cirac_partition_separable(double l0p, double l0m,
                                   const std::vector<double>& lk, std::size_t k) {
    require(l0p >= l0m, "closed form assumes l0+ >= l0-");
    require(k >= 1 && k <= lk.size(), "partition index out of range");
    const double delta = l0p - l0m;
    return lk[k - 1] >= delta / 2.0;
}

std::vector<std::vector<cplx>> upb_shift_vectors() {
    const std::vector<cplx> zero = {1.0, 0.0};
    const std::vector<cplx> one = {0.0, 1.0};
    const std::vector<cplx> plus = {kInvSqrt2, kInvSqrt2};
    const std::vector<cplx> minus = {kInvSqrt2, -kInvSqrt2};
    auto triple = [](const std::vector<cplx>& a, const std::vector<cplx>& b,
                     const std::vector<cplx>& c) { return kron_vec(kron_vec(a, b), c); };
    return {
        triple(zero, zero, zero),
        triple(plus, one, minus),
        triple(one, minus, plus),
        triple(minus, plus, one),
    };
}

State make_upb_shift_state() {
    CMat p(8, 8);
    for (const auto& v : upb_shift_vectors()) p += dyad(v);
    CMat rho = CMat::identity(8);
    rho -= p;
    rho *= 0.25;
    return State::make_density({2, 2, 2}, std::move(rho));
}

State make_aharonov() {
    std::vector<cplx> psi(27, 0.0);
    const double a = 1.0 / std::sqrt(6.0);
    auto at = [](std::size_t i, std::size_t j, std::size_t k) { return 9 * i + 3 * j + k; };
    psi[at(0, 1, 2)] = a;
    psi[at(1, 2, 0)] = a;
    psi[at(2, 0, 1)] = a;
    psi[at(0, 2, 1)] = -a;
    psi[at(2, 1, 0)] = -a;
    psi[at(1, 0, 2)] = -a;
    return State::make_pure({3, 3, 3}, std::move(psi));
}

State make_avn_hyper() {
    const std::vector<cplx> singlet = make_bell(0).psi;
    // kron order is [polA, polB, pathA, pathB]; reorder to put each photon's
    // polarization and path factors together.
    std::vector<cplx> psi = kron_vec(singlet, singlet);
    psi = permute_systems_vec(psi, {2, 2, 2, 2}, {0, 2, 1, 3});
    return State::make_pure({2, 2, 2, 2}, std::move(psi));
}

State make_random_pure(const Dims& dims, std::uint64_t seed) {
    Rng rng(seed);
    return State::make_pure(dims, random_pure(dims, rng));
}

State make_random_density(const Dims& dims, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return State::make_density(dims, random_density(dims, rank, rng));
}

State make_random_separable(const Dims& dims, std::size_t terms, std::uint64_t seed) {
    Rng rng(seed);
    return State::make_density(dims, random_separable(dims, terms, rng));
}

}  // namespace qent
