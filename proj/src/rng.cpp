#include "qent/rng.hpp"

#include <cmath>
#include <numbers>

#include "qent/state.hpp"
#include "qent/tolerances.hpp"

namespace qent {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t Rng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next_u64() {
    ++counter_;
    return mix(key_ + counter_ * kGolden);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_cached_) {
        have_cached_ = false;
        return cached_;
    }
    // Box-Muller; reject u1 == 0 to keep log finite.
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
}

Rng Rng::split(std::uint64_t stream) const {
    return Rng(mix(key_ ^ mix(stream)));
}

std::vector<cplx> random_pure(const Dims& dims, Rng& rng) {
    const std::size_t d = dims_product(dims);
    std::vector<cplx> psi(d);
    for (cplx& z : psi) {
        double re = rng.gaussian();
        double im = rng.gaussian();
        z = cplx(re, im);
    }
    normalize(psi);
    return psi;
}

CMat random_density(const Dims& dims, std::size_t rank, Rng& rng) {
    require(rank >= 1, "random_density needs rank >= 1");
    const std::size_t d = dims_product(dims);
    Dims extended = {d, rank};
    std::vector<cplx> psi = random_pure(extended, rng);
    return partial_trace(dyad(psi), extended, {0});
}

CMat random_separable(const Dims& dims, std::size_t terms, Rng& rng) {
    require(terms >= 1, "random_separable needs at least one term");
    const std::size_t d = dims_product(dims);

    // Dirichlet(1) weights: normalized i.i.d. exponentials.
    std::vector<double> w(terms);
    double tot = 0.0;
    for (double& x : w) {
        double u;
        do {
            u = rng.uniform();
        } while (u <= 0.0);
        x = -std::log(u);
        tot += x;
    }
    for (double& x : w) x /= tot;

    CMat rho(d, d);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<cplx> prod{cplx(1.0, 0.0)};
        for (std::size_t k = 0; k < dims.size(); ++k) {
            Dims one = {dims[k]};
            prod = kron_vec(prod, random_pure(one, rng));
        }
        rho += w[t] * dyad(prod);
    }
    return rho;
}

CMat random_unitary(std::size_t d, Rng& rng) {
    // QR of a Ginibre matrix via modified Gram-Schmidt; the R diagonal is
    // made real-positive by construction, giving Haar measure.
    CMat g(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = cplx(rng.gaussian(), rng.gaussian());

    CMat q(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        std::vector<cplx> v(d);
        for (std::size_t r = 0; r < d; ++r) v[r] = g(r, c);
        for (std::size_t j = 0; j < c; ++j) {
            cplx ov = 0.0;
            for (std::size_t r = 0; r < d; ++r) ov += std::conj(q(r, j)) * v[r];
            for (std::size_t r = 0; r < d; ++r) v[r] -= ov * q(r, j);
        }
        double n = vec_norm(v);
        require(n > Tolerances::get().prob, "degenerate Ginibre draw");
        for (std::size_t r = 0; r < d; ++r) q(r, c) = v[r] / n;
    }
    return q;
}

}  // namespace qent
