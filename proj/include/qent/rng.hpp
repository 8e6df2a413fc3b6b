#pragma once

#include <cstdint>
#include <vector>

#include "qent/complex_matrix.hpp"
#include "qent/tensor.hpp"

namespace qent {

// Counter-based deterministic RNG (SplitMix64 core). Draw i from key k is
// finalize(k + (i+1)*GOLDEN): stateless in the counter, so batch sweeps can
// be parallelized over items without any thread-order dependence, and
// split() derives statistically independent child streams for sub-tasks.
class Rng {
public:
    explicit Rng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64();
    double uniform();           // [0,1), 53-bit
    double gaussian();          // Box-Muller, caches the pair
    Rng split(std::uint64_t stream) const;

    std::uint64_t key() const { return key_; }

private:
    static std::uint64_t mix(std::uint64_t z);
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
std::vector<cplx> random_pure(const Dims& dims, Rng& rng);

// Random density matrix of the requested rank (generically): partial trace
// over a rank-dimensional environment of a Haar pure state.
CMat random_density(const Dims& dims, std::size_t rank, Rng& rng);

// Random separable state: mixture of `terms` product density matrices with
// Dirichlet(1) weights (terms defaults to dA*dB style sizing by caller).
CMat random_separable(const Dims& dims, std::size_t terms, Rng& rng);

// Haar-random unitary via QR of a Ginibre matrix (phases fixed so R has a
// nonnegative diagonal).
CMat random_unitary(std::size_t d, Rng& rng);

}  // namespace qent
