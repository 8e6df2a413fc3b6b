#include <cstring>

#include "doctest.h"
#include "qent/rng.hpp"
#include "qent/state.hpp"
#include "qent/tensor.hpp"
#include "qent/zoo.hpp"

using namespace qent;

namespace {

bool close(const CMat& a, const CMat& b, double tol = 1e-12) {
    return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

bool bit_identical(const CMat& a, const CMat& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           std::memcmp(a.data(), b.data(), sizeof(cplx) * a.rows() * a.cols()) == 0;
}

}  // namespace

TEST_CASE("kron basics") {
    CMat sx = pauli(1), sz = pauli(3);
    CMat k = kron(sx, sz);
    CHECK(k.rows() == 4);
    CHECK(k(0, 2) == cplx(1.0));
    CHECK(k(1, 3) == cplx(-1.0));
    CHECK(k(2, 0) == cplx(1.0));
    CHECK(k(3, 1) == cplx(-1.0));
    // mixed-product identity (AB)(x)(CD) = (A(x)C)(B(x)D)
    Rng rng(11);
    CMat a = random_unitary(2, rng), b = random_unitary(2, rng);
    CMat c = random_unitary(3, rng), d = random_unitary(3, rng);
    CHECK(close(kron(a * b, c * d), kron(a, c) * kron(b, d)));
    // trace multiplicativity
    CMat ra = random_density({2}, 2, rng), rb = random_density({3}, 3, rng);
    CHECK(std::abs(kron(ra, rb).trace() - ra.trace() * rb.trace()) < 1e-12);
}

TEST_CASE("partial trace") {
    Rng rng(5);
    CMat ra = random_density({2}, 2, rng);
    CMat rb = random_density({3}, 2, rng);
    CMat prod = kron(ra, rb);
    CHECK(close(partial_trace(prod, {2, 3}, {0}), ra));
    CHECK(close(partial_trace(prod, {2, 3}, {1}), rb));

    // GHZ(3,2): tracing one qubit leaves the classical mixture of |00>,|11>
    CMat ghz = make_ghz(3, 2).density();
    CMat red = partial_trace(ghz, {2, 2, 2}, {0, 1});
    CMat expect(4, 4);
    expect(0, 0) = 0.5;
    expect(3, 3) = 0.5;
    CHECK(close(red, expect));

    // keep everything / keep nothing
    CHECK(close(partial_trace(prod, {2, 3}, {0, 1}), prod));
    CMat scalar = partial_trace(prod, {2, 3}, {});
    CHECK(scalar.rows() == 1);
    CHECK(std::abs(scalar(0, 0) - cplx(1.0)) < 1e-12);

    // keep order follows the original subsystem order
    CMat rc = random_density({2}, 2, rng);
    CMat triple = kron(kron(ra, rb), rc);
    CHECK(close(partial_trace(triple, {2, 3, 2}, {0, 2}), kron(ra, rc)));
}

TEST_CASE("partial transpose") {
    CMat rho = make_bell(0).density();  // psi-
    CMat pt = partial_transpose(rho, {2, 2}, {1});
    auto ev = hermitian_eigenvalues(pt);
    CHECK(ev.size() == 4);
    CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ev[3] == doctest::Approx(-0.5).epsilon(1e-12));

    // transposing both sides is the full transpose
    Rng rng(7);
    CMat r = random_density({2, 3}, 4, rng);
    CHECK(close(partial_transpose(r, {2, 3}, {0, 1}), r.transpose()));
    // involution
    CHECK(close(partial_transpose(partial_transpose(r, {2, 3}, {1}), {2, 3}, {1}), r));
    // product states stay PSD
    CMat ra = random_density({2}, 2, rng), rb = random_density({3}, 3, rng);
    CMat ppt = partial_transpose(kron(ra, rb), {2, 3}, {1});
    CHECK(close(ppt, kron(ra, rb.transpose())));
}

TEST_CASE("realign oracles") {
    // maximally entangled d=2: R = I/2, trace norm 2
    CMat r1 = realign(make_maxent(2).density(), 2, 2);
    CMat half = CMat::identity(4);
    half *= 0.5;
    CHECK(close(r1, half));
    CHECK(trace_norm(r1) == doctest::Approx(2.0).epsilon(1e-12));

    // maximally mixed two-qubit state: rank-one realignment, trace norm 1/2
    CMat eye = CMat::identity(4);
    eye *= 0.25;
    CHECK(trace_norm(realign(eye, 2, 2)) == doctest::Approx(0.5).epsilon(1e-12));

    // product input: trace norm = product of Frobenius norms
    Rng rng(13);
    CMat ra = random_density({2}, 2, rng), rb = random_density({3}, 3, rng);
    CHECK(trace_norm(realign(kron(ra, rb), 2, 3)) ==
          doctest::Approx(ra.norm_fro() * rb.norm_fro()).epsilon(1e-10));
    // pure product: exactly 1
    CMat pa = random_density({2}, 1, rng), pb = random_density({3}, 1, rng);
    CHECK(trace_norm(realign(kron(pa, pb), 2, 3)) == doctest::Approx(1.0).epsilon(1e-10));

    // rectangular shape
    CMat r = realign(kron(ra, rb), 2, 3);
    CHECK(r.rows() == 4);
    CHECK(r.cols() == 9);
}

TEST_CASE("slot permutations reproduce the named maps") {
    Rng rng(3);
    CMat r = random_density({2, 3}, 5, rng);
    Dims dims{2, 3};
    CHECK(close(apply_slot_permutation(r, dims, {0, 1, 2, 3}), r));
    CHECK(close(apply_slot_permutation(r, dims, {0, 3, 2, 1}),
                partial_transpose(r, dims, {1})));
    CHECK(close(apply_slot_permutation(r, dims, {2, 1, 0, 3}),
                partial_transpose(r, dims, {0})));
    CHECK(close(apply_slot_permutation(r, dims, {0, 2, 1, 3}), realign(r, 2, 3)));
    CHECK(close(apply_slot_permutation(r, dims, {2, 3, 0, 1}), r.transpose()));
}

TEST_CASE("system permutation") {
    Rng rng(17);
    CMat a = random_density({2}, 2, rng);
    CMat b = random_density({3}, 2, rng);
    CMat c = random_density({2}, 1, rng);
    CMat abc = kron(kron(a, b), c);
    CHECK(close(permute_systems(abc, {2, 3, 2}, {1, 2, 0}), kron(kron(b, c), a)));

    // ket version round-trips through the inverse permutation
    std::vector<cplx> psi = random_pure({2, 3, 2}, rng);
    auto moved = permute_systems_vec(psi, {2, 3, 2}, {2, 0, 1});
    auto back = permute_systems_vec(moved, {2, 2, 3}, {1, 2, 0});
    double diff = 0;
    for (std::size_t i = 0; i < psi.size(); ++i) diff = std::max(diff, std::abs(psi[i] - back[i]));
    CHECK(diff < 1e-15);
}

TEST_CASE("serial kernels match the parallel ones exactly") {
    Rng rng(23);
    CMat a = random_density({2, 3}, 4, rng);
    CMat b = random_density({2, 3}, 2, rng);
    CHECK(bit_identical(matmul(a, b), serial::matmul(a, b)));
    CMat small = random_density({3}, 2, rng);
    CHECK(bit_identical(kron(a, small), serial::kron(a, small)));
    CHECK(bit_identical(partial_trace(a, {2, 3}, {1}), serial::partial_trace(a, {2, 3}, {1})));
    CHECK(bit_identical(partial_transpose(a, {2, 3}, {1}),
                        serial::partial_transpose(a, {2, 3}, {1})));
    CHECK(bit_identical(realign(a, 2, 3), serial::realign(a, 2, 3)));
}

TEST_CASE("ravel and unravel agree with the layout convention") {
    Dims dims{2, 3, 2};
    std::size_t digits[3];
    unravel(7, dims, digits);  // 7 = 1*6 + 0*2 + 1
    CHECK(digits[0] == 1);
    CHECK(digits[1] == 0);
    CHECK(digits[2] == 1);
    CHECK(ravel(digits, dims) == 7);
}

TEST_CASE("dimension guards") {
    CMat ok(2, 2);
    CHECK_THROWS_AS((void)partial_trace(ok, {3}, {0}), QentError);
    CHECK_THROWS_AS((void)partial_transpose(ok, {2, 2}, {1}), QentError);
    CHECK_THROWS_AS(CMat(4097, 1), QentError);
    // product would exceed the side cap even though the factors are legal
    CHECK_THROWS_AS((void)kron(CMat(128, 128), CMat(64, 64)), QentError);
}
