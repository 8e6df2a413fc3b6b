#include <cmath>
#include <vector>

#include "doctest.h"
#include "qent/nonlocality.hpp"
#include "qent/rng.hpp"
#include "qent/zoo.hpp"

using namespace qent;

namespace {

const Vec3 kX{1.0, 0.0, 0.0};
const Vec3 kY{0.0, 1.0, 0.0};
const Vec3 kZ{0.0, 0.0, 1.0};

Vec3 rand_unit(Rng& rng) {
    Vec3 v{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    return {v[0] / n, v[1] / n, v[2] / n};
}

BellSettings two_site(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
    BellSettings s;
    s.site.resize(2);
    s.site[0] = {a1, a2};
    s.site[1] = {b1, b2};
    return s;
}

Frame3 rot_z(double a) {
    double c = std::cos(a), s = std::sin(a);
    return Frame3{{c, -s, 0, s, c, 0, 0, 0, 1}};
}

Frame3 rot_y(double a) {
    double c = std::cos(a), s = std::sin(a);
    return Frame3{{c, 0, s, 0, 1, 0, -s, 0, c}};
}

Frame3 compose(const Frame3& a, const Frame3& b) {
    Frame3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += a.r[i * 3 + k] * b.r[k * 3 + j];
            out.r[i * 3 + j] = acc;
        }
    return out;
}

Frame3 rand_frame(Rng& rng) {
    double tau = 2.0 * 3.14159265358979323846;
    return compose(rot_z(tau * rng.uniform()),
                   compose(rot_y(tau * rng.uniform()), rot_z(tau * rng.uniform())));
}

std::vector<cplx> matvec(const CMat& m, const std::vector<cplx>& v) {
    std::vector<cplx> out(m.rows(), cplx(0.0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

State random_product_ket(const Dims& dims, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<cplx> amps{1.0};
    for (std::size_t j = 0; j < dims.size(); ++j)
        amps = kron_vec(amps, random_pure({dims[j]}, rng));
    return State::make_pure(dims, amps);
}

// p psi- + (1-p) I/4, the parametrization of the 2p^2 closed form
CMat noisy_singlet(double p) {
    CMat rho = CMat::identity(4);
    rho *= cplx(0.25 * (1.0 - p));
    CMat s = dyad(make_bell(0).psi);
    s *= cplx(p);
    rho += s;
    return rho;
}

}  // namespace

TEST_CASE("correlation tensor") {
    auto t = correlation_tensor(dyad(make_bell(0).psi), 2);
    CHECK(std::abs(t.at({0, 0}) - 1.0) < 1e-12);
    for (std::size_t i : {1, 2, 3}) CHECK(std::abs(t.at({i, i}) - (-1.0)) < 1e-12);
    CHECK(std::abs(t.at({1, 2})) < 1e-12);
    CHECK(std::abs(t.at({3, 0})) < 1e-12);

    State prod = State::make_pure({2, 2}, {1.0, 0.0, 0.0, 0.0});
    auto tp = correlation_tensor(prod.density(), 2);
    CHECK(std::abs(tp.at({3, 3}) - 1.0) < 1e-12);
    CHECK(std::abs(tp.at({0, 3}) - 1.0) < 1e-12);
    CHECK(std::abs(tp.at({1, 1})) < 1e-12);
    CHECK(std::abs(tp.at({2, 2})) < 1e-12);

    CMat mixed = CMat::identity(4);
    mixed *= cplx(0.25);
    auto tm = correlation_tensor(mixed, 2);
    for (std::size_t k = 1; k < tm.t.size(); ++k) CHECK(std::abs(tm.t[k]) < 1e-12);

    auto tg = correlation_tensor(make_ghz(3, 2).density(), 3);
    CHECK(std::abs(tg.at({1, 1, 1}) - 1.0) < 1e-12);
    CHECK(std::abs(tg.at({1, 2, 2}) - (-1.0)) < 1e-12);
    CHECK(std::abs(tg.at({3, 3, 0}) - 1.0) < 1e-12);
    CHECK(std::abs(tg.at({0, 0, 3})) < 1e-12);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto tr = correlation_tensor(make_random_density({2, 2}, 4, seed).rho, 2);
        for (double v : tr.t) CHECK(std::abs(v) <= 1.0 + 1e-9);
    }
    CHECK_THROWS_AS(correlation_tensor(CMat::identity(4), 3), QentError);
}

TEST_CASE("horodecki chsh criterion") {
    CMat psim = dyad(make_bell(0).psi);
    CHECK(std::abs(chsh_M(psim) - 2.0) < 1e-9);
    CHECK(std::abs(chsh_B(psim) - std::sqrt(std::sqrt(2.0) - 1.0)) < 1e-9);
    CHECK(std::abs(chsh_analyze(psim).max_value - 2.0 * std::sqrt(2.0)) < 1e-9);

    // singlet-weight family: M = 2p^2, crossing 1 at 1/sqrt(2)
    for (double p : {0.0, 0.3, 0.5, 0.7071067811865476, 0.9, 1.0})
        CHECK(std::abs(chsh_M(noisy_singlet(p)) - 2.0 * p * p) < 1e-9);
    CHECK(chsh_M(noisy_singlet(0.70)) < 1.0);
    CHECK(chsh_M(noisy_singlet(0.72)) > 1.0);

    // U(x)U-invariant parametrization sits at singlet weight (4p-1)/3
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        double q = (4.0 * p - 1.0) / 3.0;
        CHECK(std::abs(chsh_M(make_werner(2, p).rho) - 2.0 * q * q) < 1e-9);
    }

    State prod = State::make_pure({2, 2}, {0.0, 1.0, 0.0, 0.0});
    CHECK(std::abs(chsh_M(prod.density()) - 1.0) < 1e-9);
    CHECK(chsh_B(prod.density()) == 0.0);

    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        CHECK(chsh_M(make_random_separable({2, 2}, 8, seed).rho) <= 1.0 + 1e-9);

    // local-unitary invariance
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        CMat rho = make_random_density({2, 2}, 3, 500 + trial).rho;
        CMat u = kron(random_unitary(2, rng), random_unitary(2, rng));
        CHECK(std::abs(chsh_M(rho) - chsh_M(u * rho * u.dagger())) < 1e-8);
    }

    CHECK_THROWS_AS(chsh_M(CMat::identity(8)), QentError);
}

TEST_CASE("chsh optimal settings and tsirelson bound") {
    CMat psim = dyad(make_bell(0).psi);
    auto an = chsh_analyze(psim);
    CHECK(std::abs(std::abs(bell_chsh_value(psim, an.optimal)) - 2.0 * std::sqrt(2.0)) < 1e-9);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CMat rho = make_random_density({2, 2}, (seed % 4) + 1, seed).rho;
        auto a = chsh_analyze(rho);
        a.optimal.validate();
        double v = std::abs(bell_chsh_value(rho, a.optimal));
        CHECK(std::abs(v - a.max_value) < 1e-8);
        CHECK(std::abs(a.max_value - 2.0 * std::sqrt(a.M)) < 1e-9);
    }

    // Tsirelson for arbitrary settings, and the classical bound on separables
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        CMat rho = make_random_density({2, 2}, 4, 900 + trial).rho;
        auto s = two_site(rand_unit(rng), rand_unit(rng), rand_unit(rng), rand_unit(rng));
        CHECK(std::abs(bell_chsh_value(rho, s)) <= 2.0 * std::sqrt(2.0) + 1e-9);
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CMat sep = make_random_separable({2, 2}, 6, seed).rho;
        CHECK(chsh_analyze(sep).max_value <= 2.0 + 1e-8);
    }

    BellSettings bad = two_site(kX, kY, kZ, {0.0, 0.0, 2.0});
    CHECK_THROWS_AS(bell_chsh_value(psim, bad), QentError);
}

TEST_CASE("wwzb table inequality") {
    // n=2 with the optimizer's settings collapses onto CHSH: lhs/2 = value
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CMat rho = make_random_density({2, 2}, 2, seed).rho;
        auto a = chsh_analyze(rho);
        auto E = correlation_table(rho, a.optimal);
        auto w = wwzb_check(E, 2);
        CHECK(std::abs(w.bound - 4.0) < 1e-12);
        CHECK(std::abs(0.5 * w.lhs - std::abs(bell_chsh_value(rho, a.optimal))) < 1e-8);
    }
    CMat psim = dyad(make_bell(0).psi);
    auto wopt = wwzb_check(correlation_table(psim, chsh_analyze(psim).optimal), 2);
    CHECK(std::abs(wopt.lhs - 4.0 * std::sqrt(2.0)) < 1e-8);
    CHECK_FALSE(wopt.pass);

    // GHZ with x/y settings everywhere: every Fourier coefficient lands on 2
    BellSettings mermin;
    mermin.site.assign(3, {kX, kY});
    auto Eg = correlation_table(make_ghz(3, 2).density(), mermin);
    auto wg = wwzb_check(Eg, 3);
    CHECK(std::abs(wg.lhs - 16.0) < 1e-8);
    CHECK(std::abs(wg.bound - 8.0) < 1e-12);
    CHECK_FALSE(wg.pass);

    // product states stay inside the octahedron
    Rng rng(31);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        State prod = random_product_ket({2, 2, 2}, seed);
        BellSettings s;
        s.site.assign(3, {rand_unit(rng), rand_unit(rng)});
        auto w = wwzb_check(correlation_table(prod.density(), s), 3);
        CHECK(w.pass);
    }
    CHECK_THROWS_AS(wwzb_check(std::vector<double>(5, 0.0), 2), QentError);
}

TEST_CASE("correlation values match the tensor") {
    CMat phi = dyad(make_bell(3).psi);
    CHECK(std::abs(correlation_value(phi, {kZ, kZ}) - 1.0) < 1e-12);
    CHECK(std::abs(correlation_value(phi, {kX, kX}) - 1.0) < 1e-12);
    CHECK(std::abs(correlation_value(dyad(make_bell(0).psi), {kY, kY}) - (-1.0)) < 1e-12);

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        CMat rho = make_random_density({2, 2}, 4, seed).rho;
        auto t = correlation_tensor(rho, 2);
        CHECK(std::abs(correlation_value(rho, {kX, kZ}) - t.at({1, 3})) < 1e-12);
        CHECK(std::abs(correlation_value(rho, {kY, kX}) - t.at({2, 1})) < 1e-12);
    }
}

TEST_CASE("wwzb tensor condition") {
    std::vector<Frame3> id3(3, Frame3{{1, 0, 0, 0, 1, 0, 0, 0, 1}});
    std::vector<Frame3> id2(2, Frame3{{1, 0, 0, 0, 1, 0, 0, 0, 1}});

    // GHZ violates already in the computational frame (Mermin block)
    CHECK_FALSE(wwzb_tensor_check(correlation_tensor(make_ghz(3, 2).density(), 3), id3));

    // the singlet needs a rotated frame before the block shows the violation
    auto ts = correlation_tensor(dyad(make_bell(0).psi), 2);
    CHECK(wwzb_tensor_check(ts, id2));
    std::vector<Frame3> tilted = {Frame3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}, rot_z(0.25 * 3.14159265358979)};
    CHECK_FALSE(wwzb_tensor_check(ts, tilted));

    // product and separable states pass in every frame
    Rng rng(47);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        State prod = random_product_ket({2, 2}, seed);
        std::vector<Frame3> fr = {rand_frame(rng), rand_frame(rng)};
        CHECK(wwzb_tensor_check(correlation_tensor(prod.density(), 2), fr));
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        CMat sep = make_random_separable({2, 2, 2}, 8, seed).rho;
        std::vector<Frame3> fr = {rand_frame(rng), rand_frame(rng), rand_frame(rng)};
        CHECK(wwzb_tensor_check(correlation_tensor(sep, 3), fr));
    }

    std::vector<Frame3> bad = {Frame3{{1, 0, 0, 0, 1, 0, 0, 0, 1}},
                               Frame3{{2, 0, 0, 0, 1, 0, 0, 0, 1}}};
    CHECK_THROWS_AS(wwzb_tensor_check(ts, bad), QentError);
}

TEST_CASE("all-versus-nothing operator") {
    State hyper = make_avn_hyper();
    CHECK(std::abs(ghz_avn_value(hyper) - 9.0) < 1e-9);

    // eigenoperator check: O|Psi> = 9|Psi>
    auto op = avn_operator();
    CHECK(op.herm_defect() < 1e-12);
    auto image = matvec(op, hyper.psi);
    for (std::size_t i = 0; i < image.size(); ++i)
        CHECK(std::abs(image[i] - 9.0 * hyper.psi[i]) < 1e-9);

    CMat mixed = CMat::identity(16);
    mixed *= cplx(1.0 / 16.0);
    CHECK(std::abs(ghz_avn_value(State::make_density({2, 2, 2, 2}, mixed))) < 1e-12);

    double best = -1e9;
    for (std::uint64_t seed = 1; seed <= 400; ++seed)
        best = std::max(best, ghz_avn_value(random_product_ket({2, 2, 2, 2}, seed)));
    CHECK(best <= 7.0 + 1e-9);

    CHECK_THROWS_AS(ghz_avn_value(make_ghz(4, 2).with_dims({4, 4})), QentError);
}

TEST_CASE("toner chsh monogamy") {
    // singlet with A|B plus a spectator C
    CMat psim = dyad(make_bell(0).psi);
    auto opt = chsh_analyze(psim);
    CMat rho = kron(psim, dyad({1.0, 0.0}));
    BellSettings ac = two_site(opt.optimal.site[0][0], opt.optimal.site[0][1], kX, kZ);
    auto r = toner_monogamy(rho, opt.optimal, ac);
    CHECK(std::abs(std::abs(r.vAB) - 2.0 * std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(r.vAC) <= 4.0 - 2.0 * std::sqrt(2.0) + 1e-9);
    CHECK(r.pass);
    CHECK(std::abs(r.sum - (std::abs(r.vAB) + std::abs(r.vAC))) < 1e-12);

    // fully product input: both pairs are classical
    State prod = random_product_ket({2, 2, 2}, 3);
    Rng rng(61);
    BellSettings pab = two_site(rand_unit(rng), rand_unit(rng), rand_unit(rng), rand_unit(rng));
    BellSettings pac = two_site(pab.site[0][0], pab.site[0][1], rand_unit(rng), rand_unit(rng));
    auto rp = toner_monogamy(prod.density(), pab, pac);
    CHECK(std::abs(rp.vAB) <= 2.0 + 1e-9);
    CHECK(std::abs(rp.vAC) <= 2.0 + 1e-9);
    CHECK(rp.pass);

    // random states with shared A settings always respect the bound
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        CMat r3 = make_random_density({2, 2, 2}, 4, seed).rho;
        Vec3 a1 = rand_unit(rng), a2 = rand_unit(rng);
        BellSettings sab = two_site(a1, a2, rand_unit(rng), rand_unit(rng));
        BellSettings sac = two_site(a1, a2, rand_unit(rng), rand_unit(rng));
        auto rr = toner_monogamy(r3, sab, sac);
        CHECK(rr.sum <= 4.0 + 1e-9);
        CHECK(rr.pass);
    }
}
