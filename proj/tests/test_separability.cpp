#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "qent/separability.hpp"
#include "qent/zoo.hpp"

using namespace qent;

namespace {

bool fires(const CriterionReport& r) { return r.verdict == Verdict::ENTANGLED; }

double witness_expect(const CMat& w, const CMat& rho) {
    cplx t = 0.0;
    for (std::size_t r = 0; r < rho.rows(); ++r)
        for (std::size_t c = 0; c < rho.cols(); ++c) t += w(r, c) * rho(c, r);
    return t.real();
}

}  // namespace

TEST_CASE("ppt criterion") {
    State psim = make_bell(0);
    auto r = check_ppt(psim.density(), psim.dims, {0});
    CHECK(fires(r));
    CHECK(std::abs(r.evidence - (-0.5)) < 1e-9);
    // the attached witness reproduces the evidence as an expectation value
    CHECK(r.witness.rows() == 4);
    CHECK(std::abs(witness_expect(r.witness, psim.density()) - r.evidence) < 1e-9);

    CMat mixed = CMat::identity(4);
    mixed *= cplx(0.25);
    auto rm = check_ppt(mixed, {2, 2}, {0});
    CHECK(rm.verdict == Verdict::SEPARABLE);
    CHECK(std::abs(rm.evidence - 0.25) < 1e-12);

    CHECK(check_ppt(make_werner(2, 0.55).rho, {2, 2}, {0}).verdict == Verdict::ENTANGLED);
    CHECK(check_ppt(make_werner(2, 0.45).rho, {2, 2}, {0}).verdict == Verdict::SEPARABLE);

    auto w3 = check_ppt(make_werner(3, 0.8).rho, {3, 3}, {0});
    CHECK(fires(w3));
    CHECK(std::abs(w3.evidence - (-0.2)) < 1e-9);
    CHECK(check_ppt(make_werner(3, 0.3).rho, {3, 3}, {0}).verdict == Verdict::INCONCLUSIVE);

    auto me3 = check_ppt(make_maxent(3).density(), {3, 3}, {0});
    CHECK(fires(me3));
    CHECK(std::abs(me3.evidence - (-1.0 / 3.0)) < 1e-9);

    CHECK(check_ppt(make_chessboard(0.3).rho, {3, 3}, {0}).verdict == Verdict::INCONCLUSIVE);

    State ghz = make_ghz(3, 2);
    CHECK(std::abs(check_ppt(ghz.density(), ghz.dims, {0}).evidence - (-0.5)) < 1e-9);
}

TEST_CASE("reduction criterion") {
    State psim = make_bell(0);
    auto r = check_reduction(psim.density(), psim.dims, {0});
    CHECK(fires(r));
    CHECK(std::abs(r.evidence - (-0.5)) < 1e-9);

    auto iso = check_reduction(make_isotropic(3, 0.8).rho, {3, 3}, {0});
    CHECK(fires(iso));
    CHECK(std::abs(iso.evidence - (1.0 / 3.0 - 0.8)) < 1e-9);

    State prod = make_random_separable({2, 3}, 1, 5);
    auto rp = check_reduction(prod.rho, prod.dims, {0});
    CHECK(rp.verdict == Verdict::INCONCLUSIVE);
    CHECK(rp.evidence > -1e-10);
}

TEST_CASE("positive map criteria") {
    auto choi = check_map(make_maxent(3).density(), {3, 3}, {0}, PositiveMapKind::choi);
    CHECK(fires(choi));
    CHECK(choi.evidence < -0.1);
    CHECK(choi.criterion == "choi");

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        State s = make_random_separable({3, 3}, 5, seed);
        auto r = check_map(s.rho, s.dims, {0}, PositiveMapKind::choi);
        CHECK(r.verdict == Verdict::INCONCLUSIVE);
        CHECK(r.evidence > -1e-9);
    }
    CHECK_THROWS_AS(check_map(make_werner(2, 0.5).rho, {2, 2}, {0}, PositiveMapKind::choi),
                    QentError);

    auto bh = check_map(make_maxent(4).density(), {4, 4}, {0}, PositiveMapKind::breuerHall);
    CHECK(fires(bh));
    CHECK(bh.criterion == "breuer");

    // an explicit U equal to the default reproduces the default evidence
    CMat u(4, 4);
    for (std::size_t i = 0; i < 4; ++i) u(i, 3 - i) = (i % 2 == 0) ? 1.0 : -1.0;
    auto bh2 =
        check_map(make_maxent(4).density(), {4, 4}, {0}, PositiveMapKind::breuerHall, &u);
    CHECK(std::abs(bh.evidence - bh2.evidence) < 1e-12);

    CMat bad = CMat::identity(4);  // unitary but symmetric
    CHECK_THROWS_AS(
        check_map(make_maxent(4).density(), {4, 4}, {0}, PositiveMapKind::breuerHall, &bad),
        QentError);
    CHECK_THROWS_AS(
        check_map(make_maxent(3).density(), {3, 3}, {0}, PositiveMapKind::breuerHall),
        QentError);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        State s = make_random_separable({2, 4}, 5, seed);
        CHECK(check_map(s.rho, s.dims, {0}, PositiveMapKind::breuerHall).evidence > -1e-9);
    }
}

TEST_CASE("realignment criterion") {
    auto r = check_realignment(make_maxent(2).density(), {2, 2}, {0});
    CHECK(fires(r));
    CHECK(std::abs(r.evidence - 1.0) < 1e-9);

    CMat mixed = CMat::identity(4);
    mixed *= cplx(0.25);
    auto rm = check_realignment(mixed, {2, 2}, {0});
    CHECK(rm.verdict == Verdict::INCONCLUSIVE);
    CHECK(std::abs(rm.evidence - (-0.5)) < 1e-9);

    State prod = make_random_separable({3, 3}, 1, 2);
    CHECK(std::abs(check_realignment(prod.rho, prod.dims, {0}).evidence) < 1e-10);

    // the realignment test sees the whole chessboard family even though PPT
    // holds there
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        State cb = make_chessboard(a);
        CHECK(fires(check_realignment(cb.rho, cb.dims, {0})));
        CHECK(check_ppt(cb.rho, cb.dims, {0}).verdict == Verdict::INCONCLUSIVE);
    }
}

TEST_CASE("majorization criterion") {
    State psim = make_bell(0);
    auto r = check_majorization(psim.density(), psim.dims, {0});
    CHECK(fires(r));
    CHECK(std::abs(r.evidence - 0.5) < 1e-9);

    CHECK(fires(check_majorization(make_werner(2, 0.7).rho, {2, 2}, {0})));
    CHECK(check_majorization(make_werner(2, 0.45).rho, {2, 2}, {0}).verdict ==
          Verdict::INCONCLUSIVE);

    State pure = make_random_pure({3, 3}, 7);
    CHECK(fires(check_majorization(pure.density(), pure.dims, {0})));
}

TEST_CASE("entropic criterion") {
    auto r = check_entropic(make_maxent(2).density(), {2, 2}, {0}, 2.0);
    CHECK(fires(r));
    CHECK(std::abs(r.evidence - 1.0) < 1e-9);
    CHECK(r.criterion == "entropic:2");

    // Werner detection boundaries: alpha=2 at p=(1+sqrt3)/4, alpha=inf at 1/2
    CHECK(fires(check_entropic(make_werner(2, 0.70).rho, {2, 2}, {0}, 2.0)));
    CHECK(!fires(check_entropic(make_werner(2, 0.66).rho, {2, 2}, {0}, 2.0)));
    double inf = std::numeric_limits<double>::infinity();
    CHECK(fires(check_entropic(make_werner(2, 0.52).rho, {2, 2}, {0}, inf)));
    CHECK(!fires(check_entropic(make_werner(2, 0.48).rho, {2, 2}, {0}, inf)));
}

TEST_CASE("two-qubit determinant test") {
    State psim = make_bell(0);
    auto r = check_two_qubit_det(psim.density(), psim.dims);
    CHECK(fires(r));
    CHECK(std::abs(r.evidence - (-1.0 / 16.0)) < 1e-12);

    CMat mixed = CMat::identity(4);
    mixed *= cplx(0.25);
    auto rm = check_two_qubit_det(mixed, {2, 2});
    CHECK(rm.verdict == Verdict::SEPARABLE);
    CHECK(std::abs(rm.evidence - 1.0 / 256.0) < 1e-12);

    CHECK_THROWS_AS(check_two_qubit_det(make_maxent(3).density(), {3, 3}), QentError);

    // never INCONCLUSIVE, and always in agreement with PPT
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        State s = make_random_density({2, 2}, 1 + seed % 4, seed);
        auto det = check_two_qubit_det(s.rho, s.dims);
        auto ppt = check_ppt(s.rho, s.dims, {0});
        CHECK(det.verdict != Verdict::INCONCLUSIVE);
        CHECK(det.verdict == ppt.verdict);
    }
}

TEST_CASE("slot permutation family") {
    auto t1 = distinct_slot_permutations(1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].slot_perm == std::vector<std::size_t>({0, 1}));

    auto t2 = distinct_slot_permutations(2);
    std::set<std::vector<std::size_t>> got2;
    for (const auto& t : t2) got2.insert(t.slot_perm);
    std::set<std::vector<std::size_t>> want2 = {
        {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    CHECK(got2 == want2);

    auto t3 = distinct_slot_permutations(3);
    std::set<std::vector<std::size_t>> got3;
    for (const auto& t : t3) got3.insert(t.slot_perm);
    std::set<std::vector<std::size_t>> want3 = {
        {0, 1, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 4, 2, 3, 5}, {0, 1, 5, 2, 3, 4},
        {0, 2, 3, 1, 4, 5}, {0, 2, 4, 1, 3, 5}, {0, 4, 5, 1, 2, 3}};
    CHECK(got3 == want3);

    // deterministic across calls
    auto again = distinct_slot_permutations(3);
    REQUIRE(again.size() == t3.size());
    for (std::size_t i = 0; i < t3.size(); ++i) CHECK(again[i].slot_perm == t3[i].slot_perm);

    State psim = make_bell(0);
    auto all = check_permutations_all(psim.density(), psim.dims);
    CHECK(fires(all));
    CHECK(std::abs(all.evidence - 1.0) < 1e-9);

    // identity never fires
    auto id = check_permutation(make_werner(3, 0.9).rho, {3, 3}, {0, 1, 2, 3});
    CHECK(std::abs(id.evidence) < 1e-10);

    // three of the seven three-party tests expose the shift state's
    // entanglement even though every bipartite criterion passes on it
    State shift = make_upb_shift_state();
    std::set<std::vector<std::size_t>> firing = {
        {0, 1, 3, 2, 4, 5}, {0, 1, 4, 2, 3, 5}, {0, 2, 3, 1, 4, 5}};
    for (const auto& t : t3) {
        auto r = check_permutation(shift.rho, shift.dims, t.slot_perm);
        if (firing.count(t.slot_perm)) {
            CHECK(fires(r));
            CHECK(std::abs(r.evidence - 0.08649) < 1e-3);
        } else {
            CHECK(std::abs(r.evidence) < 1e-12);
        }
    }

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        State s = make_random_separable({2, 2, 2}, 4, seed);
        CHECK(!fires(check_permutations_all(s.rho, s.dims)));
    }
}

TEST_CASE("entanglement witnesses") {
    State psim = make_bell(0);
    State phip = make_bell(3);

    auto wv = make_witness_swap(2);
    CHECK(std::abs(evaluate_witness(wv, psim.density()) - (-1.0)) < 1e-12);
    CHECK(std::abs(evaluate_witness(wv, phip.density()) - 1.0) < 1e-12);
    CHECK(fires(check_witness("swap", psim.density(), {2, 2}, {0})));
    CHECK(check_witness("swap", phip.density(), {2, 2}, {0}).verdict ==
          Verdict::INCONCLUSIVE);

    auto wf = make_witness_fidelity(2);
    CHECK(std::abs(evaluate_witness(wf, phip.density()) - (-0.5)) < 1e-12);
    CHECK(std::abs(evaluate_witness(wf, psim.density()) - 0.5) < 1e-12);
    auto wf3 = make_witness_fidelity(3);
    CHECK(std::abs(evaluate_witness(wf3, make_maxent(3).density()) - (1.0 / 3.0 - 1.0)) <
          1e-12);

    auto wc = check_witness("chsh", phip.density(), {2, 2}, {0});
    CHECK(fires(wc));
    CHECK(std::abs(wc.evidence - (2.0 - 2.0 * std::sqrt(2.0))) < 1e-9);

    CHECK_THROWS_AS(check_witness("swap", make_random_separable({2, 3}, 2, 1).rho, {2, 3},
                                  {0}),
                    QentError);
    CHECK_THROWS_AS(check_witness("nope", psim.density(), {2, 2}, {0}), QentError);

    // every constructed witness has a negative eigenvalue and stays
    // nonnegative on sampled product states
    std::vector<WitnessOperator> ws = {wv, wf, wf3, make_witness_chsh(phip.density())};
    for (const auto& w : ws) {
        CHECK(hermitian_eigenvalues(w.matrix).back() < -1e-9);
        std::size_t d = w.dims[0];
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            State prod = make_random_separable({d, w.dims[1]}, 1, seed);
            CHECK(evaluate_witness(w, prod.rho) > -1e-9);
        }
    }
}

TEST_CASE("schmidt rank") {
    CHECK(schmidt_rank(make_maxent(3).psi, {3, 3}, {0}) == 3);
    CHECK(schmidt_rank(make_w(3).psi, {2, 2, 2}, {0}) == 2);
    State p2 = make_random_pure({2}, 1);
    State p6 = make_random_pure({6}, 2);
    CHECK(schmidt_rank(kron_vec(p2.psi, p6.psi), {2, 2, 3}, {0}) == 1);
}

TEST_CASE("run_criterion token dispatch") {
    State w = make_werner(2, 0.9);
    CHECK(fires(run_criterion("ppt", w, {0})));
    CHECK(fires(run_criterion("det2q", w, {0})));
    CHECK(fires(run_criterion("witness:chsh", w, {0})));
    CHECK(run_criterion("entropic:inf", w, {0}).criterion == "entropic:inf");
    CHECK_THROWS_AS(run_criterion("entropic:abc", w, {0}), QentError);
    CHECK_THROWS_AS(run_criterion("entropic:-1", w, {0}), QentError);
    CHECK_THROWS_AS(run_criterion("frobnicate", w, {0}), QentError);
}

TEST_CASE("battery combiner") {
    auto hot = battery(make_werner(2, 0.9));
    CHECK(hot.verdict == Verdict::ENTANGLED);

    auto cold = battery(make_werner(2, 0.3));
    CHECK(cold.verdict == Verdict::SEPARABLE);
    CHECK(cold.note.find("sufficiency") != std::string::npos);

    // reports are sorted by (criterion, partition)
    for (std::size_t i = 1; i < hot.reports.size(); ++i) {
        const auto &a = hot.reports[i - 1], &b = hot.reports[i];
        CHECK((a.criterion < b.criterion ||
               (a.criterion == b.criterion && a.partition <= b.partition)));
    }

    // pure inputs: verdict tracks the Schmidt rank exactly
    CHECK(battery(make_ghz(3, 2)).verdict == Verdict::ENTANGLED);
    State p2 = make_random_pure({2}, 11);
    State p3 = make_random_pure({3}, 12);
    State p2b = make_random_pure({2}, 13);
    State prod = State::make_pure({2, 3, 2},
                                  kron_vec(kron_vec(p2.psi, p3.psi), p2b.psi));
    CHECK(battery(prod).verdict == Verdict::SEPARABLE);

    // Smolin: explicit ppt across every cut -- NPT exactly on the 1|3 cuts
    State smolin = make_smolin();
    auto sm = battery(smolin, {}, {"ppt"});
    CHECK(sm.verdict == Verdict::ENTANGLED);
    for (const auto& r : sm.reports) {
        bool one_three = r.partition.size() == 1 || r.partition.size() == 3;
        CHECK(fires(r) == one_three);
    }

    // shift state: entangled through the permutation family alone
    auto sh = battery(make_upb_shift_state());
    CHECK(sh.verdict == Verdict::ENTANGLED);
    for (const auto& r : sh.reports)
        if (r.criterion != "permute") CHECK(!fires(r));

    CMat single = CMat::identity(4);
    single *= cplx(0.25);
    auto sv = battery(State::make_density({4}, single));
    CHECK(sv.verdict == Verdict::SEPARABLE);

    auto na = battery(make_werner(2, 0.9), {{0}}, {"choi"});
    CHECK(na.verdict == Verdict::INCONCLUSIVE);
    REQUIRE(na.reports.size() == 1);
    CHECK(na.reports[0].note.find("not applicable") != std::string::npos);
}

TEST_CASE("soundness and dominance sweeps") {
    // no criterion may fire on separable input
    std::vector<Dims> dd = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}};
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        State s = make_random_separable(dd[seed % dd.size()], 2 + seed % 5, seed);
        auto b = battery(s);
        CHECK(b.verdict != Verdict::ENTANGLED);
        for (const auto& r : b.reports) CHECK(!fires(r));
    }

    // reduction fires => ppt fires; entropic(inf) fires => reduction fires
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Dims d = seed % 2 ? Dims{2, 3} : Dims{3, 3};
        State s = make_random_density(d, 1 + seed % 4, seed);
        bool ppt = fires(check_ppt(s.rho, s.dims, {0}));
        bool red = fires(check_reduction(s.rho, s.dims, {0}));
        bool ent = fires(check_entropic(s.rho, s.dims, {0},
                                        std::numeric_limits<double>::infinity()));
        if (red) CHECK(ppt);
        if (ent) CHECK(red);
    }
}
