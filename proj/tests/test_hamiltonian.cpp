#include "doctest.h"

#include "qbsim/hamiltonian.hpp"

#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace qbsim;

namespace {

oracles::Dense to_dense(const ComplexMatrix& m) {
    oracles::Dense d(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) d.at(i, j) = m(i, j);
    return d;
}

ModelConfig direct_cfg(double alpha) {
    ModelConfig cfg;
    cfg.model = Model::Direct;
    cfg.protocol = Protocol::InteractionSwitch;
    cfg.alpha = alpha;
    cfg.g = 0.05;
    cfg.n_initial = 10;
    return cfg;
}

ModelConfig cavity_cfg(double alpha, int n = 10) {
    ModelConfig cfg;
    cfg.model = Model::Cavity;
    cfg.protocol = Protocol::InteractionSwitch;
    cfg.alpha = alpha;
    cfg.g = 0.05;
    cfg.n_initial = n;
    return cfg;
}

const SwitchProfile kProfile{14.0, 0.1, ProfileKind::InteractionF};

} // namespace

TEST_CASE("direct model: static part is degenerate on the one-excitation qubit block at resonance") {
    const auto dec = build_direct(direct_cfg(1.0), &kProfile);
    HilbertSpace space = HilbertSpace::for_initial_photons(10);
    const auto i10 = space.index_of({1, 0, 3});
    const auto i01 = space.index_of({0, 1, 3});
    CHECK(dec.h_static(i10, i10).real() == doctest::Approx(dec.h_static(i01, i01).real()));
}

TEST_CASE("direct model: driven part exchanges the qubit excitation with element g") {
    const auto cfg = direct_cfg(0.8);
    const auto dec = build_direct(cfg, &kProfile);
    HilbertSpace space = HilbertSpace::for_initial_photons(10);

    for (int n : {0, 4, 11}) {
        const auto bra = space.index_of({0, 1, n});
        const auto ket = space.index_of({1, 0, n});
        CHECK(dec.h_driven(bra, ket).real() == doctest::Approx(cfg.g));
    }
    // and nothing else: total squared weight equals the 2*(n_max+1) exchange elements
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < space.dim(); ++i)
        for (std::size_t j = 0; j < space.dim(); ++j) sum_sq += std::norm(dec.h_driven(i, j));
    CHECK(sum_sq == doctest::Approx(2.0 * 12 * cfg.g * cfg.g));
}

TEST_CASE("excitation number commutes with every part of every model") {
    for (const auto& dec : {build_direct(direct_cfg(0.8), &kProfile),
                            build_cavity(cavity_cfg(0.8), &kProfile),
                            build_cavity(cavity_cfg(1.0), &kProfile)}) {
        const auto n_exc = to_dense(dec.parts.excitation);
        CHECK(oracles::max_abs(oracles::commutator(n_exc, to_dense(dec.h_static))) < 1e-12);
        CHECK(oracles::max_abs(oracles::commutator(n_exc, to_dense(dec.h_driven))) < 1e-12);
    }
}

TEST_CASE("cavity model: bosonic enhancement of the exchange elements") {
    const auto cfg = cavity_cfg(0.8, 10);
    const auto dec = build_cavity(cfg, &kProfile);
    HilbertSpace space = HilbertSpace::for_initial_photons(10);

    const int n = 7;
    // <0,0,n+1| h_driven |1,0,n> = g sqrt(n+1)   (charger emits into the cavity)
    CHECK(dec.h_driven(space.index_of({0, 0, n + 1}), space.index_of({1, 0, n})).real() ==
          doctest::Approx(cfg.g * std::sqrt(double(n + 1))));
    // <1,1,n-1| h_driven |1,0,n> = g sqrt(n)     (battery absorbs from the cavity)
    CHECK(dec.h_driven(space.index_of({1, 1, n - 1}), space.index_of({1, 0, n})).real() ==
          doctest::Approx(cfg.g * std::sqrt(double(n))));
}

TEST_CASE("the N = 11 sector of the n = 10 cavity space is four dimensional") {
    HilbertSpace space = HilbertSpace::for_initial_photons(10);
    const auto block = excitation_block(space, 11);
    REQUIRE(block.indices.size() == 4);

    bool seen_1_0_10 = false, seen_0_1_10 = false, seen_0_0_11 = false, seen_1_1_9 = false;
    for (auto idx : block.indices) {
        const auto label = space.label_of(idx);
        CHECK(label.total_excitations() == 11);
        if (label == BasisLabel{1, 0, 10}) seen_1_0_10 = true;
        if (label == BasisLabel{0, 1, 10}) seen_0_1_10 = true;
        if (label == BasisLabel{0, 0, 11}) seen_0_0_11 = true;
        if (label == BasisLabel{1, 1, 9}) seen_1_1_9 = true;
    }
    CHECK(seen_1_0_10);
    CHECK(seen_0_1_10);
    CHECK(seen_0_0_11);
    CHECK(seen_1_1_9);
}

TEST_CASE("H(t) is Hermitian at random times for all builders") {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> ut(0.0, 3.0 * kProfile.tau);

    ModelConfig det = cavity_cfg(0.8);
    det.protocol = Protocol::DetuningSwitch;
    const SwitchProfile gp{14.0, 0.1, ProfileKind::DetuningG};

    for (const auto& dec : {build_direct(direct_cfg(0.8), &kProfile),
                            build_cavity(cavity_cfg(0.8), &kProfile),
                            build_detuning_protocol(det, gp)}) {
        for (int k = 0; k < 100; ++k) {
            CHECK(dec.hamiltonian_at(ut(rng)).hermiticity_error() < 1e-12);
        }
    }
}

TEST_CASE("decomposition schedule derivative matches finite differences of u") {
    ModelConfig det = cavity_cfg(0.8);
    det.protocol = Protocol::DetuningSwitch;
    const SwitchProfile gp{9.0, 0.1, ProfileKind::DetuningG};
    const auto dec = build_detuning_protocol(det, gp);

    const double h = gp.t0 / 100.0;
    for (double t = 0.5; t < 2.5 * gp.tau; t += 0.019) {
        const double analytic = dec.schedule.u_dot(t);
        const double numeric = oracles::centered_difference(dec.schedule.u, t, h);
        const double scale = std::max(std::abs(analytic), 1e-4 / gp.t0);
        CHECK(std::abs(analytic - numeric) <= 1e-6 * scale);
    }
}

TEST_CASE("detuning protocol: schedule endpoints and the degenerate resonant case") {
    ModelConfig det = cavity_cfg(1.0);
    det.protocol = Protocol::DetuningSwitch;
    det.cavity_term = CavityTerm::FixedOmegaB;
    const SwitchProfile gp{9.0, 0.1, ProfileKind::DetuningG};
    const auto dec = build_detuning_protocol(det, gp);

    CHECK(dec.schedule.u(0.0) == doctest::Approx(1.0));  // alpha = 1: constant schedule
    CHECK(dec.schedule.u(1.5 * gp.tau) == 1.0);

    // with the cavity term restored, alpha = 1 reproduces the resonant cavity
    // model with the interaction permanently on
    const auto cav = build_cavity(cavity_cfg(1.0), nullptr);
    for (double t : {0.0, 5.0, 13.5, 30.0}) {
        CHECK(max_abs_diff(dec.hamiltonian_at(t), cav.hamiltonian_at(t)) < 1e-14);
    }
}

TEST_CASE("detuning protocol endpoints off resonance") {
    ModelConfig det = cavity_cfg(0.8);
    det.protocol = Protocol::DetuningSwitch;
    const SwitchProfile gp{9.0, 0.1, ProfileKind::DetuningG};
    const auto dec = build_detuning_protocol(det, gp);
    CHECK(dec.schedule.u(0.0) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(dec.schedule.u(1.5 * gp.tau) == 1.0);

    // literal reading: both qubit frequencies ride the schedule
    HilbertSpace space = HilbertSpace::for_initial_photons(10);
    const auto h0 = dec.hamiltonian_at(0.0);
    const auto i_c = space.index_of({1, 0, 0});
    const auto i_g = space.index_of({0, 0, 0});
    // charger splitting at t=0: alpha * omega_b * g(0) = alpha^2
    CHECK((h0(i_c, i_c).real() - h0(i_g, i_g).real()) == doctest::Approx(0.8 * 0.8).epsilon(1e-10));
}

TEST_CASE("charger-only reading keeps the battery frequency fixed") {
    ModelConfig det = cavity_cfg(0.8);
    det.protocol = Protocol::DetuningSwitch;
    det.detuning_reading = DetuningReading::ChargerOnly;
    const SwitchProfile gp{9.0, 0.1, ProfileKind::DetuningG};
    const auto dec = build_detuning_protocol(det, gp);

    HilbertSpace space = HilbertSpace::for_initial_photons(10);
    const auto i_b = space.index_of({0, 1, 0});
    const auto i_g = space.index_of({0, 0, 0});
    const auto i_c = space.index_of({1, 0, 0});

    // battery splitting stays omega_b at all times
    for (double t : {0.0, 9.0, 13.5, 25.0}) {
        const auto h = dec.hamiltonian_at(t);
        CHECK((h(i_b, i_b).real() - h(i_g, i_g).real()) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // charger sweeps from alpha * omega_b to omega_b at the plateau
    CHECK((dec.hamiltonian_at(0.0)(i_c, i_c).real() - dec.hamiltonian_at(0.0)(i_g, i_g).real()) ==
          doctest::Approx(0.8).epsilon(1e-10));
    CHECK((dec.hamiltonian_at(1.5 * gp.tau)(i_c, i_c).real() -
           dec.hamiltonian_at(1.5 * gp.tau)(i_g, i_g).real()) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("direct model leaves the photon sector inert") {
    const auto dec = build_direct(direct_cfg(0.8), &kProfile);
    HilbertSpace space = HilbertSpace::for_initial_photons(10);
    // no matrix element changes the photon count, and the static energy is
    // photon independent
    for (std::size_t i = 0; i < space.dim(); ++i) {
        const auto li = space.label_of(i);
        for (std::size_t j = 0; j < space.dim(); ++j) {
            const auto lj = space.label_of(j);
            if (li.photons != lj.photons) {
                CHECK(std::abs(dec.h_static(i, j)) == 0.0);
                CHECK(std::abs(dec.h_driven(i, j)) == 0.0);
            }
        }
    }
    const auto e0 = dec.h_static(space.index_of({1, 0, 0}), space.index_of({1, 0, 0})).real();
    const auto e9 = dec.h_static(space.index_of({1, 0, 9}), space.index_of({1, 0, 9})).real();
    CHECK(e0 == doctest::Approx(e9));
}

TEST_CASE("projection to the conserved sector preserves matrix elements") {
    const auto cfg = cavity_cfg(0.8, 3);
    const auto dec = build_cavity(cfg, &kProfile);
    HilbertSpace space = HilbertSpace::for_initial_photons(3);
    const auto block = excitation_block(space, 4);
    const auto reduced = project_decomposition(dec, block);

    REQUIRE(reduced.dim == block.indices.size());
    for (std::size_t a = 0; a < block.indices.size(); ++a)
        for (std::size_t b = 0; b < block.indices.size(); ++b) {
            CHECK(reduced.h_static(a, b) == dec.h_static(block.indices[a], block.indices[b]));
            CHECK(reduced.h_driven(a, b) == dec.h_driven(block.indices[a], block.indices[b]));
        }
}
