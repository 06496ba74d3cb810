#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binlat/errors.hpp"
#include "binlat/rabi_floquet.hpp"
#include "binlat/spectral.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace binlat;

TEST_CASE("Floquet matrix elements") {
    SUBCASE("decoupled limit") {
        const FloquetMatrix h = build_floquet_hamiltonian(RabiParams(0.3, 1.0, 0.0), Truncation(1));
        CHECK(h.dimension() == 6);
        const Eigen::MatrixXd d = h.dense();
        CHECK((d - Eigen::MatrixXd(d.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
        for (int n = -1; n <= 1; ++n) {
            CHECK(h(Spin::up, n, Spin::up, n) == doctest::Approx(0.15 + n));
            CHECK(h(Spin::down, n, Spin::down, n) == doctest::Approx(-0.15 + n));
        }
    }
    SUBCASE("coupling pattern") {
        const FloquetMatrix h = build_floquet_hamiltonian(RabiParams(0.3, 1.0, 0.2), Truncation(1));
        CHECK(h(Spin::up, 0, Spin::down, 1) == -0.2);
        CHECK(h(Spin::down, 1, Spin::up, 0) == -0.2);
        CHECK(h(Spin::up, 0, Spin::down, -1) == -0.2);
        CHECK(h(Spin::up, 0, Spin::up, 1) == 0.0);
        CHECK(h(Spin::up, 0, Spin::down, 0) == 0.0);
        CHECK(h.dense() == h.dense().transpose());
    }
}

TEST_CASE("parity operator") {
    const Truncation trunc(4);
    const Eigen::VectorXd pi = parity_operator(trunc);
    CHECK(pi(FloquetMatrix::basis_index(trunc, Spin::up, 0)) == -1.0);
    CHECK(pi(FloquetMatrix::basis_index(trunc, Spin::down, 0)) == 1.0);
    CHECK(pi(FloquetMatrix::basis_index(trunc, Spin::up, 1)) == 1.0);
    CHECK(pi.cwiseProduct(pi) == Eigen::VectorXd::Ones(pi.size()));

    std::mt19937 rng(8);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const FloquetMatrix h = build_floquet_hamiltonian(RabiParams(u(rng), 0.5 + u(rng), u(rng)), trunc);
        const Eigen::MatrixXd conj = pi.asDiagonal() * h.dense() * pi.asDiagonal();
        CHECK((conj - h.dense()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("parity chains") {
    const RabiParams rabi(0.3, 1.0, 0.2);
    SUBCASE("odd chain") {
        const TridiagonalMatrix c = build_parity_chain(rabi, Parity::odd, Truncation(1));
        CHECK(c.diag[0] == doctest::Approx(-1.15));
        CHECK(c.diag[1] == doctest::Approx(0.15));
        CHECK(c.diag[2] == doctest::Approx(0.85));
        CHECK(c.offdiag == std::vector<double>{-0.2, -0.2});
    }
    SUBCASE("even chain") {
        const TridiagonalMatrix c = build_parity_chain(rabi, Parity::even, Truncation(1));
        CHECK(c.diag[0] == doctest::Approx(-0.85));
        CHECK(c.diag[1] == doctest::Approx(-0.15));
        CHECK(c.diag[2] == doctest::Approx(1.15));
    }
    SUBCASE("odd chain equals the lattice Hamiltonian bit for bit") {
        std::mt19937 rng(31);
        std::uniform_real_distribution<double> u(0.0, 3.0);
        for (int trial = 0; trial < 50; ++trial) {
            const RabiParams r(u(rng), 0.1 + u(rng), u(rng));
            const Truncation trunc(1 + trial % 40);
            CHECK(build_parity_chain(r, Parity::odd, trunc) ==
                  build_lattice_hamiltonian(lattice_from_rabi(r, Parity::odd), trunc));
            CHECK(build_parity_chain(r, Parity::even, trunc) ==
                  build_lattice_hamiltonian(lattice_from_rabi(r, Parity::even), trunc));
        }
    }
}

TEST_CASE("lattice parameters from Rabi parameters") {
    const LatticeParams odd = lattice_from_rabi(RabiParams(0.3, 1.0, 0.2), Parity::odd);
    CHECK(odd.V() == 0.2);
    CHECK(odd.epsilon() == 0.3);
    CHECK(odd.F() == 1.0);
    CHECK(lattice_from_rabi(RabiParams(0.3, 1.0, 0.2), Parity::even).epsilon() == -0.3);
    const LatticeParams a = lattice_from_rabi(RabiParams(0.0, 2.0, 0.5), Parity::odd);
    const LatticeParams b = lattice_from_rabi(RabiParams(0.0, 2.0, 0.5), Parity::even);
    CHECK(a.epsilon() == b.epsilon());
    CHECK(a.V() == b.V());
    CHECK(a.F() == b.F());
    CHECK_THROWS_AS(RabiParams(0.3, 0.0, 0.2), ValidationError);
    CHECK_THROWS_AS(RabiParams(-0.3, 1.0, 0.2), ValidationError);
}

TEST_CASE("parity block split of the Floquet spectrum") {
    const RabiParams rabi(0.3, 1.0, 0.2);
    const Truncation trunc(20);
    const FloquetMatrix h = build_floquet_hamiltonian(rabi, trunc);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(h.dense(), Eigen::EigenvaluesOnly);
    std::vector<double> chains;
    for (Parity p : {Parity::even, Parity::odd}) {
        const Spectrum s = eigh_tridiagonal(build_parity_chain(rabi, p, trunc));
        chains.insert(chains.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    }
    std::sort(chains.begin(), chains.end());
    REQUIRE(static_cast<Eigen::Index>(chains.size()) == full.eigenvalues().size());
    for (std::size_t k = 0; k < chains.size(); ++k)
        CHECK(std::abs(chains[k] - full.eigenvalues()(static_cast<Eigen::Index>(k))) < 1e-10);
}

TEST_CASE("Fulton-Gouterman transformation") {
    const Truncation trunc(40);
    const Eigen::MatrixXd u = fulton_gouterman(trunc);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(u.rows(), u.cols());
    CHECK((u.transpose() * u - id).cwiseAbs().maxCoeff() < 1e-15);
    const Eigen::MatrixXd r = x_basis_rotation(trunc);
    CHECK((r.transpose() * r - id).cwiseAbs().maxCoeff() < 1e-15);

    const RabiParams rabi(0.3, 1.0, 0.2);
    const BlockDiagonalization b = fulton_gouterman_transform(build_floquet_hamiltonian(rabi, trunc));
    CHECK(b.offdiag_max < 1e-12);
    const auto dense = [](const TridiagonalMatrix& c) {
        const auto m = static_cast<Eigen::Index>(c.dimension());
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index k = 0; k < m; ++k) {
            d(k, k) = c.diag[static_cast<std::size_t>(k)];
            if (k + 1 < m) d(k, k + 1) = d(k + 1, k) = c.offdiag[static_cast<std::size_t>(k)];
        }
        return d;
    };
    CHECK((b.odd_block - dense(build_parity_chain(rabi, Parity::odd, trunc))).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((b.even_block - dense(build_parity_chain(rabi, Parity::even, trunc))).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("physical state of a Floquet eigenvector") {
    SUBCASE("t = 0 sums the Fourier components") {
        const Truncation trunc(2);
        FloquetVector v{trunc, Eigen::VectorXcd::Zero(10)};
        v.coeffs(FloquetMatrix::basis_index(trunc, Spin::up, -1)) = 0.25;
        v.coeffs(FloquetMatrix::basis_index(trunc, Spin::up, 2)) = 0.5;
        v.coeffs(FloquetMatrix::basis_index(trunc, Spin::down, 0)) = complex(0.0, 0.3);
        const SpinState s = physical_state(v, 0.7, 1.0, 0.0);
        CHECK(std::abs(s.up - complex(0.75)) < 1e-15);
        CHECK(std::abs(s.down - complex(0.0, 0.3)) < 1e-15);
    }
    SUBCASE("free two-level evolution") {
        const Truncation trunc(3);
        FloquetVector v{trunc, Eigen::VectorXcd::Zero(14)};
        v.coeffs(FloquetMatrix::basis_index(trunc, Spin::up, 0)) = 1.0;
        for (double t : {0.0, 0.4, 2.5, 10.0}) {
            const SpinState s = physical_state(v, 0.15, 1.0, t);
            CHECK(std::abs(s.up - std::polar(1.0, -0.15 * t)) < 1e-14);
            CHECK(s.down == complex(0.0));
        }
    }
    SUBCASE("independent of the ladder copy, unlike the lattice evolution") {
        const RabiParams rabi(0.3, 1.0, 0.2);
        const Truncation trunc(40);
        const FloquetMatrix h = build_floquet_hamiltonian(rabi, trunc);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.dense());
        // pick the eigenvector with the most weight on |+, 0>
        Eigen::Index k0 = 0;
        es.eigenvectors().row(h.index(Spin::up, 0)).cwiseAbs().maxCoeff(&k0);
        const FloquetVector v0{trunc, es.eigenvectors().col(k0).cast<complex>()};
        const double e0 = es.eigenvalues()(k0);
        for (int m : {-5, -2, 1, 4}) {
            double leaked = 1.0;
            const FloquetVector vm = translate_even(v0, m, &leaked);
            CHECK(leaked < 1e-20);
            // numerically independent copy: the eigenvector anchored at |+, 2m>
            Eigen::Index km = 0;
            es.eigenvectors().row(h.index(Spin::up, 2 * m)).cwiseAbs().maxCoeff(&km);
            CHECK(es.eigenvalues()(km) == doctest::Approx(e0 + 2 * m * rabi.omega()).epsilon(1e-12));
            FloquetVector numeric{trunc, es.eigenvectors().col(km).cast<complex>()};
            if ((numeric.coeffs.conjugate().dot(vm.coeffs)).real() < 0) numeric.coeffs *= -1.0;
            double worst = 0.0, lattice_contrast = 0.0;
            for (double t : linspace(0.0, 20.0, 100)) {
                const SpinState a = physical_state(v0, e0, rabi.omega(), t);
                const SpinState b = physical_state(vm, e0 + 2 * m * rabi.omega(), rabi.omega(), t);
                const SpinState c = physical_state(numeric, es.eigenvalues()(km), rabi.omega(), t);
                worst = std::max({worst, std::abs(a.up - b.up), std::abs(a.down - b.down), std::abs(a.up - c.up),
                                  std::abs(a.down - c.down)});
                // the lattice eigenstates pick up different phases e^{-i e_m t}
                lattice_contrast = std::max(lattice_contrast,
                                            std::abs(std::polar(1.0, -e0 * t) - std::polar(1.0, -(e0 + 2.0 * m) * t)));
            }
            CHECK(worst < 1e-8);
            CHECK(lattice_contrast > 1.0);
        }
    }
}

TEST_CASE("quasienergy folding") {
    CHECK(fold_quasienergy(0.3, 1.0) == doctest::Approx(0.3));
    CHECK(fold_quasienergy(1.3, 1.0) == doctest::Approx(0.3));
    CHECK(fold_quasienergy(-0.5, 1.0) == doctest::Approx(0.5));
    CHECK(fold_quasienergy(0.5, 1.0) == doctest::Approx(0.5));
    CHECK(fold_quasienergy(-2.7, 1.0) == doctest::Approx(0.3));
    CHECK(quasienergy_distance(0.49, -0.49, 1.0) == doctest::Approx(0.02));
}

TEST_CASE("monodromy quasienergies") {
    SUBCASE("undriven atom") {
        const auto q = monodromy_quasienergies(RabiParams(0.3, 1.0, 0.0), 2 * std::numbers::pi / 10000);
        CHECK(q[0] == doctest::Approx(-0.15).epsilon(1e-10));
        CHECK(q[1] == doctest::Approx(0.15).epsilon(1e-10));
        const auto folded = monodromy_quasienergies(RabiParams(1.6, 1.0, 0.0), 2 * std::numbers::pi / 10000);
        CHECK(quasienergy_distance(folded[0], 0.8, 1.0) < 1e-9);
        CHECK(quasienergy_distance(folded[1], -0.8, 1.0) < 1e-9);
    }
    SUBCASE("commuting drive returns to the identity") {
        const auto q = monodromy_quasienergies(RabiParams(0.0, 1.0, 0.7), 2 * std::numbers::pi / 10000);
        CHECK(std::abs(q[0]) < 1e-9);
        CHECK(std::abs(q[1]) < 1e-9);
    }
    SUBCASE("agrees with the central parity-chain eigenvalues") {
        for (auto [Omega, lambda] : {std::pair{0.3, 0.2}, {0.9, 0.5}, {2.4, 1.0}}) {
            const RabiParams rabi(Omega, 1.0, lambda);
            const auto mono = monodromy_quasienergies(rabi, rabi.period() / default_steps_per_period);
            const auto chain = central_chain_quasienergies(rabi, Truncation(40));
            const double err = std::min(
                std::max(quasienergy_distance(mono[0], chain[0], 1.0), quasienergy_distance(mono[1], chain[1], 1.0)),
                std::max(quasienergy_distance(mono[0], chain[1], 1.0), quasienergy_distance(mono[1], chain[0], 1.0)));
            CHECK(err < 1e-6);
        }
    }
    SUBCASE("step validation") {
        CHECK_THROWS_AS(monodromy_quasienergies(RabiParams(0.3, 1.0, 0.2), 0.1), ValidationError);
        CHECK_THROWS_AS(monodromy_quasienergies(RabiParams(0.3, 1.0, 0.2), 0.0), ValidationError);
    }
}

TEST_CASE("verification report") {
    const RabiParams rabi(0.3, 1.0, 0.2);
    const VerificationReport r = verify_correspondence(rabi, Truncation(40), rabi.period() / 10000);
    CHECK(r.mapping_exact);
    CHECK(r.fg_offdiag_norm < 1e-12);
    CHECK(r.fg_block_error < 1e-12);
    CHECK(r.parity_commutator_norm == 0.0);
    CHECK(r.monodromy_vs_floquet_max_err < 1e-6);
}
