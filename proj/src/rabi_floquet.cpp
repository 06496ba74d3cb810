#include "binlat/rabi_floquet.hpp"

#include "binlat/errors.hpp"
#include "binlat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace binlat {

RabiParams::RabiParams(double Omega, double omega, double lambda) : Omega_(Omega), omega_(omega), lambda_(lambda) {
    if (!std::isfinite(Omega) || !std::isfinite(omega) || !std::isfinite(lambda))
        throw ValidationError("Rabi parameters must be finite");
    if (Omega < 0.0) throw ValidationError("Omega must be >= 0");
    if (omega <= 0.0) throw ValidationError("omega must be > 0");
    if (lambda < 0.0) throw ValidationError("lambda must be >= 0");
}

double RabiParams::period() const { return 2.0 * std::numbers::pi / omega_; }

FloquetMatrix::FloquetMatrix(const Truncation& trunc, Eigen::MatrixXd dense) : trunc_(trunc), dense_(std::move(dense)) {
    const auto dim = static_cast<Eigen::Index>(2 * trunc.dimension());
    if (dense_.rows() != dim || dense_.cols() != dim) throw ValidationError("Floquet matrix has the wrong dimension");
}

FloquetMatrix build_floquet_hamiltonian(const RabiParams& rabi, const Truncation& trunc) {
    const auto dim = static_cast<Eigen::Index>(2 * trunc.dimension());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    const auto idx = [&](Spin s, int n) { return FloquetMatrix::basis_index(trunc, s, n); };
    for (int n = trunc.first_site(); n <= trunc.last_site(); ++n) {
        for (Spin s : {Spin::up, Spin::down}) {
            h(idx(s, n), idx(s, n)) = rabi.omega() * n + spin_sign(s) * (rabi.Omega() / 2);
            const Spin flipped = s == Spin::up ? Spin::down : Spin::up;
            if (n < trunc.last_site()) {
                h(idx(s, n), idx(flipped, n + 1)) = -rabi.lambda();
                h(idx(flipped, n + 1), idx(s, n)) = -rabi.lambda();
            }
        }
    }
    return FloquetMatrix(trunc, std::move(h));
}

Parity parity_of(Spin s, int n) {
    const int even_n = (n % 2 == 0) ? 1 : -1;
    return -spin_sign(s) * even_n > 0 ? Parity::even : Parity::odd;
}

Eigen::VectorXd parity_operator(const Truncation& trunc) {
    Eigen::VectorXd diag(static_cast<Eigen::Index>(2 * trunc.dimension()));
    for (int n = trunc.first_site(); n <= trunc.last_site(); ++n)
        for (Spin s : {Spin::up, Spin::down})
            diag(FloquetMatrix::basis_index(trunc, s, n)) = parity_of(s, n) == Parity::even ? 1.0 : -1.0;
    return diag;
}

TridiagonalMatrix build_parity_chain(const RabiParams& rabi, Parity parity, const Truncation& trunc) {
    const FloquetMatrix floquet = build_floquet_hamiltonian(rabi, trunc);
    // exactly one spin per Fourier label belongs to each parity sector
    const auto spin_in_chain = [&](int n) { return parity_of(Spin::up, n) == parity ? Spin::up : Spin::down; };

    TridiagonalMatrix chain;
    chain.offset = trunc.first_site();
    for (int n = trunc.first_site(); n <= trunc.last_site(); ++n) {
        const Spin s = spin_in_chain(n);
        chain.diag.push_back(floquet(s, n, s, n));
        if (n < trunc.last_site()) chain.offdiag.push_back(floquet(s, n, spin_in_chain(n + 1), n + 1));
    }
    return chain;
}

LatticeParams lattice_from_rabi(const RabiParams& rabi, Parity parity) {
    const double eps = parity == Parity::odd ? rabi.Omega() : -rabi.Omega();
    return LatticeParams(rabi.lambda(), eps, rabi.omega());
}

Eigen::MatrixXd x_basis_rotation(const Truncation& trunc) {
    const auto m = static_cast<Eigen::Index>(trunc.dimension());
    const double r = std::numbers::sqrt2 / 2;
    Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (int n = trunc.first_site(); n <= trunc.last_site(); ++n) {
        const Eigen::Index j = n - trunc.first_site();
        const Eigen::Index up = FloquetMatrix::basis_index(trunc, Spin::up, n);
        const Eigen::Index down = FloquetMatrix::basis_index(trunc, Spin::down, n);
        // |+x> = (|+> + |->)/sqrt2, |-x> = (|-> - |+>)/sqrt2; this phase makes
        // the sigma_z coupling between the x blocks equal to -Omega/2
        rot(up, j) = r;
        rot(down, j) = r;
        rot(up, m + j) = -r;
        rot(down, m + j) = r;
    }
    return rot;
}

Eigen::MatrixXd fulton_gouterman(const Truncation& trunc) {
    const auto m = static_cast<Eigen::Index>(trunc.dimension());
    const double r = std::numbers::sqrt2 / 2;
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(2 * m, 2 * m);
    for (int n = trunc.first_site(); n <= trunc.last_site(); ++n) {
        const Eigen::Index j = n - trunc.first_site();
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        u(j, j) = r;
        u(j, m + j) = r;
        u(m + j, j) = sign * r;
        u(m + j, m + j) = -sign * r;
    }
    return u;
}

BlockDiagonalization fulton_gouterman_transform(const FloquetMatrix& floquet) {
    const Truncation& trunc = floquet.truncation();
    const auto m = static_cast<Eigen::Index>(trunc.dimension());
    const Eigen::MatrixXd ru = x_basis_rotation(trunc) * fulton_gouterman(trunc);

    BlockDiagonalization out;
    out.transformed = ru.transpose() * floquet.dense() * ru;
    out.even_block = out.transformed.topLeftCorner(m, m);
    out.odd_block = out.transformed.bottomRightCorner(m, m);
    out.offdiag_max = std::max(out.transformed.topRightCorner(m, m).cwiseAbs().maxCoeff(),
                               out.transformed.bottomLeftCorner(m, m).cwiseAbs().maxCoeff());
    return out;
}

FloquetVector translate_even(const FloquetVector& v, int m, double* leaked_norm) {
    FloquetVector out{v.trunc, Eigen::VectorXcd::Zero(v.coeffs.size())};
    double leaked = 0.0;
    for (int n = v.trunc.first_site(); n <= v.trunc.last_site(); ++n) {
        for (Spin s : {Spin::up, Spin::down}) {
            const complex c = v.at(s, n);
            if (v.trunc.contains(n + 2 * m))
                out.coeffs(FloquetMatrix::basis_index(v.trunc, s, n + 2 * m)) = c;
            else
                leaked += std::norm(c);
        }
    }
    if (leaked_norm) *leaked_norm = leaked;
    return out;
}

SpinState physical_state(const FloquetVector& v, double quasienergy, double omega, double t) {
    SpinState out{0.0, 0.0};
    for (int n = v.trunc.first_site(); n <= v.trunc.last_site(); ++n) {
        const complex phase = std::polar(1.0, n * omega * t);
        out.up += phase * v.at(Spin::up, n);
        out.down += phase * v.at(Spin::down, n);
    }
    const complex global = std::polar(1.0, -quasienergy * t);
    out.up *= global;
    out.down *= global;
    return out;
}

double fold_quasienergy(double e, double omega) {
    double r = std::fmod(e, omega);
    if (r > omega / 2) r -= omega;
    if (r <= -omega / 2) r += omega;
    return r;
}

double quasienergy_distance(double a, double b, double omega) { return std::abs(fold_quasienergy(a - b, omega)); }

namespace {

using Matrix2c = Eigen::Matrix2cd;

Matrix2c rabi_generator(const RabiParams& rabi, double t) {
    // -i H(t)
    const double coupling = -2.0 * rabi.lambda() * std::cos(rabi.omega() * t);
    Matrix2c h;
    h << rabi.Omega() / 2, coupling, coupling, -rabi.Omega() / 2;
    return complex(0.0, -1.0) * h;
}

} // namespace

std::array<double, 2> monodromy_quasienergies(const RabiParams& rabi, double step) {
    const double period = rabi.period();
    if (!(step > 0.0) || step > period / 1000)
        throw ValidationError("integration step must be in (0, T/1000], T=" + std::to_string(period));

    const auto steps = static_cast<long>(std::ceil(period / step - 1e-9));
    const double h = period / static_cast<double>(steps);
    Matrix2c u = Matrix2c::Identity();
    for (long i = 0; i < steps; ++i) {
        const double t = h * static_cast<double>(i);
        const Matrix2c a_start = rabi_generator(rabi, t);
        const Matrix2c a_mid = rabi_generator(rabi, t + h / 2);
        const Matrix2c a_end = rabi_generator(rabi, t + h);
        const Matrix2c k1 = a_start * u;
        const Matrix2c k2 = a_mid * (u + h / 2 * k1);
        const Matrix2c k3 = a_mid * (u + h / 2 * k2);
        const Matrix2c k4 = a_end * (u + h * k3);
        u += h / 6 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    const double drift = (u.adjoint() * u - Matrix2c::Identity()).cwiseAbs().maxCoeff();
    if (drift > unitarity_drift_limit)
        throw NumericalError("one-period propagator not unitary (drift " + std::to_string(drift) +
                             "); use a smaller step");

    Eigen::ComplexEigenSolver<Matrix2c> solver(u, false);
    std::array<double, 2> q{};
    for (int k = 0; k < 2; ++k) q[static_cast<std::size_t>(k)] = fold_quasienergy(-std::arg(solver.eigenvalues()(k)) / period, rabi.omega());
    std::sort(q.begin(), q.end());
    return q;
}

std::array<double, 2> central_chain_quasienergies(const RabiParams& rabi, const Truncation& trunc) {
    std::array<double, 2> out{};
    const Parity parities[] = {Parity::odd, Parity::even};
    for (std::size_t i = 0; i < 2; ++i) {
        const Spectrum spec = eigh_tridiagonal(build_parity_chain(rabi, parities[i], trunc));
        out[i] = select_anchored_eigenstate(spec, 0).energy;
    }
    return out;
}

VerificationReport verify_correspondence(const RabiParams& rabi, const Truncation& trunc, double step) {
    VerificationReport report;
    report.mapping_exact = build_parity_chain(rabi, Parity::odd, trunc) ==
                           build_lattice_hamiltonian(lattice_from_rabi(rabi, Parity::odd), trunc);

    const FloquetMatrix floquet = build_floquet_hamiltonian(rabi, trunc);
    const BlockDiagonalization blocks = fulton_gouterman_transform(floquet);
    report.fg_offdiag_norm = blocks.offdiag_max;

    const auto dense_chain = [&](Parity p) {
        const TridiagonalMatrix c = build_parity_chain(rabi, p, trunc);
        const auto m = static_cast<Eigen::Index>(c.dimension());
        Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index k = 0; k < m; ++k) {
            d(k, k) = c.diag[static_cast<std::size_t>(k)];
            if (k + 1 < m) d(k, k + 1) = d(k + 1, k) = c.offdiag[static_cast<std::size_t>(k)];
        }
        return d;
    };
    report.fg_block_error = std::max((blocks.even_block - dense_chain(Parity::even)).cwiseAbs().maxCoeff(),
                                     (blocks.odd_block - dense_chain(Parity::odd)).cwiseAbs().maxCoeff());

    const Eigen::VectorXd pi = parity_operator(trunc);
    const Eigen::MatrixXd commutator = pi.asDiagonal() * floquet.dense() - floquet.dense() * pi.asDiagonal();
    report.parity_commutator_norm = commutator.cwiseAbs().maxCoeff();

    const std::array<double, 2> mono = monodromy_quasienergies(rabi, step);
    const std::array<double, 2> chain = central_chain_quasienergies(rabi, trunc);
    const double w = rabi.omega();
    const double straight = std::max(quasienergy_distance(mono[0], chain[0], w), quasienergy_distance(mono[1], chain[1], w));
    const double crossed = std::max(quasienergy_distance(mono[0], chain[1], w), quasienergy_distance(mono[1], chain[0], w));
    report.monodromy_vs_floquet_max_err = std::min(straight, crossed);
    return report;
}

} // namespace binlat
