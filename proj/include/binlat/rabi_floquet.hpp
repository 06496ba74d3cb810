#pragma once

#include "binlat/lattice.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstddef>

namespace binlat {

// Semiclassical Rabi model H(t) = Omega/2 sigma_z - 2 lambda sigma_x cos(omega t).
class RabiParams {
public:
    RabiParams(double Omega, double omega, double lambda);

    double Omega() const { return Omega_; }
    double omega() const { return omega_; }
    double lambda() const { return lambda_; }
    double period() const;

private:
    double Omega_;
    double omega_;
    double lambda_;
};

enum class Parity { even, odd }; // Pi = +1, Pi = -1

enum class Spin { up, down }; // sigma_z = +1, -1

inline int spin_sign(Spin s) { return s == Spin::up ? 1 : -1; }

// Floquet Hamiltonian on |s, n>, n in [-N, N], n-major / spin-minor ordering:
// row 2(n+N) is |+, n>, row 2(n+N)+1 is |-, n>.
class FloquetMatrix {
public:
    FloquetMatrix(const Truncation& trunc, Eigen::MatrixXd dense);

    const Truncation& truncation() const { return trunc_; }
    const Eigen::MatrixXd& dense() const { return dense_; }
    Eigen::Index dimension() const { return dense_.rows(); }
    Eigen::Index index(Spin s, int n) const { return basis_index(trunc_, s, n); }
    double operator()(Spin s, int n, Spin s2, int n2) const { return dense_(index(s, n), index(s2, n2)); }

    static Eigen::Index basis_index(const Truncation& trunc, Spin s, int n) {
        return 2 * (n + trunc.half_width()) + (s == Spin::up ? 0 : 1);
    }

private:
    Truncation trunc_;
    Eigen::MatrixXd dense_;
};

FloquetMatrix build_floquet_hamiltonian(const RabiParams& rabi, const Truncation& trunc);

// Diagonal of Pi = -sigma_z (-1)^{E0} in the FloquetMatrix ordering.
Eigen::VectorXd parity_operator(const Truncation& trunc);

Parity parity_of(Spin s, int n);

// One parity chain read off the Floquet matrix, indexed by the Fourier label n.
TridiagonalMatrix build_parity_chain(const RabiParams& rabi, Parity parity, const Truncation& trunc);

// omega -> F, lambda -> V, Omega -> +/- epsilon (odd / even).
LatticeParams lattice_from_rabi(const RabiParams& rabi, Parity parity);

// Rotation from |s, n> (n-major) to |+-x> (x) |n> (x-major: all |+x, n> first).
Eigen::MatrixXd x_basis_rotation(const Truncation& trunc);

// U = (1/sqrt 2) [[1, 1], [(-1)^{E0}, -(-1)^{E0}]] over |+-x> (x) |n>.
Eigen::MatrixXd fulton_gouterman(const Truncation& trunc);

struct BlockDiagonalization {
    Eigen::MatrixXd transformed; // U^T R^T H_F R U
    Eigen::MatrixXd even_block;  // upper-left
    Eigen::MatrixXd odd_block;   // lower-right
    double offdiag_max = 0.0;    // largest |entry| of the off-diagonal blocks
};

BlockDiagonalization fulton_gouterman_transform(const FloquetMatrix& floquet);

// Eigenvector of a FloquetMatrix (or any vector on its basis).
struct FloquetVector {
    Truncation trunc;
    Eigen::VectorXcd coeffs;

    complex at(Spin s, int n) const {
        return trunc.contains(n) ? coeffs(FloquetMatrix::basis_index(trunc, s, n)) : complex{0.0};
    }
};

// E+^{2m}: the coefficient on |s, n> moves to |s, n+2m>. Reports leaked norm.
FloquetVector translate_even(const FloquetVector& v, int m, double* leaked_norm = nullptr);

struct SpinState {
    complex up;
    complex down;
    double norm_squared() const { return std::norm(up) + std::norm(down); }
};

// Physical two-level state e^{-i e t} sum_n e^{i n omega t} (c_{+,n}, c_{-,n}).
SpinState physical_state(const FloquetVector& v, double quasienergy, double omega, double t);

// Quasienergy folded into (-omega/2, omega/2].
double fold_quasienergy(double e, double omega);

// Circular distance between two quasienergies modulo omega.
double quasienergy_distance(double a, double b, double omega);

inline constexpr int default_steps_per_period = 10000;
inline constexpr double unitarity_drift_limit = 1e-8;

// RK4 propagation of the 2x2 Schroedinger equation over one drive period,
// quasienergies from the eigenphases of the one-period propagator, ascending.
std::array<double, 2> monodromy_quasienergies(const RabiParams& rabi, double step);

struct VerificationReport {
    bool mapping_exact = false;
    double fg_offdiag_norm = 0.0;
    double fg_block_error = 0.0;
    double parity_commutator_norm = 0.0;
    double monodromy_vs_floquet_max_err = 0.0;
};

// Checks the lattice <-> Rabi correspondence at one parameter point.
VerificationReport verify_correspondence(const RabiParams& rabi, const Truncation& trunc, double step);

// Eigenvalues of the central (n = 0 anchored) states of both parity chains.
std::array<double, 2> central_chain_quasienergies(const RabiParams& rabi, const Truncation& trunc);

} // namespace binlat
