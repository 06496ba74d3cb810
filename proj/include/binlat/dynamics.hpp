#pragma once

#include "binlat/lattice.hpp"
#include "binlat/spectral.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace binlat {

// Site occupations P_n(t) = |<n|psi(t)>|^2 on the sites [first_site, last_site].
struct Trajectory {
    std::vector<double> times;
    int first_site = 0;
    int last_site = -1;
    std::vector<double> probabilities; // row-major: times x sites

    std::size_t site_count() const { return static_cast<std::size_t>(last_site - first_site + 1); }
    // Zero outside the stored site range.
    double probability(std::size_t time_index, int site) const;
    double total(std::size_t time_index) const;
};

// |psi(t)> = sum_k e^{-i e_k t} <phi_k|psi(0)> |phi_k>. `initial` must live on the spectrum's window.
StateVector propagate(const Spectrum& spec, const StateVector& initial, double t);

inline constexpr double stored_probability_floor = 1e-12;
inline constexpr double norm_drift_limit = 1e-8;

// Evolves |psi(0)> = |initial_site> by the spectral decomposition of the
// lattice Hamiltonian. Sites whose occupation never reaches 1e-12 are trimmed.
Trajectory evolve(const LatticeParams& params, int initial_site, std::span<const double> times,
                  const Truncation& trunc);

// `samples` points on [0, 1.1 * 2pi/gap].
std::vector<double> default_time_grid(double gap, int samples = 400);

struct JumpMetrics {
    int target_site = 0;
    double max_transfer = 0.0;
    double period_estimate = 0.0;      // twice the (interpolated) time of the first transfer peak
    double intermediate_ceiling = 0.0; // max_t max_{k strictly between 0 and target} P_k
};

JumpMetrics jump_metrics(const Trajectory& traj, int target_site);

} // namespace binlat
