#pragma once

#include "binlat/lattice.hpp"
#include "binlat/spectral.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace binlat {

// Eigenpairs of the 2x2 model coupling |0> and |1> near epsilon = F:
//   [[epsilon/2, -V], [-V, -epsilon/2 + F]].
struct TwoLevelResult {
    double e_plus = 0.0;
    double e_minus = 0.0;
    double gap = 0.0;          // Delta = sqrt((epsilon - F)^2 + 4 V^2)
    double mixing_angle = 0.0; // theta = asin(2V / Delta), in [0, pi/2]
    bool degenerate = false;   // Delta == 0; theta is then reported as 0
};

TwoLevelResult two_level_effective(double epsilon, double F, double V);

// Two-level probability of finding the particle on |1> at time t after starting on |0>.
double rabi_transfer_probability(double epsilon, double F, double V, double t);

// Perturbative shift delta of the order-n resonance, epsilon* ~ (2n+1)F - delta.
double shirley_shift(int order, double V, double F);

struct GapSample {
    double gap = 0.0;
    bool weakly_anchored = false;
};

// Splitting between the eigenstates anchored on sites 0 and 2n+1.
GapSample gap_at(double epsilon, int order, double V, double F, const Truncation& trunc);

struct AnticrossingResult {
    int order = 0;
    double V = 0.0;
    double F = 0.0;
    double epsilon_star = 0.0;
    double gap_min = 0.0;
    double shirley_prediction = 0.0; // (2n+1)F - delta
    int evaluations = 0;
    Truncation truncation_used;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool weakly_anchored = false;
};

inline constexpr int coarse_scan_points = 101;
inline constexpr double golden_tolerance = 1e-8;   // in units of F
inline constexpr double convergence_tolerance = 1e-10; // in units of F

// Locates the order-n anticrossing: coarse scan of gap_at over
// [(2n+1)F - max(4 delta, F/2), (2n+1)F + F/2], then golden-section refinement.
AnticrossingResult find_anticrossing(int order, double V, double F,
                                     std::optional<Truncation> trunc_override = std::nullopt);

struct IPRGrid {
    std::vector<double> V_values;
    std::vector<double> epsilon_values;
    std::vector<double> values; // row-major, one row per V

    double at(std::size_t iv, std::size_t ie) const { return values[iv * epsilon_values.size() + ie]; }
};

// IPR of the site-0 anchored eigenstate on a (V, epsilon) grid, each point at
// its converged truncation unless one is forced.
IPRGrid ipr_map(std::span<const double> V_grid, std::span<const double> epsilon_grid, double F,
                std::optional<Truncation> trunc_override = std::nullopt);

} // namespace binlat
