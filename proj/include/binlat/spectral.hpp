#pragma once

#include "binlat/lattice.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace binlat {

// Full eigendecomposition of a truncated tridiagonal Hamiltonian.
// Eigenvalues ascend; column k of `eigenvectors` is the real unit-norm
// eigenvector of eigenvalue k, phased so its largest-magnitude entry is positive.
struct Spectrum {
    int offset = 0;
    std::vector<double> eigenvalues;
    Eigen::MatrixXd eigenvectors;
    std::vector<double> onsite; // diagonal of the source matrix

    std::size_t size() const { return eigenvalues.size(); }
    int first_site() const { return offset; }
    int last_site() const { return offset + static_cast<int>(eigenvalues.size()) - 1; }
    double amplitude(int site, std::size_t k) const {
        return eigenvectors(site - offset, static_cast<Eigen::Index>(k));
    }
    StateVector eigenstate(std::size_t k) const;
    // Probability-weighted mean site of eigenvector k.
    double center(std::size_t k) const;
};

Spectrum eigh_tridiagonal(const TridiagonalMatrix& matrix);

// Eigenvectors with more than 1e-6 of their norm on the four outermost sites
// at either end are truncation artifacts.
inline constexpr int edge_sites = 4;
inline constexpr double edge_weight_limit = 1e-6;
bool is_edge_state(const Spectrum& spec, std::size_t k);

struct AnchoredState {
    double energy = 0.0;
    StateVector state;
    std::size_t index = 0;
    double weight = 0.0;          // |<site|phi>|^2
    bool weakly_anchored = false; // weight < 0.1
};

inline constexpr double anchor_weight_warning = 0.1;

// Eigenpair with the largest weight on `site`; edge states are never chosen.
AnchoredState select_anchored_eigenstate(const Spectrum& spec, int site);

double ipr(const StateVector& state);
double ipr(const Spectrum& spec, std::size_t k);

struct EnergyWindow {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double e) const { return e >= lo && e <= hi; }
};

struct SweepTable {
    std::vector<double> epsilon_values;
    std::vector<std::vector<double>> levels; // levels[i]: eigenvalues in the window at epsilon_values[i]
};

SweepTable spectrum_sweep(double V, double F, std::span<const double> epsilon_grid, EnergyWindow window,
                          const Truncation& trunc);

// Half-widths tried by converge_truncation, in order.
inline constexpr int doubling_sequence[] = {20, 40, 80, 160};

Truncation converge_truncation(const LatticeParams& params, double tol);

// Largest change of the central eigenvalues (centre |n| <= N/2) when N doubles.
double doubling_change(const LatticeParams& params, const Truncation& trunc);

// Uniform grid of `steps` points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int steps);

// Throws ValidationError unless the grid is non-empty and strictly ascending.
void require_ascending(std::span<const double> grid, const char* name);

} // namespace binlat
