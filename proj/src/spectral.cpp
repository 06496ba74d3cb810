#include "binlat/spectral.hpp"

#include "binlat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <string>

namespace binlat {

StateVector Spectrum::eigenstate(std::size_t k) const {
    std::vector<complex> amps(size());
    for (std::size_t i = 0; i < size(); ++i)
        amps[i] = eigenvectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    return StateVector(offset, std::move(amps));
}

double Spectrum::center(std::size_t k) const {
    double c = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        const double a = eigenvectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        c += (offset + static_cast<int>(i)) * a * a;
    }
    return c;
}

Spectrum eigh_tridiagonal(const TridiagonalMatrix& matrix) {
    const auto n = static_cast<Eigen::Index>(matrix.dimension());
    if (n == 0 || matrix.offdiag.size() + 1 != matrix.diag.size())
        throw ValidationError("malformed tridiagonal matrix");

    Spectrum spec;
    spec.offset = matrix.offset;
    spec.onsite = matrix.diag;

    if (n == 1) {
        spec.eigenvalues = matrix.diag;
        spec.eigenvectors = Eigen::MatrixXd::Identity(1, 1);
        return spec;
    }

    const Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(matrix.diag.data(), n);
    const Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(matrix.offdiag.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw NumericalError("tridiagonal eigensolver did not converge for a " + std::to_string(n) + "x" +
                             std::to_string(n) + " matrix");

    spec.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    spec.eigenvectors = solver.eigenvectors();
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index imax = 0;
        spec.eigenvectors.col(k).cwiseAbs().maxCoeff(&imax);
        if (spec.eigenvectors(imax, k) < 0.0) spec.eigenvectors.col(k) *= -1.0;
    }
    return spec;
}

bool is_edge_state(const Spectrum& spec, std::size_t k) {
    const auto n = static_cast<Eigen::Index>(spec.size());
    const auto col = static_cast<Eigen::Index>(k);
    const Eigen::Index band = std::min<Eigen::Index>(edge_sites, n);
    const double weight = spec.eigenvectors.col(col).head(band).squaredNorm() +
                          spec.eigenvectors.col(col).tail(band).squaredNorm();
    return weight > edge_weight_limit;
}

AnchoredState select_anchored_eigenstate(const Spectrum& spec, int site) {
    const int half = -spec.first_site();
    if (spec.last_site() != half || 2 * std::abs(site) > half)
        throw ValidationError("anchor site " + std::to_string(site) + " not in the window interior |n| <= N/2");

    const double target = spec.onsite.at(static_cast<std::size_t>(site - spec.offset));
    bool found = false;
    AnchoredState best;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (is_edge_state(spec, k)) continue;
        const double a = spec.amplitude(site, k);
        const double w = a * a;
        bool better = !found || w > best.weight + 1e-12;
        // exact ties: prefer the eigenvalue nearest the bare site energy
        if (found && std::abs(w - best.weight) <= 1e-12)
            better = std::abs(spec.eigenvalues[k] - target) < std::abs(best.energy - target);
        if (better) {
            found = true;
            best.index = k;
            best.weight = w;
            best.energy = spec.eigenvalues[k];
        }
    }
    if (!found) throw NumericalError("every eigenvector is an edge state; enlarge the truncation");
    best.state = spec.eigenstate(best.index);
    best.weakly_anchored = best.weight < anchor_weight_warning;
    return best;
}

double ipr(const StateVector& state) {
    double s2 = 0.0, s4 = 0.0;
    for (const auto& c : state.amplitudes()) {
        const double p = std::norm(c);
        s2 += p;
        s4 += p * p;
    }
    if (s2 == 0.0) throw ValidationError("IPR of the zero vector is undefined");
    return s4 / (s2 * s2);
}

double ipr(const Spectrum& spec, std::size_t k) { return ipr(spec.eigenstate(k)); }

void require_ascending(std::span<const double> grid, const char* name) {
    if (grid.empty()) throw ValidationError(std::string(name) + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw ValidationError(std::string(name) + " grid has a non-finite value");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw ValidationError(std::string(name) + " grid must be strictly ascending");
    }
}

std::vector<double> linspace(double lo, double hi, int steps) {
    if (steps < 1) throw ValidationError("grid needs at least one point");
    if (steps == 1) return {lo};
    if (!(hi > lo)) throw ValidationError("grid upper bound must exceed lower bound");
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    grid.back() = hi;
    return grid;
}

SweepTable spectrum_sweep(double V, double F, std::span<const double> epsilon_grid, EnergyWindow window,
                          const Truncation& trunc) {
    require_ascending(epsilon_grid, "epsilon");
    if (!(window.hi > window.lo)) throw ValidationError("energy window must have hi > lo");

    SweepTable table;
    table.epsilon_values.assign(epsilon_grid.begin(), epsilon_grid.end());
    table.levels.reserve(epsilon_grid.size());
    for (double eps : epsilon_grid) {
        const Spectrum spec = eigh_tridiagonal(build_lattice_hamiltonian(LatticeParams(V, eps, F), trunc));
        std::vector<double> row;
        for (std::size_t k = 0; k < spec.size(); ++k)
            if (window.contains(spec.eigenvalues[k]) && !is_edge_state(spec, k)) row.push_back(spec.eigenvalues[k]);
        table.levels.push_back(std::move(row));
    }
    return table;
}

double doubling_change(const LatticeParams& params, const Truncation& trunc) {
    const Spectrum small = eigh_tridiagonal(build_lattice_hamiltonian(params, trunc));
    const Spectrum large = eigh_tridiagonal(build_lattice_hamiltonian(params, Truncation(2 * trunc.half_width())));
    const double half = trunc.half_width() / 2.0;

    double worst = 0.0;
    for (std::size_t k = 0; k < small.size(); ++k) {
        if (std::abs(small.center(k)) > half) continue;
        const double e = small.eigenvalues[k];
        const auto it = std::lower_bound(large.eigenvalues.begin(), large.eigenvalues.end(), e);
        double nearest = std::numeric_limits<double>::infinity();
        if (it != large.eigenvalues.end()) nearest = std::abs(*it - e);
        if (it != large.eigenvalues.begin()) nearest = std::min(nearest, std::abs(*std::prev(it) - e));
        worst = std::max(worst, nearest);
    }
    return worst;
}

Truncation converge_truncation(const LatticeParams& params, double tol) {
    if (!(tol > 0.0)) throw ValidationError("convergence tolerance must be > 0");
    double last = 0.0;
    for (int half : doubling_sequence) {
        const Truncation trunc(half);
        last = doubling_change(params, trunc);
        if (last < tol) return trunc;
    }
    throw NumericalError("truncation did not converge by N=160 (last doubling change " + std::to_string(last) +
                         ", tolerance " + std::to_string(tol) + ")");
}

} // namespace binlat
