#include "binlat/resonance.hpp"

#include "binlat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace binlat {

TwoLevelResult two_level_effective(double epsilon, double F, double V) {
    if (V < 0.0) throw ValidationError("V must be >= 0");
    if (F <= 0.0) throw ValidationError("F must be > 0");
    TwoLevelResult r;
    r.gap = std::hypot(epsilon - F, 2.0 * V);
    r.e_plus = (F + r.gap) / 2;
    r.e_minus = (F - r.gap) / 2;
    if (r.gap == 0.0) {
        r.degenerate = true;
        r.mixing_angle = 0.0;
    } else {
        r.mixing_angle = std::asin(std::min(1.0, 2.0 * V / r.gap));
    }
    return r;
}

double rabi_transfer_probability(double epsilon, double F, double V, double t) {
    if (t < 0.0) throw ValidationError("time must be >= 0");
    const TwoLevelResult r = two_level_effective(epsilon, F, V);
    if (r.degenerate) return 0.0;
    const double s = std::sin(r.gap * t / 2);
    return 4.0 * V * V / (r.gap * r.gap) * s * s;
}

double shirley_shift(int order, double V, double F) {
    if (order < 0) throw ValidationError("resonance order must be >= 0");
    if (F <= 0.0) throw ValidationError("F must be > 0");
    const double base = V * V / F;
    if (order == 0) return base;
    return (2.0 * order + 1.0) / (order * (order + 1.0)) * base;
}

namespace {

int partner_site(int order) { return 2 * order + 1; }

} // namespace

GapSample gap_at(double epsilon, int order, double V, double F, const Truncation& trunc) {
    if (order < 0) throw ValidationError("resonance order must be >= 0");
    const int partner = partner_site(order);
    const Spectrum spec = eigh_tridiagonal(build_lattice_hamiltonian(LatticeParams(V, epsilon, F), trunc));
    const AnchoredState a = select_anchored_eigenstate(spec, 0);
    const AnchoredState b = select_anchored_eigenstate(spec, partner);

    GapSample out;
    out.weakly_anchored = a.weakly_anchored || b.weakly_anchored;
    if (a.index != b.index) {
        out.gap = std::abs(b.energy - a.energy);
        return out;
    }

    // Both anchors picked the same hybridized state: use the two eigenpairs
    // carrying the most combined weight on {0, 2n+1}.
    std::size_t first = spec.size(), second = spec.size();
    double w1 = -1.0, w2 = -1.0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (is_edge_state(spec, k)) continue;
        const double w = std::pow(spec.amplitude(0, k), 2) + std::pow(spec.amplitude(partner, k), 2);
        if (w > w1) {
            second = first;
            w2 = w1;
            first = k;
            w1 = w;
        } else if (w > w2) {
            second = k;
            w2 = w;
        }
    }
    if (second == spec.size()) throw NumericalError("fewer than two interior eigenstates for gap evaluation");
    out.gap = std::abs(spec.eigenvalues[first] - spec.eigenvalues[second]);
    return out;
}

AnticrossingResult find_anticrossing(int order, double V, double F, std::optional<Truncation> trunc_override) {
    if (order < 0) throw ValidationError("resonance order must be >= 0");
    if (!(V > 0.0)) throw ValidationError("anticrossing search needs V > 0");
    if (!(F > 0.0)) throw ValidationError("F must be > 0");

    AnticrossingResult res;
    res.order = order;
    res.V = V;
    res.F = F;
    const double resonance = (2.0 * order + 1.0) * F;
    const double delta = shirley_shift(order, V, F);
    res.shirley_prediction = resonance - delta;
    res.bracket_lo = resonance - std::max(4.0 * delta, F / 2);
    res.bracket_hi = resonance + F / 2;

    if (trunc_override) {
        res.truncation_used = *trunc_override;
    } else {
        int half = 0;
        for (double eps : {res.bracket_lo, resonance, res.bracket_hi})
            half = std::max(half, converge_truncation(LatticeParams(V, eps, F), convergence_tolerance * F).half_width());
        res.truncation_used = Truncation(half);
    }
    if (2 * partner_site(order) > res.truncation_used.half_width())
        throw ValidationError("truncation too narrow to anchor site " + std::to_string(partner_site(order)));

    auto objective = [&](double eps) {
        ++res.evaluations;
        const GapSample s = gap_at(eps, order, V, F, res.truncation_used);
        res.weakly_anchored = res.weakly_anchored || s.weakly_anchored;
        return s.gap;
    };

    const std::vector<double> grid = linspace(res.bracket_lo, res.bracket_hi, coarse_scan_points);
    std::vector<double> coarse(grid.size());
    std::transform(grid.begin(), grid.end(), coarse.begin(), objective);
    const auto imin = static_cast<std::size_t>(std::min_element(coarse.begin(), coarse.end()) - coarse.begin());
    if (imin == 0 || imin + 1 == grid.size())
        throw NumericalError("no interior gap minimum in bracket [" + std::to_string(res.bracket_lo) + ", " +
                             std::to_string(res.bracket_hi) + "]");

    // golden-section refinement on the neighbouring coarse cells
    constexpr double inv_phi = std::numbers::phi - 1.0;
    double a = grid[imin - 1], b = grid[imin + 1];
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = objective(c), fd = objective(d);
    while (b - a > golden_tolerance * F) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    const double x = (a + b) / 2;
    const double fx = objective(x);
    res.epsilon_star = x;
    res.gap_min = fx;
    if (fc < res.gap_min) {
        res.epsilon_star = c;
        res.gap_min = fc;
    }
    if (fd < res.gap_min) {
        res.epsilon_star = d;
        res.gap_min = fd;
    }
    if (!(res.gap_min > 0.0)) throw NumericalError("anticrossing gap collapsed to zero");
    return res;
}

IPRGrid ipr_map(std::span<const double> V_grid, std::span<const double> epsilon_grid, double F,
                std::optional<Truncation> trunc_override) {
    require_ascending(V_grid, "V");
    require_ascending(epsilon_grid, "epsilon");
    if (!(V_grid.front() > 0.0)) throw ValidationError("V grid must be positive");
    if (!(F > 0.0)) throw ValidationError("F must be > 0");

    IPRGrid grid;
    grid.V_values.assign(V_grid.begin(), V_grid.end());
    grid.epsilon_values.assign(epsilon_grid.begin(), epsilon_grid.end());
    grid.values.reserve(V_grid.size() * epsilon_grid.size());
    for (double V : V_grid) {
        for (double eps : epsilon_grid) {
            const LatticeParams params(V, eps, F);
            const Truncation trunc = trunc_override ? *trunc_override : converge_truncation(params, convergence_tolerance * F);
            const Spectrum spec = eigh_tridiagonal(build_lattice_hamiltonian(params, trunc));
            grid.values.push_back(ipr(select_anchored_eigenstate(spec, 0).state));
        }
    }
    return grid;
}

} // namespace binlat
