#include "binlat/dynamics.hpp"

#include "binlat/errors.hpp"
#include "binlat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace binlat {

double Trajectory::probability(std::size_t time_index, int site) const {
    if (site < first_site || site > last_site) return 0.0;
    return probabilities[time_index * site_count() + static_cast<std::size_t>(site - first_site)];
}

double Trajectory::total(std::size_t time_index) const {
    double sum = 0.0;
    for (int n = first_site; n <= last_site; ++n) sum += probability(time_index, n);
    return sum;
}

StateVector propagate(const Spectrum& spec, const StateVector& initial, double t) {
    if (initial.offset() != spec.offset || initial.size() != spec.size())
        throw ValidationError("state and spectrum live on different windows");
    const auto dim = static_cast<Eigen::Index>(spec.size());
    const Eigen::VectorXcd psi0 = Eigen::Map<const Eigen::VectorXcd>(initial.amplitudes().data(), dim);
    Eigen::VectorXcd coeffs = spec.eigenvectors.transpose().cast<complex>() * psi0;
    for (Eigen::Index k = 0; k < dim; ++k) coeffs(k) *= std::polar(1.0, -spec.eigenvalues[static_cast<std::size_t>(k)] * t);
    const Eigen::VectorXcd psi = spec.eigenvectors.cast<complex>() * coeffs;
    return StateVector(spec.offset, std::vector<complex>(psi.data(), psi.data() + dim));
}

Trajectory evolve(const LatticeParams& params, int initial_site, std::span<const double> times,
                  const Truncation& trunc) {
    if (2 * std::abs(initial_site) > trunc.half_width())
        throw ValidationError("initial site " + std::to_string(initial_site) + " not in the window interior");
    require_ascending(times, "time");
    if (times.front() < 0.0) throw ValidationError("times must be >= 0");

    const Spectrum spec = eigh_tridiagonal(build_lattice_hamiltonian(params, trunc));
    const StateVector start = StateVector::wannier(initial_site, trunc);
    const auto dim = static_cast<Eigen::Index>(spec.size());

    Eigen::MatrixXd full(static_cast<Eigen::Index>(times.size()), dim);
    for (std::size_t it = 0; it < times.size(); ++it) {
        const StateVector psi = propagate(spec, start, times[it]);
        for (Eigen::Index k = 0; k < dim; ++k) full(static_cast<Eigen::Index>(it), k) = std::norm(psi.amplitudes()[static_cast<std::size_t>(k)]);
        const double drift = std::abs(full.row(static_cast<Eigen::Index>(it)).sum() - 1.0);
        if (drift > norm_drift_limit)
            throw NumericalError("norm drift " + std::to_string(drift) + " at t=" + std::to_string(times[it]));
    }

    const Eigen::VectorXd peak = full.colwise().maxCoeff().transpose();
    Eigen::Index lo = 0, hi = dim - 1;
    while (lo < hi && peak(lo) < stored_probability_floor) ++lo;
    while (hi > lo && peak(hi) < stored_probability_floor) --hi;

    Trajectory traj;
    traj.times.assign(times.begin(), times.end());
    traj.first_site = spec.offset + static_cast<int>(lo);
    traj.last_site = spec.offset + static_cast<int>(hi);
    traj.probabilities.reserve(times.size() * traj.site_count());
    for (Eigen::Index it = 0; it < full.rows(); ++it)
        for (Eigen::Index k = lo; k <= hi; ++k) traj.probabilities.push_back(full(it, k));
    return traj;
}

std::vector<double> default_time_grid(double gap, int samples) {
    if (!(gap > 0.0)) throw ValidationError("default time grid needs a positive gap");
    if (samples < 2) throw ValidationError("time grid needs at least two samples");
    return linspace(0.0, 1.1 * 2.0 * std::numbers::pi / gap, samples);
}

JumpMetrics jump_metrics(const Trajectory& traj, int target_site) {
    const std::size_t nt = traj.times.size();
    JumpMetrics m;
    m.target_site = target_site;

    std::vector<double> p(nt);
    for (std::size_t i = 0; i < nt; ++i) p[i] = traj.probability(i, target_site);
    m.max_transfer = nt ? *std::max_element(p.begin(), p.end()) : 0.0;

    // first lobe: opens above half the global peak, closes below a quarter
    const double open = m.max_transfer / 2, close = m.max_transfer / 4;
    std::size_t i = 0;
    while (i < nt && p[i] < open) ++i;
    std::size_t best = i;
    bool closed = false;
    for (; i < nt; ++i) {
        if (p[i] < close) {
            closed = true;
            break;
        }
        if (p[i] > p[best]) best = i;
    }
    if (!(m.max_transfer > 0.0) || best == 0 || (!closed && best + 1 >= nt))
        throw NumericalError("no interior maximum of P_" + std::to_string(target_site) +
                             "; extend the time span");
    // parabola through the peak sample and its neighbours
    double peak_time = traj.times[best];
    if (best + 1 < nt) {
        const double t0 = traj.times[best - 1], t1 = traj.times[best], t2 = traj.times[best + 1];
        const double y0 = p[best - 1], y1 = p[best], y2 = p[best + 1];
        const double denom = (t0 - t1) * (t0 - t2) * (t1 - t2);
        const double a = (t2 * (y1 - y0) + t1 * (y0 - y2) + t0 * (y2 - y1)) / denom;
        const double b = (t2 * t2 * (y0 - y1) + t1 * t1 * (y2 - y0) + t0 * t0 * (y1 - y2)) / denom;
        if (a < 0.0) peak_time = std::clamp(-b / (2 * a), t0, t2);
    }
    m.period_estimate = 2.0 * peak_time;

    const int lo = std::min(0, target_site) + 1, hi = std::max(0, target_site) - 1;
    for (std::size_t t = 0; t < nt; ++t)
        for (int k = lo; k <= hi; ++k) m.intermediate_ceiling = std::max(m.intermediate_ceiling, traj.probability(t, k));
    return m;
}

} // namespace binlat
