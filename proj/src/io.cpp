#include "binlat/io.hpp"

#include <cstdio>
#include <cstdlib>

namespace binlat::io {

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

double round_real(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

void write_sweep_csv(std::ostream& out, const SweepTable& table, double scale) {
    out << "epsilon,level_index,energy\n";
    for (std::size_t i = 0; i < table.epsilon_values.size(); ++i)
        for (std::size_t k = 0; k < table.levels[i].size(); ++k)
            out << format_real(table.epsilon_values[i] * scale) << ',' << k << ','
                << format_real(table.levels[i][k] * scale) << '\n';
}

void write_ipr_csv(std::ostream& out, const IPRGrid& grid, double scale) {
    out << "V,epsilon,ipr\n";
    for (std::size_t iv = 0; iv < grid.V_values.size(); ++iv)
        for (std::size_t ie = 0; ie < grid.epsilon_values.size(); ++ie)
            out << format_real(grid.V_values[iv] * scale) << ',' << format_real(grid.epsilon_values[ie] * scale) << ','
                << format_real(grid.at(iv, ie)) << '\n';
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj, double time_scale) {
    out << "t,site,prob\n";
    for (std::size_t it = 0; it < traj.times.size(); ++it)
        for (int n = traj.first_site; n <= traj.last_site; ++n)
            out << format_real(traj.times[it] * time_scale) << ',' << n << ','
                << format_real(traj.probability(it, n)) << '\n';
}

nlohmann::json to_json(const AnticrossingResult& r, double scale) {
    return {
        {"order", r.order},
        {"V", round_real(r.V * scale)},
        {"F", round_real(r.F * scale)},
        {"epsilon_star", round_real(r.epsilon_star * scale)},
        {"gap_min", round_real(r.gap_min * scale)},
        {"shirley_prediction", round_real(r.shirley_prediction * scale)},
        {"evaluations", r.evaluations},
        {"half_width", r.truncation_used.half_width()},
    };
}

nlohmann::json to_json(const VerificationReport& r) {
    return {
        {"mapping_exact", r.mapping_exact},
        {"fg_offdiag_norm", round_real(r.fg_offdiag_norm)},
        {"parity_commutator_norm", round_real(r.parity_commutator_norm)},
        {"monodromy_vs_floquet_max_err", round_real(r.monodromy_vs_floquet_max_err)},
    };
}

nlohmann::json shirley_json(int order, double V, double F, double scale) {
    const double delta = shirley_shift(order, V, F);
    return {
        {"order", order},
        {"V", round_real(V * scale)},
        {"F", round_real(F * scale)},
        {"shirley_shift", round_real(delta * scale)},
        {"predicted_epsilon", round_real(((2.0 * order + 1.0) * F - delta) * scale)},
    };
}

nlohmann::json monodromy_json(const RabiParams& rabi, double step, const std::array<double, 2>& quasienergies) {
    return {
        {"Omega", round_real(rabi.Omega())},
        {"omega", round_real(rabi.omega())},
        {"lambda", round_real(rabi.lambda())},
        {"step", round_real(step)},
        {"quasienergies", {round_real(quasienergies[0]), round_real(quasienergies[1])}},
    };
}

} // namespace binlat::io
