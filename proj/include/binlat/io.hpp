#pragma once

#include "binlat/dynamics.hpp"
#include "binlat/rabi_floquet.hpp"
#include "binlat/resonance.hpp"
#include "binlat/spectral.hpp"

#include <json.hpp>

#include <array>
#include <ostream>
#include <string>

namespace binlat::io {

// Reals are written with 12 significant digits everywhere.
std::string format_real(double x);

// Rounds to 12 significant digits so JSON output matches the CSV precision.
double round_real(double x);

// `scale` multiplies every energy column (1/F reports energies in units of F).
void write_sweep_csv(std::ostream& out, const SweepTable& table, double scale = 1.0);
void write_ipr_csv(std::ostream& out, const IPRGrid& grid, double scale = 1.0);
// `time_scale` multiplies times (F reports times in units of 1/F).
void write_trajectory_csv(std::ostream& out, const Trajectory& traj, double time_scale = 1.0);

nlohmann::json to_json(const AnticrossingResult& r, double scale = 1.0);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json shirley_json(int order, double V, double F, double scale = 1.0);
nlohmann::json monodromy_json(const RabiParams& rabi, double step, const std::array<double, 2>& quasienergies);

} // namespace binlat::io
