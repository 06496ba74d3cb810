#include "binlat/cli.hpp"

#include "binlat/dynamics.hpp"
#include "binlat/errors.hpp"
#include "binlat/io.hpp"
#include "binlat/rabi_floquet.hpp"
#include "binlat/resonance.hpp"
#include "binlat/spectral.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace binlat::cli {

namespace {

struct Options {
    std::string out_path;
    bool scaled = false;
    std::optional<int> half_width;

    double V = 0.2;
    double F = 1.0;
    double epsilon = 0.9579;
    int order = 0;
    int site = 0;
    std::optional<double> tmax;
    int samples = 400;

    double emin = 0.5, emax = 1.5;
    int esteps = 201;
    std::optional<double> wmin, wmax;

    double vmin = 0.02, vmax = 1.2;
    int vsteps = 60;

    double Omega = 0.3, omega = 1.0, lambda = 0.2;
    std::optional<double> step;
};

std::optional<Truncation> forced_truncation(const Options& o) {
    if (!o.half_width) return std::nullopt;
    return Truncation(*o.half_width);
}

Truncation truncation_for(const Options& o, const LatticeParams& params) {
    if (o.half_width) return Truncation(*o.half_width);
    return converge_truncation(params, convergence_tolerance * params.F());
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--out", o.out_path, "write output to PATH instead of stdout");
    sub->add_flag("--scaled", o.scaled, "report energies in units of F (times in units of 1/F)");
}

void add_truncation(CLI::App* sub, Options& o) {
    sub->add_option("--N", o.half_width, "truncation half-width (default: converged automatically)")
        ->check(CLI::PositiveNumber);
}

double monodromy_step(const Options& o, const RabiParams& rabi) {
    return o.step ? *o.step : rabi.period() / default_steps_per_period;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary lattice with a static force: spectra, anticrossings, dynamics and the Rabi-Floquet mapping",
                 "binlat"};
    app.require_subcommand(1);
    Options o;

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues in an energy window over an epsilon grid (CSV)");
    add_common(spectrum, o);
    add_truncation(spectrum, o);
    spectrum->add_option("--V", o.V, "hopping")->check(CLI::NonNegativeNumber);
    spectrum->add_option("--F", o.F, "static force")->check(CLI::PositiveNumber);
    spectrum->add_option("--emin", o.emin, "first epsilon");
    spectrum->add_option("--emax", o.emax, "last epsilon");
    spectrum->add_option("--esteps", o.esteps, "number of epsilon points")->check(CLI::PositiveNumber);
    spectrum->add_option("--wmin", o.wmin, "energy window lower edge (default 0)");
    spectrum->add_option("--wmax", o.wmax, "energy window upper edge (default F)");

    auto* anticross = app.add_subcommand("anticross", "locate the order-n anticrossing (JSON)");
    add_common(anticross, o);
    add_truncation(anticross, o);
    anticross->add_option("--order", o.order, "resonance order n")->check(CLI::NonNegativeNumber);
    anticross->add_option("--V", o.V, "hopping")->check(CLI::PositiveNumber);
    anticross->add_option("--F", o.F, "static force")->check(CLI::PositiveNumber);

    auto* evolve_cmd = app.add_subcommand("evolve", "site occupations P_n(t) from a localized start (CSV)");
    add_common(evolve_cmd, o);
    add_truncation(evolve_cmd, o);
    evolve_cmd->add_option("--epsilon", o.epsilon, "on-site mismatch");
    evolve_cmd->add_option("--V", o.V, "hopping")->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--F", o.F, "static force")->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--site", o.site, "initial site");
    evolve_cmd->add_option("--tmax", o.tmax, "final time (default 1.1 * 2pi / gap at --order)")
        ->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--samples", o.samples, "number of time samples")->check(CLI::Range(2, 1000000));
    evolve_cmd->add_option("--order", o.order, "resonance order used for the default --tmax")
        ->check(CLI::NonNegativeNumber);

    auto* ipr_cmd = app.add_subcommand("ipr-map", "IPR of the site-0 eigenstate over (V, epsilon) (CSV)");
    add_common(ipr_cmd, o);
    add_truncation(ipr_cmd, o);
    ipr_cmd->add_option("--F", o.F, "static force")->check(CLI::PositiveNumber);
    ipr_cmd->add_option("--vmin", o.vmin, "first V");
    ipr_cmd->add_option("--vmax", o.vmax, "last V");
    ipr_cmd->add_option("--vsteps", o.vsteps, "number of V points")->check(CLI::PositiveNumber);
    ipr_cmd->add_option("--emin", o.emin, "first epsilon");
    ipr_cmd->add_option("--emax", o.emax, "last epsilon");
    ipr_cmd->add_option("--esteps", o.esteps, "number of epsilon points")->check(CLI::PositiveNumber);

    auto* shirley = app.add_subcommand("shirley", "perturbative resonance shift (JSON)");
    add_common(shirley, o);
    shirley->add_option("--order", o.order, "resonance order n")->check(CLI::NonNegativeNumber);
    shirley->add_option("--V", o.V, "hopping")->check(CLI::NonNegativeNumber);
    shirley->add_option("--F", o.F, "static force")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "lattice <-> Rabi-Floquet correspondence report (JSON)");
    add_common(verify, o);
    verify->add_option("--N", o.half_width, "truncation half-width (default 40)")->check(CLI::PositiveNumber);
    verify->add_option("--Omega", o.Omega, "two-level splitting")->check(CLI::NonNegativeNumber);
    verify->add_option("--omega", o.omega, "drive frequency")->check(CLI::PositiveNumber);
    verify->add_option("--lambda", o.lambda, "coupling")->check(CLI::NonNegativeNumber);
    verify->add_option("--step", o.step, "RK4 step (default T/10000)")->check(CLI::PositiveNumber);

    auto* monodromy = app.add_subcommand("monodromy", "quasienergies from one-period time integration (JSON)");
    add_common(monodromy, o);
    monodromy->add_option("--Omega", o.Omega, "two-level splitting")->check(CLI::NonNegativeNumber);
    monodromy->add_option("--omega", o.omega, "drive frequency")->check(CLI::PositiveNumber);
    monodromy->add_option("--lambda", o.lambda, "coupling")->check(CLI::NonNegativeNumber);
    monodromy->add_option("--step", o.step, "RK4 step (default T/10000)")->check(CLI::PositiveNumber);

    std::vector<const char*> argv{"binlat"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : validation_error;
    }

    std::ostringstream buffer;
    try {
        const double scale = o.scaled ? 1.0 / o.F : 1.0;
        if (spectrum->parsed()) {
            const std::vector<double> grid = linspace(o.emin, o.emax, o.esteps);
            const EnergyWindow window{o.wmin.value_or(0.0), o.wmax.value_or(o.F)};
            int half = 1;
            for (double eps : {grid.front(), grid.back()})
                half = std::max(half, truncation_for(o, LatticeParams(o.V, eps, o.F)).half_width());
            const Truncation trunc(half);
            io::write_sweep_csv(buffer, spectrum_sweep(o.V, o.F, grid, window, trunc), scale);
        } else if (anticross->parsed()) {
            const AnticrossingResult r = find_anticrossing(o.order, o.V, o.F, forced_truncation(o));
            buffer << io::to_json(r, scale).dump(2) << '\n';
        } else if (evolve_cmd->parsed()) {
            const LatticeParams params(o.V, o.epsilon, o.F);
            const Truncation trunc = truncation_for(o, params);
            const double tmax = o.tmax ? *o.tmax
                                       : 1.1 * 2.0 * std::numbers::pi / gap_at(o.epsilon, o.order, o.V, o.F, trunc).gap;
            const std::vector<double> times = linspace(0.0, tmax, o.samples);
            io::write_trajectory_csv(buffer, evolve(params, o.site, times, trunc), o.scaled ? o.F : 1.0);
        } else if (ipr_cmd->parsed()) {
            const std::vector<double> vs = linspace(o.vmin, o.vmax, o.vsteps);
            const std::vector<double> es = linspace(o.emin, o.emax, o.esteps);
            io::write_ipr_csv(buffer, ipr_map(vs, es, o.F, forced_truncation(o)), scale);
        } else if (shirley->parsed()) {
            buffer << io::shirley_json(o.order, o.V, o.F, scale).dump(2) << '\n';
        } else if (verify->parsed()) {
            const RabiParams rabi(o.Omega, o.omega, o.lambda);
            const Truncation trunc(o.half_width.value_or(Truncation::default_half_width));
            buffer << io::to_json(verify_correspondence(rabi, trunc, monodromy_step(o, rabi))).dump(2) << '\n';
        } else if (monodromy->parsed()) {
            const RabiParams rabi(o.Omega, o.omega, o.lambda);
            const double step = monodromy_step(o, rabi);
            buffer << io::monodromy_json(rabi, step, monodromy_quasienergies(rabi, step)).dump(2) << '\n';
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return validation_error;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return numerical_failure;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.out_path << " for writing\n";
            return validation_error;
        }
        file << buffer.str();
    }
    return ok;
}

} // namespace binlat::cli
