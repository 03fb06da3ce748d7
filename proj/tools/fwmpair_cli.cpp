// Command-line front end. Builds a key/value configuration from the
// subcommand and flags, then drives the shared library through its C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fwmpair.h"

namespace {

struct CommonArgs {
    std::string config_file;
    std::string out_dir = "fwmpair-out";
    long long seed = -1;
    long long samples = -1;
    long long grid_n = -1;
    long long threads = -1;
    double fiber_radius = -1.0;
    double doping = -1.0;
    double pump_nm = -1.0;
    double tp_ps = -1.0;
    double lcorr = -1.0;
    std::string sigma_list;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--config", a.config_file, "configuration file (key = value lines)");
    cmd->add_option("--out", a.out_dir, "output directory");
    cmd->add_option("--seed", a.seed, "base seed for the realization streams");
    cmd->add_option("--samples", a.samples, "realizations per sweep point");
    cmd->add_option("--grid-n", a.grid_n, "time grid size (power of two)");
    cmd->add_option("--threads", a.threads, "worker threads (0 = hardware)");
    cmd->add_option("--fiber-radius", a.fiber_radius, "mean core radius [um]");
    cmd->add_option("--doping", a.doping, "Ge mole fraction of the core");
    cmd->add_option("--pump", a.pump_nm, "pump wavelength [nm]");
    cmd->add_option("--tp", a.tp_ps, "pump duration [ps]");
    cmd->add_option("--lcorr", a.lcorr, "fluctuation correlation length [m]");
    cmd->add_option("--sigma", a.sigma_list, "relative sigma_a/a0 list, e.g. 0.0025,0.005,0.01");
}

// Config-file lines first, explicit flags afterwards so flags win.
std::vector<std::string> collect_pairs(const CommonArgs& a, const std::string& experiment,
                                       const std::vector<std::string>& extra) {
    std::vector<std::string> pairs;
    if (!a.config_file.empty()) {
        std::ifstream in(a.config_file);
        if (!in) throw CLI::ValidationError("--config", "cannot open " + a.config_file);
        std::string line;
        while (std::getline(in, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto a0 = line.find_first_not_of(" \t\r\n");
            if (a0 == std::string::npos) continue;
            const auto b0 = line.find_last_not_of(" \t\r\n");
            pairs.push_back(line.substr(a0, b0 - a0 + 1));
        }
    }
    pairs.push_back("experiment=" + experiment);
    auto num = [](double v) {
        std::ostringstream ss;
        ss.precision(17);
        ss << v;
        return ss.str();
    };
    if (a.seed >= 0) pairs.push_back("mc.seed=" + std::to_string(a.seed));
    if (a.samples >= 0) pairs.push_back("mc.samples=" + std::to_string(a.samples));
    if (a.grid_n >= 0) pairs.push_back("grid.n=" + std::to_string(a.grid_n));
    if (a.threads >= 0) pairs.push_back("mc.threads=" + std::to_string(a.threads));
    if (a.fiber_radius > 0) pairs.push_back("fiber.radius_um=" + num(a.fiber_radius));
    if (a.doping >= 0) pairs.push_back("fiber.ge_fraction=" + num(a.doping));
    if (a.pump_nm > 0) pairs.push_back("pump.wavelength_um=" + num(a.pump_nm * 1e-3));
    if (a.tp_ps > 0) pairs.push_back("pump.duration_ps=" + num(a.tp_ps));
    if (a.lcorr > 0) pairs.push_back("fluct.l_corr_m=" + num(a.lcorr));
    if (!a.sigma_list.empty()) pairs.push_back("fluct.sigma_rel=" + a.sigma_list);
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    return pairs;
}

int run(const std::vector<std::string>& pairs, const std::string& out_dir) {
    std::vector<const char*> ptrs;
    ptrs.reserve(pairs.size());
    for (const auto& p : pairs) ptrs.push_back(p.c_str());
    const fwm_status st = fwm_run(ptrs.data(), static_cast<int>(ptrs.size()), out_dir.c_str());
    if (st != FWM_OK) {
        std::fprintf(stderr, "error (%s): %s\n", fwm_status_name(st), fwm_last_error());
        return 1;
    }
    std::printf("wrote %s\n", out_dir.c_str());
    return 0;
}

void print_csv(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') std::printf("%s\n", line.c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fwmpair: intermodal four-wave-mixing photon-pair source simulator"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string radius_range, doping_list, duration_range, corrlen_range;

    auto* sweep = app.add_subcommand("sweep", "design-space sweep over doping and core radius");
    add_common(sweep, args);
    sweep->add_option("--radius", radius_range, "core radius range start:stop:step [um]");
    sweep->add_option("--doping-list", doping_list, "comma-separated Ge fractions");

    auto* stable = app.add_subcommand("stable-radius",
                                      "radius with maximal phase-matched signal wavelength");
    add_common(stable, args);

    auto* jsa = app.add_subcommand("jsa", "single seeded realizations: profiles, JSA grids, purity");
    add_common(jsa, args);

    auto* mcr = app.add_subcommand("mc-radius", "Monte-Carlo purity across mean core radii");
    add_common(mcr, args);
    mcr->add_option("--radius", radius_range, "mean radius range start:stop:step [um]");

    auto* mcd = app.add_subcommand("mc-duration", "Monte-Carlo purity across pump durations");
    add_common(mcd, args);
    mcd->add_option("--duration", duration_range, "duration range start:stop:step [ps]");

    auto* mcc = app.add_subcommand("mc-corrlen",
                                   "Monte-Carlo purity and visibility across correlation lengths");
    add_common(mcc, args);
    mcc->add_option("--corrlen", corrlen_range,
                    "log10(l_corr/m) range start:stop:step, e.g. -2:1:0.125");

    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<std::string> extra;
        if (!radius_range.empty()) extra.push_back("radius.range=" + radius_range);
        if (!doping_list.empty()) extra.push_back("doping.list=" + doping_list);
        if (!duration_range.empty()) extra.push_back("duration.range_ps=" + duration_range);
        if (!corrlen_range.empty()) extra.push_back("corrlen.range_log10m=" + corrlen_range);
        // For the sweep, a bare --doping means a single-entry doping list.
        if (sweep->parsed() && doping_list.empty() && args.doping >= 0) {
            std::ostringstream ss;
            ss.precision(17);
            ss << args.doping;
            extra.push_back("doping.list=" + ss.str());
        }

        std::string experiment;
        if (sweep->parsed()) experiment = "sweep";
        else if (stable->parsed()) experiment = "stable-radius";
        else if (jsa->parsed()) experiment = "jsa";
        else if (mcr->parsed()) experiment = "mc-radius";
        else if (mcd->parsed()) experiment = "mc-duration";
        else if (mcc->parsed()) experiment = "mc-corrlen";

        const int rc = run(collect_pairs(args, experiment, extra), args.out_dir);
        if (rc == 0 && experiment == "stable-radius") {
            print_csv(args.out_dir + "/stable_radius.csv");
        }
        return rc;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
