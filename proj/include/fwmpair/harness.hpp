#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fwmpair/metrics.hpp"
#include "fwmpair/textio.hpp"

namespace fwmpair::harness {

// Resolved experiment configuration. Defaults mirror the documented config
// keys; parse() applies a config file and command-line overrides on top.
struct ExperimentConfig {
    std::string experiment = "jsa";  // jsa | mc-radius | mc-duration | mc-corrlen | sweep | stable-radius

    double radius_um = 4.0;
    double ge_fraction = 0.067;
    double pump_wavelength_um = 1.064;
    double pump_duration_s = 1e-12;
    double pump_power_w = 1.0;
    double gamma = 1.0;

    std::vector<double> sigma_rel{0.0, 0.0025, 0.005, 0.01};
    double l_corr_m = 1.0;
    double dz_m = 0.0;  // 0 = auto

    std::size_t grid_n = 512;
    std::size_t samples = 200;
    uint64_t seed = 42;
    int threads = 0;  // 0 = hardware concurrency

    double window_radius_um = 0.05;
    std::vector<double> radius_range{};      // sweep / mc-radius axis
    std::vector<double> doping_list{0.067};  // design sweep
    std::vector<double> duration_range_ps{}; // mc-duration axis
    // expanded log10(l_corr/m) points; config key takes start:stop:step
    std::vector<double> corrlen_log10_range{};

    bool grid_binary = true;

    static ExperimentConfig parse(const textio::KeyValues& kv);
    // Resolved key/value echo, written at the top of every output table.
    std::vector<std::string> echo() const;
};

// Median and quartiles of one sweep-point sample set.
struct McStats {
    double axis = 0.0;       // sweep-point coordinate
    double median = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    std::size_t count = 0;
    bool flagged = false;    // fewer than 20 samples in the window
};

double quantile(std::vector<double> values, double p);  // type-7, sorts a copy
McStats window_stats(double axis, std::vector<double> values);

// Immutable per-design-point model shared by all realizations: resolved
// field assignment, dispersion at the mean radius, collision setup, lookup
// table and common time grid.
struct SourceModel {
    modes::FiberGeometry geometry;
    phasematch::FieldAssignment fields;
    phasematch::PhaseMatchResult pm;
    std::array<double, 4> beta1{};  // roles p,q,s,i at central frequencies
    double dbeta0 = 0.0;            // residual mismatch at the design point
    jointstate::PumpConfig pumps;
    double length_m = 0.0;
    double l_coll_m = 0.0;
    std::optional<stochastic::DispersionLookup> lookup;  // absent when sigma = 0
    double sigma_a_um = 0.0;
    jointstate::TimeGrid grid;

    // Throws std::runtime_error when no phase-matched solution exists.
    static SourceModel create(double radius_um, double ge_fraction, double lambda_p_um,
                              double t_p_s, double pump_power_w, double max_sigma_a_um,
                              std::size_t grid_n);

    jointstate::JointAmplitude realize(double sigma_a_um, double l_corr_m, double dz_m,
                                       uint64_t seed, double gamma) const;
    jointstate::JointAmplitude realize_uniform(double gamma) const;
    stochastic::RadiusProfile profile(double sigma_a_um, double l_corr_m, double dz_m,
                                      uint64_t seed) const;
};

// Deterministic worker pool: run fn(i) for i in [0, n) on k threads;
// results are gathered by index so scheduling cannot reorder output.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

// --- experiments -------------------------------------------------------
// Each writes CSV tables (config echo in the header block) into out_dir
// and returns its rows for programmatic use.

struct JsaRealization {
    double sigma_rel = 0.0;
    double purity = 0.0;
    std::string profile_csv;  // empty for sigma = 0
    std::string grid_file;
};
std::vector<JsaRealization> run_jsa_realizations(const ExperimentConfig& cfg,
                                                 const std::string& out_dir);

struct RadiusPoint {
    double sigma_rel = 0.0;
    McStats stats;
};
std::vector<RadiusPoint> run_purity_vs_radius(const ExperimentConfig& cfg,
                                              const std::string& out_dir);

struct DurationPoint {
    double sigma_rel = 0.0;
    double duration_s = 0.0;
    double length_m = 0.0;
    McStats stats;
};
std::vector<DurationPoint> run_purity_vs_duration(const ExperimentConfig& cfg,
                                                  const std::string& out_dir);

struct CorrLenPoint {
    double l_corr_m = 0.0;
    double coll_over_corr = 0.0;
    McStats purity;
    McStats visibility;
};
std::vector<CorrLenPoint> run_correlation_length(const ExperimentConfig& cfg,
                                                 const std::string& out_dir);

struct SweepCell {
    double doping = 0.0;
    double radius_um = 0.0;
    bool solved = false;
    double lambda_s_nm = 0.0;
    double lambda_i_nm = 0.0;
    double purity = 0.0;
    bool raman_ok = false;
};
struct SweepResult {
    std::vector<SweepCell> cells;
    // Per-doping argmax of the signal wavelength.
    std::vector<SweepCell> ridge;
};
SweepResult run_design_sweep(const ExperimentConfig& cfg, const std::string& out_dir);

struct StableRadiusReport {
    double radius_um = 0.0;
    double lambda_pm_nm = 0.0;
    double v_number = 0.0;
    double lp11_cutoff_nm = 0.0;
};
StableRadiusReport run_stable_radius(const ExperimentConfig& cfg, const std::string& out_dir);

// Dispatch on cfg.experiment; returns the list of files written.
void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

}  // namespace fwmpair::harness
