#include "fwmpair/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <mutex>
#include <sstream>
#include <thread>

#include "fwmpair/constants.hpp"
#include "fwmpair/rng.hpp"

namespace fwmpair::harness {

namespace fs = std::filesystem;

ExperimentConfig ExperimentConfig::parse(const textio::KeyValues& kv) {
    ExperimentConfig c;
    c.experiment = kv.get_string("experiment", c.experiment);
    c.radius_um = kv.get_double("fiber.radius_um", c.radius_um);
    c.ge_fraction = kv.get_double("fiber.ge_fraction", c.ge_fraction);
    c.pump_wavelength_um = kv.get_double("pump.wavelength_um", c.pump_wavelength_um);
    c.pump_duration_s = kv.get_double("pump.duration_ps", c.pump_duration_s * 1e12) * 1e-12;
    c.pump_power_w = kv.get_double("pump.power_w", c.pump_power_w);
    c.gamma = kv.get_double("gamma", c.gamma);
    c.sigma_rel = kv.get_double_list("fluct.sigma_rel", c.sigma_rel);
    c.l_corr_m = kv.get_double("fluct.l_corr_m", c.l_corr_m);
    c.dz_m = kv.get_double("fluct.dz_m", c.dz_m);
    c.grid_n = static_cast<std::size_t>(kv.get_int("grid.n", static_cast<long long>(c.grid_n)));
    c.samples = static_cast<std::size_t>(kv.get_int("mc.samples", static_cast<long long>(c.samples)));
    c.seed = static_cast<uint64_t>(kv.get_int("mc.seed", static_cast<long long>(c.seed)));
    c.threads = static_cast<int>(kv.get_int("mc.threads", c.threads));
    c.window_radius_um = kv.get_double("window.radius_um", c.window_radius_um);
    c.radius_range = kv.get_range("radius.range", c.radius_range);
    c.doping_list = kv.get_double_list("doping.list", c.doping_list);
    c.duration_range_ps = kv.get_range("duration.range_ps", c.duration_range_ps);
    c.corrlen_log10_range =
        kv.get_range("corrlen.range_log10m", textio::parse_range("-2:1:0.125"));
    c.grid_binary = kv.get_string("out.grid_format", c.grid_binary ? "binary" : "csv") == "binary";

    if (c.samples < 1) throw std::invalid_argument("mc.samples must be >= 1");
    if (!fft::is_power_of_two(c.grid_n)) throw std::invalid_argument("grid.n must be a power of two");
    return c;
}

std::vector<std::string> ExperimentConfig::echo() const {
    auto fd = [](double v) { return textio::format_double(v); };
    std::vector<std::string> out;
    out.push_back("experiment = " + experiment);
    out.push_back("fiber.radius_um = " + fd(radius_um));
    out.push_back("fiber.ge_fraction = " + fd(ge_fraction));
    out.push_back("pump.wavelength_um = " + fd(pump_wavelength_um));
    out.push_back("pump.duration_ps = " + fd(pump_duration_s * 1e12));
    out.push_back("pump.power_w = " + fd(pump_power_w));
    out.push_back("gamma = " + fd(gamma));
    {
        std::string list;
        for (std::size_t i = 0; i < sigma_rel.size(); ++i) {
            list += (i ? "," : "") + fd(sigma_rel[i]);
        }
        out.push_back("fluct.sigma_rel = " + list);
    }
    out.push_back("fluct.l_corr_m = " + fd(l_corr_m));
    out.push_back("fluct.dz_m = " + fd(dz_m));
    out.push_back("grid.n = " + std::to_string(grid_n));
    out.push_back("mc.samples = " + std::to_string(samples));
    out.push_back("mc.seed = " + std::to_string(seed));
    out.push_back("window.radius_um = " + fd(window_radius_um));
    auto push_axis = [&](const char* key, const std::vector<double>& v) {
        if (v.empty()) return;
        std::string list;
        for (std::size_t i = 0; i < v.size() && i < 4; ++i) list += (i ? "," : "") + fd(v[i]);
        if (v.size() > 4) list += ",...(" + std::to_string(v.size()) + " points)";
        out.push_back(std::string(key) + " = " + list);
    };
    push_axis("radius.points", radius_range);
    push_axis("doping.list", doping_list);
    push_axis("duration.points_ps", duration_range_ps);
    push_axis("corrlen.range_log10m", corrlen_log10_range);
    return out;
}

double quantile(std::vector<double> v, double p) {
    if (v.empty()) throw std::invalid_argument("quantile of empty sample");
    std::sort(v.begin(), v.end());
    const double h = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

McStats window_stats(double axis, std::vector<double> values) {
    McStats s;
    s.axis = axis;
    s.count = values.size();
    s.flagged = values.size() < 20;
    s.median = quantile(values, 0.5);
    s.q25 = quantile(values, 0.25);
    s.q75 = quantile(values, 0.75);
    return s;
}

SourceModel SourceModel::create(double radius_um, double ge_fraction, double lambda_p_um,
                                double t_p_s, double pump_power_w, double max_sigma_a_um,
                                std::size_t grid_n) {
    SourceModel m;
    m.geometry = {radius_um, {ge_fraction}};
    const auto pm = phasematch::solve_phase_matched_signal(m.geometry, lambda_p_um);
    if (!pm) throw std::runtime_error("no phase-matched solution at radius " +
                                      textio::format_double(radius_um));
    m.pm = *pm;
    m.fields = phasematch::FieldAssignment::make(lambda_p_um, pm->detuning);
    const modes::LPMode mode_of[4] = {m.fields.mode_p, m.fields.mode_q, m.fields.mode_s,
                                      m.fields.mode_i};
    const double omega_of[4] = {m.fields.omega_p, m.fields.omega_p, m.fields.omega_s,
                                m.fields.omega_i};
    for (int r = 0; r < 4; ++r) {
        m.beta1[r] = phasematch::dispersion_coefficients(m.geometry, mode_of[r], omega_of[r]).beta1;
    }
    m.dbeta0 = phasematch::phase_mismatch(m.geometry, m.fields);

    const auto setup = jointstate::standard_collision_setup(m.beta1[0], m.beta1[1], t_p_s, t_p_s);
    m.pumps.t_p_s = m.pumps.t_q_s = t_p_s;
    m.pumps.power_p_w = m.pumps.power_q_w = pump_power_w;
    m.pumps.delay_p_s = setup.delay_p_s;
    m.pumps.delay_q_s = setup.delay_q_s;
    m.length_m = setup.length_m;
    m.l_coll_m = phasematch::collision_length(t_p_s, m.beta1[0], m.beta1[1]);

    m.sigma_a_um = max_sigma_a_um;
    if (max_sigma_a_um > 0.0) {
        m.lookup = stochastic::build_lookup(m.geometry, m.fields, 6.5 * max_sigma_a_um);
    }
    // Common grid for all realizations, planned on the unperturbed record.
    const auto rec0 = stochastic::uniform_dispersion(m.length_m, m.length_m / 400.0, m.beta1,
                                                     m.dbeta0);
    m.grid = jointstate::plan_grid(m.pumps, rec0, grid_n);
    return m;
}

stochastic::RadiusProfile SourceModel::profile(double sigma_a_um, double l_corr_m, double dz_m,
                                               uint64_t seed) const {
    stochastic::FluctuationSpec spec;
    spec.sigma_a_um = sigma_a_um;
    spec.l_corr_m = l_corr_m;
    spec.dz_m = dz_m;
    spec.seed = seed;
    return stochastic::sample_profile(spec, geometry.core_radius_um, length_m);
}

jointstate::JointAmplitude SourceModel::realize(double sigma_a_um, double l_corr_m, double dz_m,
                                                uint64_t seed, double gamma) const {
    if (sigma_a_um <= 0.0) return realize_uniform(gamma);
    if (!lookup) throw std::logic_error("SourceModel built without a fluctuation lookup");
    const auto prof = profile(sigma_a_um, l_corr_m, dz_m, seed);
    const auto rec = stochastic::profile_to_dispersion(prof, *lookup);
    return jointstate::build_jta(pumps, rec, gamma, grid);
}

jointstate::JointAmplitude SourceModel::realize_uniform(double gamma) const {
    return jointstate::build_jta_uniform(pumps, beta1, dbeta0, gamma, length_m, grid);
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    int k = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (k < 1) k = 1;
    if (k == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::string first_error;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (first_error.empty()) first_error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (!first_error.empty()) throw std::runtime_error(first_error);
}

namespace {

void ensure_dir(const std::string& out_dir) {
    fs::create_directories(out_dir);
}

void write_config_echo(const ExperimentConfig& cfg, const std::string& out_dir) {
    std::string text;
    for (const auto& line : cfg.echo()) text += line + "\n";
    textio::write_text_file(out_dir + "/config.txt", text);
}

// Numerical failures inside a Monte-Carlo body surface with the seed that
// triggered them, so a failing realization can be replayed directly.
template <typename Fn>
void with_seed_context(uint64_t seed, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        throw std::runtime_error("realization seed " + std::to_string(seed) + ": " + e.what());
    }
}

std::string sigma_tag(double sigma_rel) {
    std::ostringstream ss;
    ss << "sigma_" << textio::format_double(sigma_rel * 100.0) << "pct";
    std::string s = ss.str();
    for (auto& ch : s) {
        if (ch == '.') ch = 'p';
    }
    return s;
}

void export_profile_csv(const std::string& path, const stochastic::RadiusProfile& prof,
                        const std::vector<std::string>& echo) {
    textio::CsvWriter csv(path, echo, {"z_m", "a_um"});
    for (std::size_t i = 0; i < prof.size(); ++i) {
        csv.row_values({static_cast<double>(i) * prof.dz_m, prof.a_um[i]});
    }
}

}  // namespace

std::vector<JsaRealization> run_jsa_realizations(const ExperimentConfig& cfg,
                                                 const std::string& out_dir) {
    ensure_dir(out_dir);
    ensure_dir(out_dir + "/grids");
    write_config_echo(cfg, out_dir);
    const auto echo = cfg.echo();

    const double max_sigma = *std::max_element(cfg.sigma_rel.begin(), cfg.sigma_rel.end());
    const auto model = SourceModel::create(cfg.radius_um, cfg.ge_fraction, cfg.pump_wavelength_um,
                                           cfg.pump_duration_s, cfg.pump_power_w,
                                           max_sigma * cfg.radius_um, cfg.grid_n);

    std::vector<JsaRealization> rows(cfg.sigma_rel.size());
    std::vector<std::array<std::string, 2>> names(cfg.sigma_rel.size());
    parallel_for(cfg.sigma_rel.size(), cfg.threads, [&](std::size_t i) {
        const double sigma_rel = cfg.sigma_rel[i];
        const double sigma = sigma_rel * cfg.radius_um;
        JsaRealization& row = rows[i];
        row.sigma_rel = sigma_rel;
        const std::string tag = sigma_tag(sigma_rel);
        jointstate::JointAmplitude ja;
        if (sigma <= 0.0) {
            ja = model.realize_uniform(cfg.gamma);
        } else {
            const uint64_t seed = rng::realization_seed(cfg.seed, i);
            const auto prof = model.profile(sigma, cfg.l_corr_m, cfg.dz_m, seed);
            names[i][0] = "profile_" + tag + ".csv";
            row.profile_csv = out_dir + "/" + names[i][0];
            export_profile_csv(row.profile_csv, prof, echo);
            const auto rec = stochastic::profile_to_dispersion(prof, *model.lookup);
            ja = jointstate::build_jta(model.pumps, rec, cfg.gamma, model.grid);
        }
        row.purity = metrics::purity_fast(ja);
        const auto jsa = jointstate::jta_to_jsa(ja);
        names[i][1] = std::string("grids/jsa_") + tag + (cfg.grid_binary ? ".grid" : ".grid.csv");
        row.grid_file = out_dir + "/" + names[i][1];
        textio::write_grid(row.grid_file, jsa, cfg.grid_binary, echo);
    });

    // Table cells carry run-directory-relative names so seeded reruns are
    // byte-identical wherever they land.
    textio::CsvWriter csv(out_dir + "/jsa_summary.csv", echo,
                          {"sigma_rel", "purity", "profile_csv", "grid_file"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        csv.row({textio::format_double(rows[i].sigma_rel), textio::format_double(rows[i].purity),
                 names[i][0], names[i][1]});
    }
    return rows;
}

std::vector<RadiusPoint> run_purity_vs_radius(const ExperimentConfig& cfg,
                                              const std::string& out_dir) {
    ensure_dir(out_dir);
    write_config_echo(cfg, out_dir);
    const auto echo = cfg.echo();
    if (cfg.radius_range.empty()) throw std::invalid_argument("mc-radius requires radius.range");
    const double r_lo = cfg.radius_range.front(), r_hi = cfg.radius_range.back();

    std::vector<RadiusPoint> out;
    textio::CsvWriter csv(out_dir + "/purity_vs_radius.csv", echo,
                          {"sigma_rel", "radius_um", "median", "q25", "q75", "count", "flagged"});

    for (const double sigma_rel : cfg.sigma_rel) {
        // Mean radii sampled uniformly over the range, as in the reference
        // study; one realization per fiber.
        std::vector<double> radii(cfg.samples), purity(cfg.samples);
        parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
            const uint64_t seed = rng::realization_seed(cfg.seed, i);
            with_seed_context(seed, [&] {
                const double a_mean =
                    r_lo == r_hi ? r_lo : rng::uniform_range(cfg.seed, 0xAD1u, i, r_lo, r_hi);
                radii[i] = a_mean;
                const double sigma = sigma_rel * a_mean;
                const auto model = SourceModel::create(a_mean, cfg.ge_fraction,
                                                       cfg.pump_wavelength_um, cfg.pump_duration_s,
                                                       cfg.pump_power_w, sigma, cfg.grid_n);
                const auto ja = model.realize(sigma, cfg.l_corr_m, cfg.dz_m, seed, cfg.gamma);
                purity[i] = metrics::purity_fast(ja);
            });
        });

        // Sliding windows on a half-window-spaced grid of centers.
        const double w = cfg.window_radius_um;
        std::vector<double> centers;
        if (r_lo == r_hi) {
            centers.push_back(r_lo);
        } else {
            for (double c = r_lo; c <= r_hi + 1e-12; c += 0.5 * w) centers.push_back(c);
        }
        for (const double c : centers) {
            std::vector<double> in_window;
            for (std::size_t i = 0; i < cfg.samples; ++i) {
                if (std::fabs(radii[i] - c) <= 0.5 * w) in_window.push_back(purity[i]);
            }
            if (in_window.empty()) continue;
            RadiusPoint p;
            p.sigma_rel = sigma_rel;
            p.stats = window_stats(c, std::move(in_window));
            out.push_back(p);
            csv.row_values({sigma_rel, c, p.stats.median, p.stats.q25, p.stats.q75,
                            static_cast<double>(p.stats.count),
                            static_cast<double>(p.stats.flagged)});
        }
    }
    return out;
}

std::vector<DurationPoint> run_purity_vs_duration(const ExperimentConfig& cfg,
                                                  const std::string& out_dir) {
    ensure_dir(out_dir);
    write_config_echo(cfg, out_dir);
    const auto echo = cfg.echo();
    if (cfg.duration_range_ps.empty()) {
        throw std::invalid_argument("mc-duration requires duration.range_ps");
    }

    std::vector<DurationPoint> out;
    textio::CsvWriter csv(out_dir + "/purity_vs_duration.csv", echo,
                          {"sigma_rel", "duration_ps", "length_m", "median", "q25", "q75", "count",
                           "flagged"});
    for (const double sigma_rel : cfg.sigma_rel) {
        for (const double t_ps : cfg.duration_range_ps) {
            const double t_s = t_ps * 1e-12;
            const double sigma = sigma_rel * cfg.radius_um;
            const auto model = SourceModel::create(cfg.radius_um, cfg.ge_fraction,
                                                   cfg.pump_wavelength_um, t_s, cfg.pump_power_w,
                                                   sigma, cfg.grid_n);
            std::vector<double> purity(cfg.samples);
            parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
                const uint64_t seed = rng::realization_seed(cfg.seed, i);
                with_seed_context(seed, [&] {
                    const auto ja = model.realize(sigma, cfg.l_corr_m, cfg.dz_m, seed, cfg.gamma);
                    purity[i] = metrics::purity_fast(ja);
                });
            });
            DurationPoint p;
            p.sigma_rel = sigma_rel;
            p.duration_s = t_s;
            p.length_m = model.length_m;
            p.stats = window_stats(t_ps, std::move(purity));
            out.push_back(p);
            csv.row_values({sigma_rel, t_ps, p.length_m, p.stats.median, p.stats.q25, p.stats.q75,
                            static_cast<double>(p.stats.count),
                            static_cast<double>(p.stats.flagged)});
        }
    }
    return out;
}

std::vector<CorrLenPoint> run_correlation_length(const ExperimentConfig& cfg,
                                                 const std::string& out_dir) {
    ensure_dir(out_dir);
    write_config_echo(cfg, out_dir);
    const auto echo = cfg.echo();
    const double sigma_rel = cfg.sigma_rel.back();  // single strength per run
    const double sigma = sigma_rel * cfg.radius_um;
    const auto model = SourceModel::create(cfg.radius_um, cfg.ge_fraction, cfg.pump_wavelength_um,
                                           cfg.pump_duration_s, cfg.pump_power_w, sigma,
                                           cfg.grid_n);

    std::vector<double> l_corr_values;
    {
        const auto& r = cfg.corrlen_log10_range;
        if (r.size() < 2) throw std::invalid_argument("mc-corrlen requires corrlen.range_log10m");
        for (const double lg : r) l_corr_values.push_back(std::pow(10.0, lg));
    }

    // One seed set shared by every scan point, and one sampling step fine
    // enough for the smallest correlation length: with common random
    // numbers the per-realization purity varies smoothly along the scan,
    // which is what makes the shallow minimum of the median locatable at
    // desk-scale statistics.
    const double min_l_corr = *std::min_element(l_corr_values.begin(), l_corr_values.end());
    const double scan_dz =
        cfg.dz_m > 0.0 ? cfg.dz_m
                       : stochastic::FluctuationSpec::default_dz(min_l_corr, model.length_m);

    std::vector<CorrLenPoint> out;
    textio::CsvWriter csv(out_dir + "/corrlen.csv", echo,
                          {"l_corr_m", "l_coll_over_l_corr", "purity_median", "purity_q25",
                           "purity_q75", "visibility_median", "visibility_q25", "visibility_q75",
                           "count", "flagged"});
    for (std::size_t pt = 0; pt < l_corr_values.size(); ++pt) {
        const double l_corr = l_corr_values[pt];
        std::vector<double> purity(cfg.samples);
        std::vector<double> vis(cfg.samples / 2);
        // Per-realization grams; visibility pairs consecutive realizations
        // (2k, 2k+1) so no realization is reused.
        std::vector<linalg::CMatrix> grams(cfg.samples);
        parallel_for(cfg.samples, cfg.threads, [&](std::size_t i) {
            const uint64_t seed = rng::realization_seed(cfg.seed, i);
            with_seed_context(seed, [&] {
                const auto ja = model.realize(sigma, l_corr, scan_dz, seed, cfg.gamma);
                grams[i] = metrics::herald_gram(ja);
                purity[i] = metrics::purity_from_gram(grams[i]);
            });
        });
        for (std::size_t k = 0; k + 1 < cfg.samples; k += 2) {
            vis[k / 2] = metrics::visibility_from_grams(grams[k], grams[k + 1]);
        }
        CorrLenPoint p;
        p.l_corr_m = l_corr;
        p.coll_over_corr = model.l_coll_m / l_corr;
        p.purity = window_stats(l_corr, purity);
        p.visibility = window_stats(l_corr, vis);
        out.push_back(p);
        csv.row_values({l_corr, p.coll_over_corr, p.purity.median, p.purity.q25, p.purity.q75,
                        p.visibility.median, p.visibility.q25, p.visibility.q75,
                        static_cast<double>(cfg.samples),
                        static_cast<double>(p.purity.flagged || p.visibility.flagged)});
    }
    return out;
}

SweepResult run_design_sweep(const ExperimentConfig& cfg, const std::string& out_dir) {
    ensure_dir(out_dir);
    write_config_echo(cfg, out_dir);
    const auto echo = cfg.echo();
    if (cfg.radius_range.empty()) throw std::invalid_argument("sweep requires radius.range");

    SweepResult result;
    const std::size_t nr = cfg.radius_range.size();
    result.cells.resize(cfg.doping_list.size() * nr);

    // Cells are independent; parallelize over the whole grid.
    parallel_for(result.cells.size(), cfg.threads, [&](std::size_t idx) {
        const double doping = cfg.doping_list[idx / nr];
        const double radius = cfg.radius_range[idx % nr];
        SweepCell& cell = result.cells[idx];
        cell.doping = doping;
        cell.radius_um = radius;
        try {
            const auto model = SourceModel::create(radius, doping, cfg.pump_wavelength_um,
                                                   cfg.pump_duration_s, cfg.pump_power_w, 0.0,
                                                   cfg.grid_n);
            cell.solved = true;
            cell.lambda_s_nm = model.pm.lambda_s_um * 1e3;
            cell.lambda_i_nm = model.pm.lambda_i_um * 1e3;
            cell.raman_ok = phasematch::raman_window_check(cfg.pump_wavelength_um,
                                                           model.pm.lambda_s_um) &&
                            phasematch::raman_window_check(cfg.pump_wavelength_um,
                                                           model.pm.lambda_i_um);
            cell.purity = metrics::purity_fast(model.realize_uniform(cfg.gamma));
        } catch (const std::exception&) {
            cell.solved = false;  // recorded as an empty cell, not dropped
        }
    });

    textio::CsvWriter csv(out_dir + "/design_sweep.csv", echo,
                          {"doping", "radius_um", "lambda_s_nm", "lambda_i_nm", "purity",
                           "raman_ok"});
    for (const auto& c : result.cells) {
        if (c.solved) {
            csv.row_values({c.doping, c.radius_um, c.lambda_s_nm, c.lambda_i_nm, c.purity,
                            static_cast<double>(c.raman_ok)});
        } else {
            csv.row({textio::format_double(c.doping), textio::format_double(c.radius_um), "", "",
                     "", ""});
        }
    }

    textio::CsvWriter ridge_csv(out_dir + "/design_sweep_ridge.csv", echo,
                                {"doping", "radius_um", "lambda_s_nm", "purity", "raman_ok"});
    for (std::size_t d = 0; d < cfg.doping_list.size(); ++d) {
        const SweepCell* best = nullptr;
        for (std::size_t r = 0; r < nr; ++r) {
            const SweepCell& c = result.cells[d * nr + r];
            if (c.solved && (!best || c.lambda_s_nm > best->lambda_s_nm)) best = &c;
        }
        if (!best) continue;
        result.ridge.push_back(*best);
        ridge_csv.row_values({best->doping, best->radius_um, best->lambda_s_nm, best->purity,
                              static_cast<double>(best->raman_ok)});
    }
    return result;
}

StableRadiusReport run_stable_radius(const ExperimentConfig& cfg, const std::string& out_dir) {
    ensure_dir(out_dir);
    write_config_echo(cfg, out_dir);
    const auto r = phasematch::find_stable_radius({cfg.ge_fraction}, cfg.pump_wavelength_um);
    StableRadiusReport rep;
    rep.radius_um = r.radius_um;
    rep.lambda_pm_nm = r.lambda_pm_um * 1e3;
    const modes::FiberGeometry geom{r.radius_um, {cfg.ge_fraction}};
    rep.v_number = modes::v_number(geom, cfg.pump_wavelength_um);
    rep.lp11_cutoff_nm = modes::cutoff_wavelength(geom, modes::LPMode::LP11) * 1e3;

    textio::CsvWriter csv(out_dir + "/stable_radius.csv", cfg.echo(),
                          {"doping", "radius_um", "lambda_pm_nm", "v_number", "lp11_cutoff_nm"});
    csv.row_values({cfg.ge_fraction, rep.radius_um, rep.lambda_pm_nm, rep.v_number,
                    rep.lp11_cutoff_nm});
    return rep;
}

void run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
    if (cfg.experiment == "jsa") {
        run_jsa_realizations(cfg, out_dir);
    } else if (cfg.experiment == "mc-radius") {
        run_purity_vs_radius(cfg, out_dir);
    } else if (cfg.experiment == "mc-duration") {
        run_purity_vs_duration(cfg, out_dir);
    } else if (cfg.experiment == "mc-corrlen") {
        run_correlation_length(cfg, out_dir);
    } else if (cfg.experiment == "sweep") {
        run_design_sweep(cfg, out_dir);
    } else if (cfg.experiment == "stable-radius") {
        run_stable_radius(cfg, out_dir);
    } else {
        throw std::invalid_argument("unknown experiment: " + cfg.experiment);
    }
}

}  // namespace fwmpair::harness
