#include "fwmpair/material.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace fwmpair::material {

namespace {

// Values mirror data/sellmeier_ge_silica.txt; the unit test checks the two
// stay in sync.
constexpr double kSilicaA[3] = {0.6961663, 0.4079426, 0.8974794};
constexpr double kSilicaL[3] = {0.0684043, 0.1162414, 9.896161};
// Doped endpoint, expressed at unit mole fraction. See the coefficient
// file for the provenance and calibration notes.
constexpr double kDopedA[3] = {0.8063418556, 0.7334418593, -0.5353457852};
constexpr double kDopedL[3] = {0.0109451898, 0.2992327457, 15.0600926687};
constexpr double kInterpScale = 0.897673426736;

double eval_n(const SellmeierModel& m, double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    double s = 1.0;
    for (int i = 0; i < 3; ++i) {
        const double li2 = m.resonance[i] * m.resonance[i];
        s += m.strength[i] * l2 / (l2 - li2);
    }
    return std::sqrt(s);
}

}  // namespace

const SellmeierData& default_sellmeier_data() {
    static const SellmeierData data = [] {
        SellmeierData d;
        for (int i = 0; i < 3; ++i) {
            d.silica.strength[i] = kSilicaA[i];
            d.silica.resonance[i] = kSilicaL[i];
            d.doped.strength[i] = kDopedA[i];
            d.doped.resonance[i] = kDopedL[i];
        }
        d.interpolation_scale = kInterpScale;
        return d;
    }();
    return data;
}

SellmeierData parse_sellmeier_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::map<std::string, double> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string key, eq;
        double value;
        if (ss >> key >> eq >> value && eq == "=") kv[key] = value;
    }
    auto need = [&](const std::string& k) {
        auto it = kv.find(k);
        if (it == kv.end()) throw std::runtime_error("coefficient file misses key: " + k);
        return it->second;
    };
    SellmeierData d;
    for (int i = 0; i < 3; ++i) {
        const std::string n = std::to_string(i + 1);
        d.silica.strength[i] = need("silica.A" + n);
        d.silica.resonance[i] = need("silica.l" + n);
        d.doped.strength[i] = need("doped.A" + n);
        d.doped.resonance[i] = need("doped.l" + n);
    }
    d.interpolation_scale = need("interpolation_scale");
    return d;
}

SellmeierModel sellmeier_for_composition(const GlassComposition& x, const SellmeierData& data) {
    if (!(x.ge_mole_fraction >= 0.0) || x.ge_mole_fraction > GlassComposition::kMaxFraction) {
        throw std::invalid_argument("ge_mole_fraction outside validated range [0, 0.10]");
    }
    const double t = data.interpolation_scale * x.ge_mole_fraction;
    SellmeierModel m;
    for (int i = 0; i < 3; ++i) {
        m.strength[i] = data.silica.strength[i] + t * (data.doped.strength[i] - data.silica.strength[i]);
        m.resonance[i] = data.silica.resonance[i] + t * (data.doped.resonance[i] - data.silica.resonance[i]);
    }
    return m;
}

double refractive_index(const SellmeierModel& model, double lambda_um) {
    if (lambda_um < kBandMin || lambda_um > kBandMax) {
        throw BandError("wavelength outside validated band 0.85-1.40 um");
    }
    return eval_n(model, lambda_um);
}

double refractive_index_extended(const SellmeierModel& model, double lambda_um) {
    if (lambda_um < kExtendedBandMin || lambda_um > kExtendedBandMax) {
        throw BandError("wavelength outside extended band 0.50-3.50 um");
    }
    return eval_n(model, lambda_um);
}

double index_step(const GlassComposition& x, double lambda_um, const SellmeierData& data) {
    const SellmeierModel core = sellmeier_for_composition(x, data);
    const SellmeierModel clad = sellmeier_for_composition(GlassComposition{0.0}, data);
    return refractive_index(core, lambda_um) - refractive_index(clad, lambda_um);
}

}  // namespace fwmpair::material
