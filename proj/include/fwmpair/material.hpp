#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace fwmpair::material {

// Ge-doping mole fraction of the core glass. The cladding is pure silica
// (ge_mole_fraction = 0).
struct GlassComposition {
    double ge_mole_fraction = 0.0;

    static constexpr double kMaxFraction = 0.10;
};

// Three-term Sellmeier model, n^2(lambda) = 1 + sum A_i lambda^2 / (lambda^2 - l_i^2),
// lambda in micrometers.
struct SellmeierModel {
    std::array<double, 3> strength{};    // A_i, dimensionless
    std::array<double, 3> resonance{};   // l_i, um
};

// Endpoint coefficient sets plus the doping-to-coefficient interpolation
// calibration. Loaded from the plain-text coefficient file shipped under
// data/, or from the built-in copy of the same values.
struct SellmeierData {
    SellmeierModel silica;      // undoped endpoint
    SellmeierModel doped;       // doped endpoint (per unit mole fraction deltas applied via scale)
    double interpolation_scale = 1.0;  // calibrated against the delta-n anchor
};

// Built-in copy of data/sellmeier_ge_silica.txt.
const SellmeierData& default_sellmeier_data();

// Parse a coefficient file (documented key/value format, see data/).
SellmeierData parse_sellmeier_file(const std::string& path);

// Validated evaluation band [um]. The design sweeps stay inside it; the
// LP11 cutoff search uses the extended band below.
inline constexpr double kBandMin = 0.85;
inline constexpr double kBandMax = 1.40;

// Sellmeier validity range used by the cutoff solver, which must evaluate
// the models out to ~2.5 um. Malitson's silica fit is specified to 3.7 um.
inline constexpr double kExtendedBandMin = 0.50;
inline constexpr double kExtendedBandMax = 3.50;

class BandError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

// Linear interpolation of Sellmeier coefficients between the undoped and
// doped endpoints. Throws std::invalid_argument outside the validated
// composition range.
SellmeierModel sellmeier_for_composition(const GlassComposition& x,
                                         const SellmeierData& data = default_sellmeier_data());

// n(lambda) on the validated band; throws BandError outside it.
double refractive_index(const SellmeierModel& model, double lambda_um);

// Same evaluation on the extended band (cutoff solving).
double refractive_index_extended(const SellmeierModel& model, double lambda_um);

// Convenience: core/cladding index step at a wavelength.
double index_step(const GlassComposition& x, double lambda_um,
                  const SellmeierData& data = default_sellmeier_data());

}  // namespace fwmpair::material
