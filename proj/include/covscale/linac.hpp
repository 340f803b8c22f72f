#ifndef COVSCALE_LINAC_HPP
#define COVSCALE_LINAC_HPP

#include <vector>

#include "covscale/kinematics.hpp"

namespace covscale {

inline constexpr double kCmPerKm = 1e5;

/// Electron rest energy m c^2 in GeV, the constant that reproduces the
/// 3 km linac table.
inline constexpr double kElectronRestEnergyGeV = 0.000511;

struct LinacSpec
{
    double length_km{3};
    double rest_energy_gev{kElectronRestEnergyGeV};
    double base_scale_cm{1};
    std::vector<double> energies_gev{50, 40, 30, 20, 10};

    /// Throws DomainError unless length, rest energy and base scale are
    /// positive and finite and every energy is finite and >= 0.
    void validate() const;
};

struct LinacRow
{
    double kinetic_energy_gev;
    LorentzFactor gamma;
    double covarying_scale_size_cm; // real cm, base scale * gamma
    double covarying_length_vcm;    // virtual cm, length in base units / gamma
    double real_length_km;          // scale size * covarying length, in km
    double product_relative_error;  // |real_length_km - length_km| / length_km
};

/// K = m c^2 (r - 1) solved for r. Rejects K < 0 and rest_energy <= 0.
LorentzFactor gamma_from_kinetic(double kinetic_energy, double rest_energy);

LinacRow table_row(const LinacSpec& spec, double kinetic_energy_gev);

/// One row per energy, in input order. Rows are computed in parallel.
std::vector<LinacRow> generate_table(const LinacSpec& spec);

namespace serial {
std::vector<LinacRow> generate_table(const LinacSpec& spec);
} // namespace serial

} // namespace covscale

#endif
