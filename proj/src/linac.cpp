#include "covscale/linac.hpp"

#include <cmath>
#include <cstddef>

namespace covscale {
namespace {

bool positive_finite(double v)
{
    return std::isfinite(v) && v > 0;
}

// Spec must already be validated.
LinacRow compute_row(const LinacSpec& spec, double k)
{
    LorentzFactor r = gamma_from_kinetic(k, spec.rest_energy_gev);
    double base_units = spec.length_km * kCmPerKm / spec.base_scale_cm;

    LinacRow row{k, r, 0, 0, 0, 0};
    row.covarying_scale_size_cm = spec.base_scale_cm * r.value();
    row.covarying_length_vcm = base_units / r.value();
    row.real_length_km = row.covarying_scale_size_cm * row.covarying_length_vcm
                         / kCmPerKm;
    row.product_relative_error = std::abs(row.real_length_km - spec.length_km)
                                 / spec.length_km;
    return row;
}

} // namespace

void LinacSpec::validate() const
{
    if (!positive_finite(length_km))
        throw DomainError("accelerator length must be positive and finite");
    if (!positive_finite(rest_energy_gev))
        throw DomainError("rest energy must be positive and finite");
    if (!positive_finite(base_scale_cm))
        throw DomainError("base scale must be positive and finite");
    for (double k : energies_gev)
    {
        if (!(std::isfinite(k) && k >= 0))
            throw DomainError("kinetic energies must be finite and >= 0");
    }
}

LorentzFactor gamma_from_kinetic(double kinetic_energy, double rest_energy)
{
    if (!(std::isfinite(kinetic_energy) && kinetic_energy >= 0))
        throw DomainError("kinetic energy must be finite and >= 0");
    if (!positive_finite(rest_energy))
        throw DomainError("rest energy must be positive and finite");

    double r = 1.0 + kinetic_energy / rest_energy;
    if (!std::isfinite(r))
        throw ComputationError("Lorentz factor overflowed");
    return LorentzFactor{r};
}

LinacRow table_row(const LinacSpec& spec, double kinetic_energy_gev)
{
    spec.validate();
    return compute_row(spec, kinetic_energy_gev);
}

std::vector<LinacRow> generate_table(const LinacSpec& spec)
{
    spec.validate();
    const auto n = static_cast<std::ptrdiff_t>(spec.energies_gev.size());
    std::vector<LinacRow> rows(spec.energies_gev.size(),
                               compute_row(spec, 0));

    // Exceptions cannot leave the parallel region; record the first index
    // that overflowed and rethrow it serially below.
    std::ptrdiff_t bad = n;
#pragma omp parallel for reduction(min : bad) if (n > 4096)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        try
        {
            rows[i] = compute_row(spec, spec.energies_gev[i]);
        }
        catch (const ComputationError&)
        {
            bad = i < bad ? i : bad;
        }
    }
    if (bad < n)
    {
        compute_row(spec, spec.energies_gev[bad]);
    }
    return rows;
}

namespace serial {

std::vector<LinacRow> generate_table(const LinacSpec& spec)
{
    spec.validate();
    std::vector<LinacRow> rows;
    rows.reserve(spec.energies_gev.size());
    for (double k : spec.energies_gev)
    {
        rows.push_back(compute_row(spec, k));
    }
    return rows;
}

} // namespace serial
} // namespace covscale
