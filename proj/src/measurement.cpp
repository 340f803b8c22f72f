#include "covscale/measurement.hpp"

#include <array>
#include <cctype>
#include <cmath>

namespace covscale {
namespace {

struct FormInfo
{
    ClaimedForm form;
    std::string_view text;
    // Normalized meaning: stretched = r * base
    Differential stretched;
    Differential base;
};

constexpr std::array<FormInfo, 8> kForms{{
    {ClaimedForm::dx_prime_eq_r_dx, "dX'=r*dX", Differential::dx_prime, Differential::dx},
    {ClaimedForm::dx_eq_r_dx_prime, "dX=r*dX'", Differential::dx, Differential::dx_prime},
    {ClaimedForm::dx_prime_eq_dx_over_r, "dX'=dX/r", Differential::dx, Differential::dx_prime},
    {ClaimedForm::dx_eq_dx_prime_over_r, "dX=dX'/r", Differential::dx_prime, Differential::dx},
    {ClaimedForm::dt_prime_eq_r_dt, "dT'=r*dT", Differential::dt_prime, Differential::dt},
    {ClaimedForm::dt_eq_r_dt_prime, "dT=r*dT'", Differential::dt, Differential::dt_prime},
    {ClaimedForm::dt_prime_eq_dt_over_r, "dT'=dT/r", Differential::dt, Differential::dt_prime},
    {ClaimedForm::dt_eq_dt_prime_over_r, "dT=dT'/r", Differential::dt_prime, Differential::dt},
}};

const FormInfo& info(ClaimedForm form)
{
    return kForms[static_cast<std::size_t>(form)];
}

// Strip whitespace and fold the product spellings "r·dX" and "rdX" to "r*dX".
std::string normalize(std::string_view text)
{
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c))
            continue;
        // U+00B7 middle dot (UTF-8 C2 B7) and U+22C5 dot operator (E2 8B 85)
        if (c == 0xC2 && i + 1 < text.size()
            && static_cast<unsigned char>(text[i + 1]) == 0xB7)
        {
            out += '*';
            ++i;
            continue;
        }
        if (c == 0xE2 && i + 2 < text.size()
            && static_cast<unsigned char>(text[i + 1]) == 0x8B
            && static_cast<unsigned char>(text[i + 2]) == 0x85)
        {
            out += '*';
            i += 2;
            continue;
        }
        out += static_cast<char>(c);
    }
    // "rdX" -> "r*dX"
    auto eq = out.find('=');
    if (eq != std::string::npos && out.compare(eq + 1, 2, "rd") == 0)
    {
        out.insert(eq + 2, 1, '*');
    }
    return out;
}

} // namespace

DifferentialPair DifferentialPair::make(double dx, double dt)
{
    if (!std::isfinite(dx) || !std::isfinite(dt))
    {
        throw DomainError("differentials must be finite");
    }
    return DifferentialPair{dx, dt};
}

DifferentialPair lt_differential(DifferentialPair d, RelativeSpeed speed)
{
    // The transformation is linear, so differentials boost like coordinates.
    Event e = lorentz_transform(Event{d.dx, 0, 0, d.dt}, speed);
    return DifferentialPair{e.x, e.t};
}

DifferentialPair it_differential(DifferentialPair d_prime, RelativeSpeed speed)
{
    Event e = inverse_transform(Event{d_prime.dx, 0, 0, d_prime.dt}, speed);
    return DifferentialPair{e.x, e.t};
}

MeasurementRelation relation_for(MeasurementCondition cond, RelativeSpeed speed)
{
    LorentzFactor r = gamma(speed);
    switch (cond)
    {
        case MeasurementCondition::simultaneous_in_f:
            return {cond, Differential::dx_prime, Differential::dx, r, 11, Frame::rest};
        case MeasurementCondition::simultaneous_in_f_prime:
            return {cond, Differential::dx, Differential::dx_prime, r, 12, Frame::moving};
        case MeasurementCondition::local_in_f:
            return {cond, Differential::dt_prime, Differential::dt, r, 13, Frame::rest};
        case MeasurementCondition::local_in_f_prime:
            return {cond, Differential::dt, Differential::dt_prime, r, 14, Frame::moving};
    }
    throw DomainError("unknown measurement condition");
}

MeasurementCondition parse_condition(std::string_view text)
{
    std::string s = normalize(text);
    if (s == "dT=0")
        return MeasurementCondition::simultaneous_in_f;
    if (s == "dT'=0")
        return MeasurementCondition::simultaneous_in_f_prime;
    if (s == "dX=0")
        return MeasurementCondition::local_in_f;
    if (s == "dX'=0")
        return MeasurementCondition::local_in_f_prime;
    throw FormParseError("unrecognized condition '" + std::string(text)
                         + "'; accepted: dT=0, dT'=0, dX=0, dX'=0");
}

ClaimedForm parse_claimed_form(std::string_view text)
{
    std::string s = normalize(text);
    for (const auto& f : kForms)
    {
        if (s == f.text)
            return f.form;
    }
    std::string accepted;
    for (const auto& f : kForms)
    {
        if (!accepted.empty())
            accepted += ", ";
        accepted += f.text;
    }
    throw FormParseError("unrecognized relation '" + std::string(text)
                         + "'; accepted: " + accepted);
}

std::string to_string(MeasurementCondition cond)
{
    switch (cond)
    {
        case MeasurementCondition::simultaneous_in_f:
            return "dT=0";
        case MeasurementCondition::simultaneous_in_f_prime:
            return "dT'=0";
        case MeasurementCondition::local_in_f:
            return "dX=0";
        case MeasurementCondition::local_in_f_prime:
            return "dX'=0";
    }
    return "?";
}

std::string to_string(ClaimedForm form)
{
    return std::string(info(form).text);
}

std::string to_string(Differential d)
{
    switch (d)
    {
        case Differential::dx:
            return "dX";
        case Differential::dx_prime:
            return "dX'";
        case Differential::dt:
            return "dT";
        case Differential::dt_prime:
            return "dT'";
    }
    return "?";
}

std::string to_string(Frame f)
{
    return f == Frame::rest ? "F" : "F'";
}

std::string to_string(const MeasurementRelation& rel)
{
    return to_string(rel.stretched) + "=r*" + to_string(rel.base);
}

ClaimedForm canonical_form_of(const MeasurementRelation& rel) noexcept
{
    for (const auto& f : kForms)
    {
        // Each product spelling precedes its equivalent quotient.
        if (f.stretched == rel.stretched && f.base == rel.base)
            return f.form;
    }
    return ClaimedForm::dx_prime_eq_r_dx;
}

ParadigmVerdict
diagnose_paradigm(MeasurementCondition cond, ClaimedForm claimed, RelativeSpeed speed)
{
    MeasurementRelation expected = relation_for(cond, speed);
    const FormInfo& f = info(claimed);
    bool same = f.stretched == expected.stretched && f.base == expected.base;
    return ParadigmVerdict{same ? Verdict::matched : Verdict::mismatched,
                           expected,
                           claimed};
}

ParadigmVerdict diagnose_paradigm(MeasurementCondition cond,
                                  std::string_view claimed,
                                  RelativeSpeed speed)
{
    return diagnose_paradigm(cond, parse_claimed_form(claimed), speed);
}

} // namespace covscale
