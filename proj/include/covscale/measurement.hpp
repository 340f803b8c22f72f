#ifndef COVSCALE_MEASUREMENT_HPP
#define COVSCALE_MEASUREMENT_HPP

#include <string>
#include <string_view>

#include "covscale/kinematics.hpp"

namespace covscale {

/// A pair of differentials (dx, dt) in one frame, natural units.
struct DifferentialPair
{
    double dx{0};
    double dt{0};

    static DifferentialPair make(double dx, double dt);

    bool operator==(const DifferentialPair&) const = default;
};

/// dX' = r(dX - V dT), dT' = r(dT - V dX)
DifferentialPair lt_differential(DifferentialPair d, RelativeSpeed speed);
/// dX = r(dX' + V dT'), dT = r(dT' + V dX')
DifferentialPair it_differential(DifferentialPair d_prime, RelativeSpeed speed);

enum class Frame
{
    rest,   ///< F(X,T), at rest with the observer
    moving, ///< F'(X',T')
};

enum class Differential
{
    dx,
    dx_prime,
    dt,
    dt_prime,
};

/// Which differential is zeroed before reading a relation.
enum class MeasurementCondition
{
    simultaneous_in_f,       ///< dT = 0
    simultaneous_in_f_prime, ///< dT' = 0
    local_in_f,              ///< dX = 0
    local_in_f_prime,        ///< dX' = 0
};

/**
 * A relation of the form `stretched = r * base`.
 *
 * The contracted view frame is the frame owning `base`: the reading that
 * appears contracted there can only be inferred through the inverse
 * transformation, never observed directly in the rest frame.
 */
struct MeasurementRelation
{
    MeasurementCondition condition;
    Differential stretched;
    Differential base;
    LorentzFactor factor;
    int equation_id;
    Frame contracted_view_frame;
};

/**
 * The four special cases of the differential transformations:
 *
 *   dT  = 0  -> (11) dX' = r dX
 *   dT' = 0  -> (12) dX  = r dX'
 *   dX  = 0  -> (13) dT' = r dT
 *   dX' = 0  -> (14) dT  = r dT'
 *
 * Cases 11 and 13 come from the forward transformation, 12 and 14 from the
 * inverse one; the pairs mirror each other under exchanging the frames.
 */
MeasurementRelation relation_for(MeasurementCondition cond, RelativeSpeed speed);

/// One of the eight canonical relation forms accepted by the diagnoser.
enum class ClaimedForm
{
    dx_prime_eq_r_dx,  ///< dX'=r*dX
    dx_eq_r_dx_prime,  ///< dX=r*dX'
    dx_prime_eq_dx_over_r, ///< dX'=dX/r
    dx_eq_dx_prime_over_r, ///< dX=dX'/r
    dt_prime_eq_r_dt,
    dt_eq_r_dt_prime,
    dt_prime_eq_dt_over_r,
    dt_eq_dt_prime_over_r,
};

/// Parse error for conditions and claimed forms; the message lists the
/// accepted spellings.
class FormParseError : public DomainError
{
  public:
    using DomainError::DomainError;
};

/// Accepts "dT=0", "dT'=0", "dX=0", "dX'=0" (whitespace ignored).
MeasurementCondition parse_condition(std::string_view text);

/**
 * Accepts the canonical forms with whitespace ignored. The product may be
 * written `r*dX`, `r·dX` or `rdX`; the quotient as `dX/r`.
 */
ClaimedForm parse_claimed_form(std::string_view text);

std::string to_string(MeasurementCondition cond);
std::string to_string(ClaimedForm form);
std::string to_string(Differential d);
std::string to_string(Frame f);
/// Canonical text of a relation, e.g. "dX'=r*dX".
std::string to_string(const MeasurementRelation& rel);

/// The canonical form stating `rel`.
ClaimedForm canonical_form_of(const MeasurementRelation& rel) noexcept;

enum class Verdict
{
    matched,
    mismatched,
};

struct ParadigmVerdict
{
    Verdict classification;
    MeasurementRelation expected_relation;
    ClaimedForm claimed_form;
};

/**
 * Compare a claimed relation against the one implied by the condition.
 *
 * A claim is matched when it states the same stretched/base pairing as
 * relation_for(cond), in either the product or the equivalent quotient
 * spelling. "dX'=dX/r" under dT=0 is the classic mismatch.
 */
ParadigmVerdict
diagnose_paradigm(MeasurementCondition cond, ClaimedForm claimed, RelativeSpeed speed);
ParadigmVerdict diagnose_paradigm(MeasurementCondition cond,
                                  std::string_view claimed,
                                  RelativeSpeed speed);

} // namespace covscale

#endif
