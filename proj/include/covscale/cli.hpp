#ifndef COVSCALE_CLI_HPP
#define COVSCALE_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "covscale/kinematics.hpp"
#include "covscale/linac.hpp"
#include "covscale/report.hpp"
#include "covscale/sweep.hpp"

namespace covscale::cli {

/// Process exit codes.
enum ExitCode : int
{
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
};

inline constexpr double kDefaultIntervalTolerance = 1e-9;
inline constexpr double kDefaultRatioTolerance = 1e-12;
inline constexpr double kDefaultProductTolerance = 1e-12;

inline const std::vector<std::string> kLinacColumns{
    "kinetic_energy_gev",
    "covarying_scale_size_cm",
    "covarying_length_vcm",
    "real_length_km",
};

RunReport cmd_gamma(double beta);
RunReport cmd_transform(const Event& e,
                        double beta,
                        Direction dir,
                        bool check,
                        double tolerance = kDefaultIntervalTolerance);
RunReport cmd_clock(double d, double c, double v,
                    double tolerance = kDefaultRatioTolerance);
RunReport cmd_linac(const LinacSpec& spec,
                    bool with_speed = false,
                    double tolerance = kDefaultProductTolerance);
RunReport cmd_mismatch(const std::string& condition,
                       const std::string& claim,
                       std::optional<double> beta = std::nullopt);

/// Parse `args` (without the program name), run the subcommand and write the
/// report to `out`; diagnostics go to `err`. Returns an ExitCode value.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace covscale::cli

#endif
