#include "covscale/cli.hpp"

#include <cmath>

#include "CLI11.hpp"
#include "covscale/format.hpp"
#include "covscale/measurement.hpp"
#include "covscale/scale_conversion.hpp"

namespace covscale::cli {
namespace {

Field num(std::string name, double v)
{
    return Field{std::move(name), v};
}

Field integer(std::string name, long long v)
{
    return Field{std::move(name), v};
}

Field text(std::string name, std::string v)
{
    return Field{std::move(name), std::move(v)};
}

constexpr const char* kClaimHelp =
    "Claimed relation, one of: dX'=r*dX, dX=r*dX', dX'=dX/r, dX=dX'/r, "
    "dT'=r*dT, dT=r*dT', dT'=dT/r, dT=dT'/r. Whitespace is ignored; the "
    "product may also be written r·dX or rdX.";

} // namespace

RunReport cmd_gamma(double beta)
{
    RelativeSpeed speed{beta};
    RunReport r{"gamma", {num("beta", beta)}, {num("gamma", gamma(speed).value())}, {}, {}};
    return r;
}

RunReport cmd_transform(const Event& e, double beta, Direction dir, bool check, double tolerance)
{
    RelativeSpeed speed{beta};
    Event in = Event::make(e.x, e.y, e.z, e.t);
    bool fwd = dir == Direction::forward;
    Event out = fwd ? lorentz_transform(in, speed) : inverse_transform(in, speed);

    const char* in_mark = fwd ? "" : "'";
    const char* out_mark = fwd ? "'" : "";
    auto name = [](const char* axis, const char* mark) {
        return std::string(axis) + mark;
    };

    RunReport r;
    r.command = "transform";
    r.inputs = {num(name("x", in_mark), in.x),
                num(name("y", in_mark), in.y),
                num(name("z", in_mark), in.z),
                num(name("t", in_mark), in.t),
                num("beta", beta),
                text("direction", fwd ? "lt" : "it")};
    r.results = {num(name("x", out_mark), out.x),
                 num(name("y", out_mark), out.y),
                 num(name("z", out_mark), out.z),
                 num(name("t", out_mark), out.t)};
    if (check)
    {
        double before = interval(in).value;
        double after = interval(out).value;
        double err = std::abs(after - before) / (1 + std::abs(before));
        r.results.push_back(num("interval_before", before));
        r.results.push_back(num("interval_after", after));
        r.checks.push_back({"interval_invariance", err <= tolerance, err, tolerance});
    }
    return r;
}

RunReport cmd_clock(double d, double c, double v, double tolerance)
{
    ClockGeometry g{d, c};
    ScaleReport rep = clock_report(g, v);
    double expected = gamma(RelativeSpeed{v / c}).value();
    double err = std::abs(rep.ratio.value() - expected) / expected;

    RunReport r;
    r.command = "clock";
    r.inputs = {num("d", d), num("c", c), num("v", v)};
    r.results = {num("t1", rep.stationary_period),
                 num("t2", rep.moving_period),
                 num("ratio", rep.ratio.value()),
                 num("gamma", expected)};
    r.checks.push_back({"ratio_equals_gamma", err <= tolerance, err, tolerance});
    return r;
}

RunReport cmd_linac(const LinacSpec& spec, bool with_speed, double tolerance)
{
    std::vector<LinacRow> rows = generate_table(spec);

    RunReport r;
    r.command = "linac";
    r.inputs = {num("length_km", spec.length_km),
                num("rest_energy_gev", spec.rest_energy_gev),
                num("base_scale_cm", spec.base_scale_cm)};

    Table t;
    t.columns = kLinacColumns;
    if (with_speed)
        t.columns.push_back("beta");
    for (const auto& row : rows)
    {
        std::vector<double> cells{row.kinetic_energy_gev,
                                  row.covarying_scale_size_cm,
                                  row.covarying_length_vcm,
                                  row.real_length_km};
        if (with_speed)
            cells.push_back(row.gamma.beta());
        t.rows.push_back(std::move(cells));
        t.row_checks.push_back({"product_invariance[K=" + format::shortest(row.kinetic_energy_gev) + "]",
                                row.product_relative_error <= tolerance,
                                row.product_relative_error,
                                tolerance});
    }
    r.table = std::move(t);
    return r;
}

RunReport cmd_mismatch(const std::string& condition,
                       const std::string& claim,
                       std::optional<double> beta)
{
    MeasurementCondition cond = parse_condition(condition);
    ClaimedForm form = parse_claimed_form(claim);
    RelativeSpeed speed{beta.value_or(0.0)};
    ParadigmVerdict v = diagnose_paradigm(cond, form, speed);
    const MeasurementRelation& rel = v.expected_relation;

    RunReport r;
    r.command = "mismatch";
    r.inputs = {text("condition", to_string(cond)), text("claim", to_string(form))};
    if (beta)
        r.inputs.push_back(num("beta", *beta));
    r.results = {text("verdict", v.classification == Verdict::matched ? "Matched" : "Mismatched"),
                 text("expected", to_string(rel)),
                 integer("equation", rel.equation_id),
                 text("stretched", to_string(rel.stretched)),
                 text("contracted_view_frame", to_string(rel.contracted_view_frame))};
    if (beta)
        r.results.push_back(num("factor", rel.factor.value()));
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lorentz transformations, light clocks and covarying scales (c = 1 unless stated)",
                 "covscale"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    int digits = 10;
    app.add_option("--format", format_name, "Output format: plain, csv or json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--digits", digits, "Significant digits for plain/csv scalars")
        ->check(CLI::Range(1, 17));

    // gamma
    double g_beta = 0;
    auto* g_cmd = app.add_subcommand("gamma", "Lorentz factor for a relative speed beta = v/c");
    g_cmd->add_option("beta", g_beta, "Relative speed, |beta| < 1")->required();

    // transform
    Event tr_event;
    double tr_beta = 0;
    std::string tr_dir = "lt";
    bool tr_check = false;
    double tr_tol = kDefaultIntervalTolerance;
    auto* tr_cmd = app.add_subcommand("transform", "Boost an event along x (lt: F -> F', it: F' -> F)");
    tr_cmd->add_option("--x", tr_event.x, "Longitudinal coordinate")->required();
    tr_cmd->add_option("--t", tr_event.t, "Time coordinate")->required();
    tr_cmd->add_option("--y", tr_event.y, "Transverse coordinate");
    tr_cmd->add_option("--z", tr_event.z, "Transverse coordinate");
    tr_cmd->add_option("--beta", tr_beta, "Relative speed, |beta| < 1")->required();
    tr_cmd->add_option("direction", tr_dir, "lt or it")->check(CLI::IsMember({"lt", "it"}));
    tr_cmd->add_flag("--check", tr_check, "Also report the interval before and after");
    tr_cmd->add_option("--tol", tr_tol, "Relative tolerance for --check")->check(CLI::NonNegativeNumber);

    // clock
    double ck_d = 0, ck_c = 0, ck_v = 0;
    double ck_tol = kDefaultRatioTolerance;
    auto* ck_cmd = app.add_subcommand("clock", "Light-clock periods t1 = 2d/c, t2 = 2d/sqrt(c^2 - v^2) and their ratio");
    ck_cmd->add_option("--d", ck_d, "Emitter-to-mirror distance")->required();
    ck_cmd->add_option("--c", ck_c, "Light speed, same length unit as d")->required();
    ck_cmd->add_option("--v", ck_v, "Clock speed, 0 <= v < c")->required();
    ck_cmd->add_option("--tol", ck_tol, "Relative tolerance for ratio == gamma(v/c)")->check(CLI::NonNegativeNumber);

    // linac
    LinacSpec spec;
    bool lc_full = false;
    bool lc_speed = false;
    double lc_tol = kDefaultProductTolerance;
    auto* lc_cmd = app.add_subcommand("linac", "Covarying scale and length table for a fixed-length accelerator");
    lc_cmd->add_option("--length-km", spec.length_km, "Accelerator length in km")->capture_default_str();
    lc_cmd->add_option("--rest-energy-gev", spec.rest_energy_gev, "Particle rest energy m c^2 in GeV")->capture_default_str();
    lc_cmd->add_option("--base-scale-cm", spec.base_scale_cm, "Invariant measuring unit in cm")->capture_default_str();
    lc_cmd->add_option("--energies", spec.energies_gev, "Kinetic energies in GeV")->expected(0, -1);
    lc_cmd->add_flag("--full-precision", lc_full, "Print table cells at full precision instead of 2 decimals");
    lc_cmd->add_flag("--speed", lc_speed, "Add a beta column recovered from gamma");
    lc_cmd->add_option("--tol", lc_tol, "Relative tolerance for the product check")->check(CLI::NonNegativeNumber);

    // mismatch
    std::string mm_cond, mm_claim;
    std::optional<double> mm_beta;
    auto* mm_cmd = app.add_subcommand("mismatch", "Check a claimed length/time relation against a measurement condition");
    mm_cmd->add_option("--cond", mm_cond, "Condition: dT=0, dT'=0, dX=0 or dX'=0")->required();
    mm_cmd->add_option("--claim", mm_claim, kClaimHelp)->required();
    mm_cmd->add_option("--beta", mm_beta, "Optional relative speed to evaluate the factor");

    for (auto* sub : {g_cmd, tr_cmd, ck_cmd, lc_cmd, mm_cmd})
        sub->fallthrough();

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.push_back("covscale");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp& e)
    {
        app.exit(e, out, err);
        return kSuccess;
    }
    catch (const CLI::CallForAllHelp& e)
    {
        app.exit(e, out, err);
        return kSuccess;
    }
    catch (const CLI::ParseError& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    EmitOptions opts;
    opts.digits = digits;
    try
    {
        opts.format = parse_output_format(format_name);

        RunReport report;
        if (*g_cmd)
        {
            report = cmd_gamma(g_beta);
        }
        else if (*tr_cmd)
        {
            report = cmd_transform(tr_event, tr_beta,
                                   tr_dir == "it" ? Direction::inverse : Direction::forward,
                                   tr_check, tr_tol);
        }
        else if (*ck_cmd)
        {
            report = cmd_clock(ck_d, ck_c, ck_v, ck_tol);
        }
        else if (*lc_cmd)
        {
            if (lc_full)
                opts.table_decimals = -1;
            report = cmd_linac(spec, lc_speed, lc_tol);
        }
        else
        {
            report = cmd_mismatch(mm_cond, mm_claim, mm_beta);
        }

        emit(report, opts, out);
        return report.all_passed() ? kSuccess : kCheckFailed;
    }
    catch (const DomainError& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const ComputationError& e)
    {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

} // namespace covscale::cli
