#ifndef COVSCALE_REPORT_HPP
#define COVSCALE_REPORT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace covscale {

enum class OutputFormat
{
    plain,
    csv,
    json,
};

/// Throws DomainError for anything other than plain, csv or json.
OutputFormat parse_output_format(std::string_view text);

struct Field
{
    std::string name;
    std::variant<double, long long, std::string> value;
};

struct Check
{
    std::string name;
    bool passed;
    double error;
    double tolerance;
};

/// Numeric table; `columns` doubles as the CSV header.
struct Table
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    /// Per-row check, same length as rows when present.
    std::vector<Check> row_checks;
};

struct RunReport
{
    std::string command;
    std::vector<Field> inputs;
    std::vector<Field> results;
    std::optional<Table> table;
    std::vector<Check> checks;

    bool all_passed() const noexcept;
};

struct EmitOptions
{
    OutputFormat format{OutputFormat::plain};
    /// Significant digits for plain and CSV scalars.
    int digits{10};
    /// Decimal places for table cells; negative means shortest round-trip.
    int table_decimals{2};
};

void emit(const RunReport& report, const EmitOptions& opts, std::ostream& os);

} // namespace covscale

#endif
