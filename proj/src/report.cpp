#include "covscale/report.hpp"

#include <algorithm>

#include "covscale/format.hpp"
#include "covscale/kinematics.hpp"
#include "json.hpp"

namespace covscale {
namespace {

using nlohmann::ordered_json;

std::string scalar_text(const Field& f, int digits)
{
    if (const auto* d = std::get_if<double>(&f.value))
        return format::significant(*d, digits);
    if (const auto* n = std::get_if<long long>(&f.value))
        return std::to_string(*n);
    return std::get<std::string>(f.value);
}

std::string cell_text(double v, const EmitOptions& opts)
{
    return opts.table_decimals < 0 ? format::shortest(v)
                                   : format::fixed_half_up(v, opts.table_decimals);
}

std::string check_line(const Check& c)
{
    return c.name + ": " + (c.passed ? "PASS" : "FAIL") + " (error "
           + format::significant(c.error, 3) + ", tolerance "
           + format::shortest(c.tolerance) + ")";
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

void emit_plain(const RunReport& r, const EmitOptions& opts, std::ostream& os)
{
    os << "[" << r.command << "]\n";
    auto section = [&](const char* title, const std::vector<Field>& fields) {
        if (fields.empty())
            return;
        std::size_t width = 0;
        for (const auto& f : fields)
            width = std::max(width, f.name.size());
        os << title << ":\n";
        for (const auto& f : fields)
        {
            os << "  " << f.name << std::string(width - f.name.size(), ' ')
               << " = " << scalar_text(f, opts.digits) << '\n';
        }
    };
    section("inputs", r.inputs);
    section("results", r.results);

    if (r.table)
    {
        const Table& t = *r.table;
        std::vector<std::vector<std::string>> cells;
        std::vector<std::size_t> width;
        for (const auto& c : t.columns)
            width.push_back(c.size());
        for (const auto& row : t.rows)
        {
            auto& out = cells.emplace_back();
            for (std::size_t j = 0; j < row.size(); ++j)
            {
                out.push_back(cell_text(row[j], opts));
                width[j] = std::max(width[j], out.back().size());
            }
        }
        bool has_checks = t.row_checks.size() == t.rows.size();
        os << "table:\n ";
        for (std::size_t j = 0; j < t.columns.size(); ++j)
            os << ' ' << std::string(width[j] - t.columns[j].size(), ' ')
               << t.columns[j];
        if (has_checks)
            os << "  check";
        os << '\n';
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            os << ' ';
            for (std::size_t j = 0; j < cells[i].size(); ++j)
                os << ' ' << std::string(width[j] - cells[i][j].size(), ' ')
                   << cells[i][j];
            if (has_checks)
                os << "  " << (t.row_checks[i].passed ? "PASS" : "FAIL");
            os << '\n';
        }
    }

    std::vector<Check> all = r.checks;
    if (r.table)
        all.insert(all.end(), r.table->row_checks.begin(), r.table->row_checks.end());
    if (!all.empty())
    {
        os << "checks:\n";
        for (const auto& c : all)
            os << "  " << check_line(c) << '\n';
    }
}

void emit_csv(const RunReport& r, const EmitOptions& opts, std::ostream& os)
{
    if (r.table)
    {
        const Table& t = *r.table;
        for (std::size_t j = 0; j < t.columns.size(); ++j)
            os << (j ? "," : "") << csv_escape(t.columns[j]);
        os << '\n';
        for (const auto& row : t.rows)
        {
            for (std::size_t j = 0; j < row.size(); ++j)
                os << (j ? "," : "") << cell_text(row[j], opts);
            os << '\n';
        }
        return;
    }

    os << "section,name,value\n";
    for (const auto& f : r.inputs)
        os << "input," << csv_escape(f.name) << ',' << csv_escape(scalar_text(f, opts.digits)) << '\n';
    for (const auto& f : r.results)
        os << "result," << csv_escape(f.name) << ',' << csv_escape(scalar_text(f, opts.digits)) << '\n';
    for (const auto& c : r.checks)
        os << "check," << csv_escape(c.name) << ',' << (c.passed ? "PASS" : "FAIL") << '\n';
}

ordered_json to_json(const Field& f)
{
    if (const auto* d = std::get_if<double>(&f.value))
        return *d;
    if (const auto* n = std::get_if<long long>(&f.value))
        return *n;
    return std::get<std::string>(f.value);
}

ordered_json to_json(const Check& c)
{
    ordered_json j;
    j["name"] = c.name;
    j["passed"] = c.passed;
    j["error"] = c.error;
    j["tolerance"] = c.tolerance;
    return j;
}

void emit_json(const RunReport& r, std::ostream& os)
{
    ordered_json j;
    j["command"] = r.command;
    j["inputs"] = ordered_json::object();
    for (const auto& f : r.inputs)
        j["inputs"][f.name] = to_json(f);
    j["results"] = ordered_json::object();
    for (const auto& f : r.results)
        j["results"][f.name] = to_json(f);
    if (r.table)
    {
        const Table& t = *r.table;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < t.rows.size(); ++i)
        {
            ordered_json row;
            for (std::size_t k = 0; k < t.columns.size(); ++k)
                row[t.columns[k]] = t.rows[i][k];
            if (i < t.row_checks.size())
                row["check"] = to_json(t.row_checks[i]);
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
    }
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back(to_json(c));
    j["passed"] = r.all_passed();
    os << j.dump(2) << '\n';
}

} // namespace

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "plain")
        return OutputFormat::plain;
    if (text == "csv")
        return OutputFormat::csv;
    if (text == "json")
        return OutputFormat::json;
    throw DomainError("format must be one of plain, csv, json");
}

bool RunReport::all_passed() const noexcept
{
    auto ok = [](const Check& c) { return c.passed; };
    bool rows_ok = !table || std::all_of(table->row_checks.begin(), table->row_checks.end(), ok);
    return rows_ok && std::all_of(checks.begin(), checks.end(), ok);
}

void emit(const RunReport& report, const EmitOptions& opts, std::ostream& os)
{
    switch (opts.format)
    {
        case OutputFormat::plain:
            emit_plain(report, opts, os);
            break;
        case OutputFormat::csv:
            emit_csv(report, opts, os);
            break;
        case OutputFormat::json:
            emit_json(report, os);
            break;
    }
}

} // namespace covscale
