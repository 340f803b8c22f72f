#include "covscale/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace covscale::format {
namespace {

template<class... Args>
std::string to_chars_string(double value, Args... args)
{
    std::array<char, 512> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, args...);
    if (ec != std::errc{})
        throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), end);
}

std::string non_finite(double value)
{
    if (std::isnan(value))
        return "nan";
    return value < 0 ? "-inf" : "inf";
}

} // namespace

std::string shortest(double value)
{
    if (!std::isfinite(value))
        return non_finite(value);
    if (value == 0)
        return "0";
    return to_chars_string(value);
}

std::string significant(double value, int digits)
{
    if (!std::isfinite(value))
        return non_finite(value);
    if (value == 0)
        return "0";
    if (digits < 1)
        digits = 1;
    return to_chars_string(value, std::chars_format::general, digits);
}

std::string fixed_half_up(double value, int decimals)
{
    if (!std::isfinite(value))
        return non_finite(value);
    if (decimals < 0)
        decimals = 0;

    std::string text = to_chars_string(std::abs(value), std::chars_format::fixed);
    auto dot = text.find('.');
    std::string int_part = dot == std::string::npos ? text : text.substr(0, dot);
    std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);

    bool round_up = frac.size() > static_cast<std::size_t>(decimals)
                    && frac[decimals] >= '5';
    frac.resize(decimals, '0');

    std::string digits = int_part + frac;
    if (round_up)
    {
        int i = static_cast<int>(digits.size()) - 1;
        for (; i >= 0; --i)
        {
            if (digits[i] == '9')
            {
                digits[i] = '0';
            }
            else
            {
                ++digits[i];
                break;
            }
        }
        if (i < 0)
            digits.insert(digits.begin(), '1');
    }

    std::string out = digits.substr(0, digits.size() - decimals);
    if (decimals > 0)
        out += '.' + digits.substr(digits.size() - decimals);

    bool is_zero = out.find_first_not_of("0.") == std::string::npos;
    if (value < 0 && !is_zero)
        out.insert(out.begin(), '-');
    return out;
}

} // namespace covscale::format
