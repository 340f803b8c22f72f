#ifndef COVSCALE_FORMAT_HPP
#define COVSCALE_FORMAT_HPP

#include <string>

// Locale-independent number text. Everything goes through std::to_chars, so
// the decimal separator is always '.' and there are no grouping characters.

namespace covscale::format {

/// Shortest text that round-trips to the same double.
std::string shortest(double value);

/// At most `digits` significant digits, trailing zeros dropped ("1.25", "1").
std::string significant(double value, int digits);

/**
 * Fixed notation with exactly `decimals` places, rounding half away from
 * zero on the shortest decimal representation of `value`.
 *
 * Rounding the shortest text rather than the binary value means 0.125 -> 0.13
 * and 2.675 -> 2.68, which is what a reader doing the arithmetic by hand
 * expects.
 */
std::string fixed_half_up(double value, int decimals);

} // namespace covscale::format

#endif
