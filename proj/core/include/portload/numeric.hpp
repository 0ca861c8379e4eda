#pragma once

#include <span>
#include <string>

namespace portload {

/// Sum with a single rounding at the end: returns the double nearest the
/// exact real sum of the inputs, independent of their order. Used wherever
/// curves are superposed so that totals do not drift with summation order.
double exact_sum(std::span<const double> values);

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

}  // namespace portload
