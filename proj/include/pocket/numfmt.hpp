#pragma once

#include <string>

namespace pocket {

/// Shortest decimal text with at most 12 significant digits ("%.12g"),
/// with negative zero printed as "0". Used for every number the CLI emits.
std::string format_number(double value);

/// The double that format_number(value) denotes.
double round_significant(double value);

}  // namespace pocket
