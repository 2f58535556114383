#pragma once

#include <iosfwd>
#include <string>

#include "ufmt/series.hpp"

namespace ufmt {

// Coefficient file format "ufmt1": a header line `ufmt1`, then one
// coefficient per line as `re im` (index 0 first), printed with 17
// significant digits so that write/read round-trips bit-exactly.

CoefficientSeries read_series(std::istream& in, const std::string& name);
CoefficientSeries read_series_file(const std::string& path);
void write_series(std::ostream& out, const CoefficientSeries& s);
void write_series_file(const std::string& path, const CoefficientSeries& s);

/// Shortest-faithful decimal: 17 significant digits.
std::string format_double(double v);

}  // namespace ufmt
