#pragma once

#include <string>

#include "tcvol/model.hpp"

namespace tcvol {

// Reads `index,log_price` or `t,log_price` CSV (UTF-8, LF or CRLF). Rows must
// be sorted and equally spaced; with a t column, spacing is verified to 1e-9
// relative. Missing or non-finite values raise data_error naming the row.
ObservationSeries ingest_csv(const std::string& path);

// Writes `index,log_price` with 17 significant digits, so a read/write
// round trip is byte-identical.
void write_series_csv(const std::string& path, const ObservationSeries& series);

// Formats a double with up to 17 significant digits (round-trip safe).
std::string format_double(double x);

}  // namespace tcvol
