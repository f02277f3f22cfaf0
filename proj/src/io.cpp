#include "tcvol/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "tcvol/errors.hpp"

namespace tcvol {

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

double parse_field(const std::string& field, int row, const char* what) {
    if (field.empty()) {
        std::ostringstream os;
        os << "CSV row " << row << ": missing " << what;
        throw data_error(os.str());
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &pos);
    } catch (const std::exception&) {
        std::ostringstream os;
        os << "CSV row " << row << ": cannot parse " << what << " '" << field << "'";
        throw data_error(os.str());
    }
    if (pos != field.size()) {
        std::ostringstream os;
        os << "CSV row " << row << ": trailing characters in " << what << " '" << field
           << "'";
        throw data_error(os.str());
    }
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "CSV row " << row << ": non-finite " << what;
        throw data_error(os.str());
    }
    return v;
}

}  // namespace

ObservationSeries ingest_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open CSV file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw data_error("empty CSV file: " + path);
    line = strip_cr(line);

    bool has_time;
    if (line == "index,log_price")
        has_time = false;
    else if (line == "t,log_price")
        has_time = true;
    else
        throw data_error("CSV header must be 'index,log_price' or 't,log_price', got '" +
                         line + "'");

    ObservationSeries series;
    std::vector<double> times;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = strip_cr(line);
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos) {
            std::ostringstream os;
            os << "CSV row " << row << ": expected two comma-separated fields";
            throw data_error(os.str());
        }
        const double first = parse_field(line.substr(0, comma), row,
                                         has_time ? "time" : "index");
        const double price = parse_field(line.substr(comma + 1), row, "log_price");
        if (has_time)
            times.push_back(first);
        else if (first != static_cast<double>(series.y.size())) {
            std::ostringstream os;
            os << "CSV row " << row << ": index " << first << " out of order, expected "
               << series.y.size();
            throw data_error(os.str());
        }
        series.y.push_back(price);
    }
    if (series.y.size() < 2) throw data_error("CSV must contain at least two rows");

    if (has_time) {
        const double dt0 = times[1] - times[0];
        if (!(dt0 > 0.0)) throw data_error("CSV rows must be sorted by increasing time");
        for (std::size_t j = 2; j < times.size(); ++j) {
            const double dt = times[j] - times[j - 1];
            if (std::abs(dt - dt0) > 1e-9 * std::abs(dt0)) {
                std::ostringstream os;
                os << "CSV row " << (j + 2) << ": unequal time spacing, step " << dt
                   << " vs " << dt0;
                throw data_error(os.str());
            }
        }
    }
    return series;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_series_csv(const std::string& path, const ObservationSeries& series) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open output file: " + path);
    out << "index,log_price\n";
    for (std::size_t j = 0; j < series.y.size(); ++j)
        out << j << ',' << format_double(series.y[j]) << '\n';
    if (!out) throw data_error("failed writing output file: " + path);
}

}  // namespace tcvol
