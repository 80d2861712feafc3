#pragma once

#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc {

/// Shortest round-trip decimal form (17 significant digits).
inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Named columns of equal length -> CSV with a header row. Plain '.' decimal
/// point, no locale formatting, 17 significant digits.
struct CsvTable {
    std::vector<std::pair<std::string, std::vector<double>>> columns;

    void add(std::string name, std::vector<double> values) {
        columns.emplace_back(std::move(name), std::move(values));
    }

    void write(std::ostream& os) const {
        if (columns.empty()) return;
        const std::size_t rows = columns.front().second.size();
        for (const auto& [name, values] : columns)
            if (values.size() != rows)
                throw DomainError("csv: column '" + name + "' has mismatched length");
        for (std::size_t c = 0; c < columns.size(); ++c)
            os << (c ? "," : "") << columns[c].first;
        os << '\n';
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < columns.size(); ++c)
                os << (c ? "," : "") << format_full(columns[c].second[r]);
            os << '\n';
        }
    }

    void write_file(const std::string& path) const {
        std::ofstream os(path);
        if (!os) throw DomainError("csv: cannot open '" + path + "' for writing");
        write(os);
    }
};

}  // namespace qpc
