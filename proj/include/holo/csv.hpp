#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "holo/errors.hpp"

namespace holo::csv {

/// 17 significant digits, so values round-trip exactly.
std::string number(double v);
/// Shortest decimal form that reads back as v, for headers and labels.
std::string label(double v);

struct Table {
    std::string comment;  // written as "# <comment>"
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string render() const;
};

/// Writes the content to a sibling temporary file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Polylines of the given curves, auto-fitted with a 5% margin.
std::string render_svg(const std::vector<std::vector<Complex>>& curves, int size = 600);

}  // namespace holo::csv
