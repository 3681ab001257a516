#include "holo/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace holo::csv {

std::string number(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string label(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    for (int digits = 1; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string Table::render() const {
    std::string out;
    out += "# " + comment + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += number(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open " + tmp.string() + " for writing");
        os << content;
        os.flush();
        if (!os) throw Error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string render_svg(const std::vector<std::vector<Complex>>& curves, int size) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& c : curves)
        for (Complex p : c) {
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
            x0 = std::min(x0, p.real());
            x1 = std::max(x1, p.real());
            y0 = std::min(y0, p.imag());
            y1 = std::max(y1, p.imag());
        }
    if (!std::isfinite(x0)) x0 = y0 = -1.0, x1 = y1 = 1.0;
    double span = std::max({x1 - x0, y1 - y0, 1e-12});
    const double margin = 0.05 * span;
    const double cx = 0.5 * (x0 + x1), cy = 0.5 * (y0 + y1);
    span += 2.0 * margin;
    const double scale = size / span;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    for (std::size_t k = 0; k < curves.size(); ++k) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[k % 6] << "\" stroke-width=\"1\" points=\"";
        for (Complex p : curves[k]) {
            const double sx = (p.real() - cx) * scale + 0.5 * size;
            const double sy = 0.5 * size - (p.imag() - cy) * scale;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f,%.3f ", sx, sy);
            os << buf;
        }
        if (!curves[k].empty()) {
            const Complex p = curves[k].front();
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f,%.3f", (p.real() - cx) * scale + 0.5 * size,
                          0.5 * size - (p.imag() - cy) * scale);
            os << buf;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace holo::csv
