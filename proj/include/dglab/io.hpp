#ifndef DGLAB_IO_HPP
#define DGLAB_IO_HPP

#include <string>
#include <vector>

#include "dglab/grid.hpp"

namespace dglab {

// Flat binary field layout: 16-byte header (magic "DGL1", u32 nx, u32 nt,
// 4 zero bytes), then row-major little-endian float64 values.
void write_field_bin(const std::string& path, const ScalarField& u);
ScalarField read_field_bin(const std::string& path);

// CSV with header "x,t,u", one row per node (t-major), %.17g values.
void write_field_csv(const std::string& path, const Grid& g, const ScalarField& u);

// Generic CSV: header row + rows of numeric cells (%.12g).
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

void write_text(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

// Deterministic single-polyline SVG; log-log option for both axes.
struct PlotSeries {
    std::vector<double> x, y;
};
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series, bool loglog);

std::string format_double(double v, int precision = 12);

} // namespace dglab

#endif
