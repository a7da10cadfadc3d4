#include "dglab/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace dglab {

namespace {

void check_stream(const std::ofstream& f, const std::string& path) {
    if (!f) throw ReportError("cannot write " + path);
}

} // namespace

std::string format_double(double v, int precision) {
    char buf[64];
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

void write_field_bin(const std::string& path, const ScalarField& u) {
    std::ofstream f(path, std::ios::binary);
    check_stream(f, path);
    char header[16] = {0};
    std::memcpy(header, "DGL1", 4);
    std::uint32_t nx = (std::uint32_t)u.nx, nt = (std::uint32_t)u.nt;
    std::memcpy(header + 4, &nx, 4);
    std::memcpy(header + 8, &nt, 4);
    f.write(header, 16);
    f.write(reinterpret_cast<const char*>(u.v.data()),
            (std::streamsize)(u.v.size() * sizeof(double)));
}

ScalarField read_field_bin(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ReportError("cannot read " + path);
    char header[16];
    f.read(header, 16);
    if (!f || std::memcmp(header, "DGL1", 4) != 0)
        throw ReportError("bad field header in " + path);
    std::uint32_t nx, nt;
    std::memcpy(&nx, header + 4, 4);
    std::memcpy(&nt, header + 8, 4);
    ScalarField u;
    u.nx = (int)nx;
    u.nt = (int)nt;
    u.v.resize((std::size_t)nx * nt);
    f.read(reinterpret_cast<char*>(u.v.data()),
           (std::streamsize)(u.v.size() * sizeof(double)));
    if (!f) throw ReportError("truncated field data in " + path);
    return u;
}

void write_field_csv(const std::string& path, const Grid& g, const ScalarField& u) {
    std::ofstream f(path);
    check_stream(f, path);
    f << "x,t,u\n";
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i)
            f << format_double(g.x(i), 17) << ',' << format_double(g.t(j), 17) << ','
              << format_double(u.at(i, j), 17) << '\n';
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream f(path);
    check_stream(f, path);
    for (std::size_t k = 0; k < header.size(); ++k)
        f << header[k] << (k + 1 < header.size() ? "," : "");
    f << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k)
            f << format_double(row[k]) << (k + 1 < row.size() ? "," : "");
        f << '\n';
    }
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    check_stream(f, path);
    f << content;
}

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ReportError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series, bool loglog) {
    const double W = 640.0, H = 420.0, ml = 70.0, mr = 20.0, mt = 40.0, mb = 50.0;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto tx = [&](double v) { return loglog ? std::log10(v) : v; };
    bool any = false;
    for (const auto& s : series) {
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            double xv = s.x[k], yv = s.y[k];
            if (loglog && (xv <= 0.0 || yv <= 0.0)) continue;
            xmin = std::min(xmin, tx(xv));
            xmax = std::max(xmax, tx(xv));
            ymin = std::min(ymin, tx(yv));
            ymax = std::max(ymax, tx(yv));
            any = true;
        }
    }
    if (!any) {
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax - xmin < 1e-12) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax - ymin < 1e-12) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    auto px = [&](double v) {
        return ml + (tx(v) - xmin) / (xmax - xmin) * (W - ml - mr);
    };
    auto py = [&](double v) {
        return H - mb - (tx(v) - ymin) / (ymax - ymin) * (H - mt - mb);
    };
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" "
         "viewBox=\"0 0 640 420\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"420\" fill=\"white\"/>\n";
    s << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"14\">"
      << title << "</text>\n";
    s << "<line x1=\"70\" y1=\"380\" x2=\"620\" y2=\"380\" stroke=\"black\"/>\n";
    s << "<line x1=\"70\" y1=\"40\" x2=\"70\" y2=\"380\" stroke=\"black\"/>\n";
    s << "<text x=\"345\" y=\"408\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\">"
      << x_label << (loglog ? " (log)" : "") << "</text>\n";
    s << "<text x=\"18\" y=\"210\" text-anchor=\"middle\" font-family=\"monospace\" "
         "font-size=\"12\" transform=\"rotate(-90 18 210)\">"
      << y_label << (loglog ? " (log)" : "") << "</text>\n";
    const char* colors[] = {"#1f5fbf", "#bf3f1f", "#2f8f2f", "#8f2f8f"};
    int ci = 0;
    for (const auto& sr : series) {
        std::ostringstream pts;
        for (std::size_t k = 0; k < sr.x.size(); ++k) {
            if (loglog && (sr.x[k] <= 0.0 || sr.y[k] <= 0.0)) continue;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(sr.x[k]), py(sr.y[k]));
            pts << buf;
        }
        std::string p = pts.str();
        if (!p.empty()) {
            s << "<polyline fill=\"none\" stroke=\"" << colors[ci % 4]
              << "\" stroke-width=\"1.5\" points=\"" << p << "\"/>\n";
            for (std::size_t k = 0; k < sr.x.size(); ++k) {
                if (loglog && (sr.x[k] <= 0.0 || sr.y[k] <= 0.0)) continue;
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2.5\" fill=\"%s\"/>\n",
                              px(sr.x[k]), py(sr.y[k]), colors[ci % 4]);
                s << buf;
            }
        }
        ci++;
    }
    // Axis extent labels.
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "<text x=\"70\" y=\"396\" font-family=\"monospace\" font-size=\"10\">"
                  "%.4g</text>\n"
                  "<text x=\"620\" y=\"396\" text-anchor=\"end\" font-family=\"monospace\" "
                  "font-size=\"10\">%.4g</text>\n"
                  "<text x=\"66\" y=\"380\" text-anchor=\"end\" font-family=\"monospace\" "
                  "font-size=\"10\">%.4g</text>\n"
                  "<text x=\"66\" y=\"48\" text-anchor=\"end\" font-family=\"monospace\" "
                  "font-size=\"10\">%.4g</text>\n",
                  loglog ? std::pow(10.0, xmin) : xmin, loglog ? std::pow(10.0, xmax) : xmax,
                  loglog ? std::pow(10.0, ymin) : ymin, loglog ? std::pow(10.0, ymax) : ymax);
    s << buf;
    s << "</svg>\n";
    write_text(path, s.str());
}

} // namespace dglab
