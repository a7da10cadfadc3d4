#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <string>

#include "dglab/io.hpp"

using namespace dglab;
namespace fs = std::filesystem;

namespace {

std::string tmp_path(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "dglab_io_test";
    fs::create_directories(dir);
    return (dir / name).string();
}

} // namespace

TEST_CASE("binary field round-trip is lossless") {
    Grid g = Grid::make(-1.0, 1.0, 1.0, 17, 9);
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i)
            u.at(i, j) = std::sin(3.0 * i) * std::exp(0.1 * j) + 1e-17;
    std::string path = tmp_path("field.bin");
    write_field_bin(path, u);
    ScalarField v = read_field_bin(path);
    CHECK(v.nx == u.nx);
    CHECK(v.nt == u.nt);
    REQUIRE(v.v.size() == u.v.size());
    for (std::size_t k = 0; k < u.v.size(); ++k) CHECK(v.v[k] == u.v[k]);
}

TEST_CASE("reading a missing or corrupt field fails") {
    CHECK_THROWS_AS(read_field_bin(tmp_path("nonexistent.bin")), ReportError);
    std::string path = tmp_path("corrupt.bin");
    write_text(path, "not a field file");
    CHECK_THROWS_AS(read_field_bin(path), ReportError);
}

TEST_CASE("text round-trip") {
    std::string path = tmp_path("note.txt");
    std::string content = "line one\nline two\n";
    write_text(path, content);
    CHECK(read_text(path) == content);
    CHECK_THROWS_AS(read_text(tmp_path("missing.txt")), ReportError);
}

TEST_CASE("csv output has header and full-precision rows") {
    std::string path = tmp_path("table.csv");
    write_csv(path, {"a", "b"}, {{1.0, 0.5}, {1e-300, 3.0}});
    std::string s = read_text(path);
    CHECK(s.find("a,b\n") == 0);
    CHECK(s.find("1e-300") != std::string::npos);
}

TEST_CASE("field csv lists all nodes") {
    Grid g = Grid::make(0.0, 1.0, 1.0, 3, 2);
    ScalarField u(g);
    u.at(1, 1) = 2.5;
    std::string path = tmp_path("field.csv");
    write_field_csv(path, g, u);
    std::string s = read_text(path);
    CHECK(s.rfind("x,t,u\n", 0) == 0);
    int lines = 0;
    for (char c : s)
        if (c == '\n') lines++;
    CHECK(lines == 1 + g.n_nodes());
    CHECK(s.find("2.5") != std::string::npos);
}

TEST_CASE("special values survive formatting") {
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0, 17) == format_double(1.0 / 3.0, 17));
}

TEST_CASE("svg plots are deterministic and well-formed") {
    PlotSeries s;
    s.x = {1.0, 2.0, 4.0, 8.0};
    s.y = {1.0, 0.5, 0.25, 0.125};
    std::string p1 = tmp_path("plot1.svg");
    std::string p2 = tmp_path("plot2.svg");
    write_svg_plot(p1, "decay", "r", "osc", {s}, true);
    write_svg_plot(p2, "decay", "r", "osc", {s}, true);
    std::string a = read_text(p1);
    CHECK(a == read_text(p2));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("polyline") != std::string::npos);
    CHECK(a.find("decay") != std::string::npos);

    // Nonpositive data in log-log mode is skipped, not plotted.
    PlotSeries zero;
    zero.x = {1.0, 2.0};
    zero.y = {0.0, -1.0};
    std::string p3 = tmp_path("plot3.svg");
    write_svg_plot(p3, "empty", "r", "osc", {zero}, true);
    std::string b = read_text(p3);
    CHECK(b.find("polyline") == std::string::npos);
}
