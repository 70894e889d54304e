#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapespace/io.hpp"
#include "shapespace/sample_shapes.hpp"

using namespace shapespace;

namespace {
// Tests run with the build tree as working directory; keep artifacts in a
// subdirectory name unlikely to collide.
std::string tmp(const std::string& name) { return "io_test_" + name; }

bool file_exists(const std::string& path) {
    if (FILE* f = std::fopen(path.c_str(), "rb")) {
        std::fclose(f);
        return true;
    }
    return false;
}
}  // namespace

TEST_CASE("format_double round-trips bit patterns") {
    const std::vector<double> values = {
        0.0,
        -0.0,
        1.0,
        -1.0 / 3.0,
        3.14159265358979323846,
        6.02214076e23,
        1e-300,
        -2.2250738585072014e-308,  // smallest normal
        123456789.123456789,
        std::numeric_limits<double>::max(),
        std::numeric_limits<double>::min(),
        5e-324,  // smallest subnormal
    };
    for (double v : values) {
        const std::string text = format_double(v);
        const double back = std::strtod(text.c_str(), nullptr);
        CHECK(back == v);
        CHECK(std::signbit(back) == std::signbit(v));
    }
}

TEST_CASE("curve CSV round-trip with sidecar") {
    const SampledCurve original = ellipse(17, 1.7, 0.9);
    const std::string path = tmp("curve.csv");
    write_curve_csv(path, original);
    CHECK(file_exists(path + ".json"));

    const SampledCurve back = read_curve_csv(path);
    REQUIRE(back.size() == original.size());
    CHECK(back.closed == original.closed);
    for (std::size_t i = 0; i < original.size(); ++i) {
        CHECK(back.points[i].x == original.points[i].x);
        CHECK(back.points[i].y == original.points[i].y);
    }
}

TEST_CASE("closedness override and missing metadata") {
    SampledCurve arc;
    arc.closed = false;
    for (int i = 0; i < 9; ++i) {
        const double t = 0.25 * i;
        arc.points.push_back({t, 0.1 * t * t});
    }

    const std::string path = tmp("arc.csv");
    write_curve_csv(path, arc);
    CHECK(read_curve_csv(path).closed == false);

    // The override wins over the sidecar.
    CHECK(read_curve_csv(path, true).closed == true);

    // Without sidecar or override, closedness is unknown: that is an error
    // whose message must point at the missing information.
    const std::string bare = tmp("bare.csv");
    write_curve_csv(bare, arc, /*with_sidecar=*/false);
    CHECK(!file_exists(bare + ".json"));
    try {
        read_curve_csv(bare);
        FAIL("expected a closedness error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("closed") != std::string::npos);
    }
}

TEST_CASE("sidecar sample-count mismatch is rejected") {
    const SampledCurve c = circle(12);
    const std::string path = tmp("mismatch.csv");
    write_curve_csv(path, c);
    write_text_file(path + ".json", "{\"closed\": true, \"n\": 13}");
    CHECK_THROWS_AS(read_curve_csv(path), std::invalid_argument);
}

TEST_CASE("malformed curve CSV inputs") {
    const std::string header = tmp("badheader.csv");
    write_text_file(header, "a,b\n1.0,2.0\n");
    CHECK_THROWS_AS(read_curve_csv(header, false), std::invalid_argument);

    const std::string columns = tmp("badcols.csv");
    write_text_file(columns, "x,y\n1.0,2.0,3.0\n1.0,2.0\n");
    CHECK_THROWS_AS(read_curve_csv(columns, false), std::invalid_argument);

    const std::string number = tmp("badnum.csv");
    write_text_file(number, "x,y\n1.0,2.0\n1.0,zebra\n");
    try {
        read_curve_csv(number, false);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        const std::string what = e.what();
        CHECK(what.find(number) != std::string::npos);  // names the file
        CHECK(what.find("3") != std::string::npos);     // names the row
    }

    CHECK_THROWS_AS(read_curve_csv(tmp("no_such_file.csv"), false),
                    std::invalid_argument);
}

TEST_CASE("field CSV round-trip and validation") {
    Rng rng(71);
    const TangentField field = fourier_field(33, rng);
    const std::string path = tmp("field.csv");
    write_field_csv(path, field);

    const TangentField back = read_field_csv(path);
    REQUIRE(back.size() == field.size());
    for (std::size_t i = 0; i < field.size(); ++i) {
        CHECK(back[i].x == field[i].x);
        CHECK(back[i].y == field[i].y);
    }

    const std::string bad = tmp("badfield.csv");
    write_text_file(bad, "x,y\n1.0,2.0\n");
    CHECK_THROWS_AS(read_field_csv(bad), std::invalid_argument);
}

TEST_CASE("path JSON round-trip") {
    Rng rng(72);
    const CurvePath path = random_path_family(rng).realize(19, 3);
    const std::string file = tmp("path.json");
    write_path_json(file, path);

    const CurvePath back = read_path_json(file);
    REQUIRE(back.slices.size() == path.slices.size());
    for (std::size_t s = 0; s < path.slices.size(); ++s) {
        CHECK(back.slices[s].closed == path.slices[s].closed);
        REQUIRE(back.slices[s].size() == path.slices[s].size());
        for (std::size_t i = 0; i < path.slices[s].size(); ++i) {
            CHECK(back.slices[s].points[i].x == path.slices[s].points[i].x);
            CHECK(back.slices[s].points[i].y == path.slices[s].points[i].y);
        }
    }
}

TEST_CASE("malformed path JSON inputs") {
    const std::string not_json = tmp("truncated.json");
    write_text_file(not_json, "{\"n\": 4, \"k\": 2, ");
    CHECK_THROWS_AS(read_path_json(not_json), std::invalid_argument);

    const std::string wrong_counts = tmp("wrongcounts.json");
    write_text_file(wrong_counts,
                    "{\"n\": 3, \"k\": 2, \"closed\": true, \"slices\": "
                    "[[[0,0],[1,0],[0,1]], [[0,0],[1,0],[0,1]]]}");
    CHECK_THROWS_AS(read_path_json(wrong_counts), std::invalid_argument);

    const std::string bad_point = tmp("badpoint.json");
    write_text_file(bad_point,
                    "{\"n\": 3, \"k\": 2, \"closed\": true, \"slices\": "
                    "[[[0,0],[1,0],[0,1]], [[0,0],[1,0],[0,1]], "
                    "[[0,0],[1],[0,1]]]}");
    CHECK_THROWS_AS(read_path_json(bad_point), std::invalid_argument);
}

TEST_CASE("trace CSV layout") {
    OptimizerTrace trace;
    trace.entries = {{0, 2.5, 0.5, 1.0, false}, {1, 2.0, 0.25, 0.5, true}};
    const std::string path = tmp("trace.csv");
    write_trace_csv(path, trace);

    const std::string text = read_text_file(path);
    CHECK(text.rfind("iter,energy,gradnorm,step\n", 0) == 0);
    CHECK(text.find("\n0,") != std::string::npos);
    CHECK(text.find("\n1,") != std::string::npos);
    // Values round-trip through the 17-digit format.
    CHECK(text.find(format_double(2.5)) != std::string::npos);
    CHECK(text.find(format_double(0.25)) != std::string::npos);
}
