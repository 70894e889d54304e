#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "json.hpp"

#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"
#include "shapespace/io.hpp"
#include "shapespace/sample_shapes.hpp"

using namespace shapespace;
using nlohmann::json;

namespace {
std::string g_cli;  // path of the command-line binary under test

struct CmdResult {
    int code;
    std::string out;
    std::string err;
};

CmdResult run_cli(const std::string& args) {
    const std::string out_file = "cli_stdout.txt";
    const std::string err_file = "cli_stderr.txt";
    const std::string cmd =
        "\"" + g_cli + "\" " + args + " > " + out_file + " 2> " + err_file;
    const int raw = std::system(cmd.c_str());
    int code = -1;
    if (raw != -1) {
        code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -2;
    }
    return {code, read_text_file(out_file), read_text_file(err_file)};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        if (end > start) lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}
}  // namespace

TEST_CASE("help and argument errors") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("normalize").code == 1);  // missing input file
    CHECK(run_cli("inner one.csv two.csv --a 0 --b 1").code == 1);
}

TEST_CASE("built-in verification of the three-dimensional model") {
    const CmdResult r = run_cli("heisenberg verify");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("horizontal lift of the unit circle accumulates -pi") {
    const CmdResult r = run_cli("heisenberg lift --loop circle --samples 512");
    REQUIRE(r.code == 0);
    const std::vector<std::string> rows = lines_of(r.out);
    REQUIRE(rows.size() == 514);  // header + 513 samples (loop closes)
    CHECK(rows.front() == "k,x,y,z");
    const std::string& last = rows.back();
    const std::size_t z_comma = last.rfind(',');
    REQUIRE(z_comma != std::string::npos);
    const double z = std::strtod(last.c_str() + z_comma + 1, nullptr);
    CHECK(std::abs(z - (-3.14159265358979323846)) <= 1e-4);
}

TEST_CASE("normalize: pass-through, sections, and precondition errors") {
    const SampledCurve input = ellipse(32, 2.0, 1.0);
    write_curve_csv("cli_norm_in.csv", input);

    const CmdResult ident = run_cli(
        "normalize cli_norm_in.csv --translation none --rotation none "
        "--scale none --output cli_norm_out.csv");
    REQUIRE(ident.code == 0);
    const SampledCurve back = read_curve_csv("cli_norm_out.csv");
    REQUIRE(back.size() == input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        CHECK(back.points[i].x == input.points[i].x);
        CHECK(back.points[i].y == input.points[i].y);
    }

    const CmdResult scaled = run_cli(
        "normalize cli_norm_in.csv --translation centroid --rotation none "
        "--scale length --output cli_norm_scaled.csv");
    REQUIRE(scaled.code == 0);
    const SampledCurve unit = read_curve_csv("cli_norm_scaled.csv");
    CHECK(std::abs(compute_frame(unit).total_length - 1.0) <= 1e-12);

    SampledCurve arc;
    arc.closed = false;
    for (int i = 0; i < 16; ++i) {
        const double t = static_cast<double>(i) / 15.0;
        arc.points.push_back({t, t * t});
    }
    write_curve_csv("cli_arc.csv", arc);
    const CmdResult open_area =
        run_cli("normalize cli_arc.csv --scale area");
    CHECK(open_area.code == 1);
    CHECK(open_area.err.find("closed") != std::string::npos);
}

TEST_CASE("inner product of the unit normal field with itself") {
    const SampledCurve c = circle(256);
    const FrameData frame = compute_frame(c);
    write_curve_csv("cli_inner_curve.csv", c);
    write_field_csv("cli_inner_field.csv", frame.normal);

    const CmdResult r = run_cli(
        "inner cli_inner_curve.csv cli_inner_field.csv --a 1.0 --b 1.0");
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    const double two_pi = 2.0 * 3.14159265358979323846;
    CHECK(std::abs(report["value"].get<double>() - two_pi) <= 1e-3 * two_pi);

    // Mismatched field length is a validation error.
    write_field_csv("cli_inner_short.csv",
                    TangentField(128, Vec2{1.0, 0.0}));
    const CmdResult bad =
        run_cli("inner cli_inner_curve.csv cli_inner_short.csv");
    CHECK(bad.code == 1);
    CHECK(!bad.err.empty());
}

TEST_CASE("projection report fields") {
    const SampledCurve c = ellipse(64, 2.0, 1.0);
    Rng rng(81);
    write_curve_csv("cli_proj_curve.csv", c);
    write_field_csv("cli_proj_field.csv", fourier_field(64, rng));

    const CmdResult r = run_cli(
        "project cli_proj_curve.csv cli_proj_field.csv --bundle horizontal "
        "--a 1.0 --b 1.0 --output cli_proj_w.csv");
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    REQUIRE(report.contains("m_norm"));
    REQUIRE(report.contains("w_norm"));
    CHECK(report["orthogonality"].get<double>() <= 1e-6);
    CHECK(report["residual"].get<double>() <= 1e-8);

    const TangentField w = read_field_csv("cli_proj_w.csv");
    CHECK(w.size() == 64);
}

TEST_CASE("path length report") {
    CurvePath path;
    for (int s = 0; s <= 3; ++s) {
        path.slices.push_back(circle(32, 1.0 + 0.25 * s));
    }
    write_path_json("cli_pathlen.json", path);

    const CmdResult r =
        run_cli("pathlen cli_pathlen.json --metric gauge --a 1.0 --b 1.0");
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["n"].get<int>() == 32);
    CHECK(report["k"].get<int>() == 3);
    CHECK(report["metric"].get<std::string>() == "gauge");
    CHECK(report["energy"].get<double>() > 0.0);
    CHECK(report["length"].get<double>() > 0.0);
    CHECK(report["speed_squares"].size() == 3);
}

TEST_CASE("geodesic straightening writes path and trace") {
    write_curve_csv("cli_geo_a.csv", circle(24));
    write_curve_csv("cli_geo_b.csv", ellipse(24, 1.4, 0.8));

    const CmdResult r = run_cli(
        "geodesic cli_geo_a.csv cli_geo_b.csv --metric ambient --k 4 "
        "--iters 10 --output cli_geo_path.json --trace cli_geo_trace.csv");
    REQUIRE(r.code == 0);
    const json summary = json::parse(r.out);
    CHECK(summary["metric"].get<std::string>() == "ambient");
    CHECK(summary["iterations"].get<int>() >= 1);
    CHECK(summary["final_energy"].get<double>() <=
          summary["initial_energy"].get<double>());

    const CurvePath result = read_path_json("cli_geo_path.json");
    CHECK(result.slices.size() == 5);
    CHECK(result.slices.front().size() == 24);

    const std::string trace = read_text_file("cli_geo_trace.csv");
    CHECK(trace.rfind("iter,energy,gradnorm,step", 0) == 0);
}

TEST_CASE("malformed input is a validation error") {
    write_text_file("cli_bad.csv", "x,y\n1.0,oops\n");
    const CmdResult r = run_cli("inner cli_bad.csv cli_bad.csv");
    CHECK(r.code == 1);
    CHECK(r.err.find("cli_bad.csv") != std::string::npos);
}

TEST_CASE("full verification suite exits cleanly") {
    const CmdResult r = run_cli("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("9/9 checks passed") != std::string::npos);
}

int main(int argc, char** argv) {
    std::vector<char*> doctest_args;
    doctest_args.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (g_cli.empty() && !arg.empty() && arg[0] != '-') {
            g_cli = arg;
            continue;
        }
        doctest_args.push_back(argv[i]);
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <cli-binary> [doctest args]\n");
        return 1;
    }
    doctest::Context context(static_cast<int>(doctest_args.size()),
                             doctest_args.data());
    return context.run();
}
