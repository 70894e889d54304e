#include "shapespace/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace shapespace {

namespace {

using nlohmann::json;

std::ofstream open_for_writing(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open file for writing: " + path);
    }
    return out;
}

std::ifstream open_for_reading(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file for reading: " + path);
    }
    return in;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_number(const std::string& token, const std::string& path,
                    std::size_t row) {
    const char* begin = token.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE) {
        throw std::invalid_argument("bad number '" + token + "' in " + path +
                                    " row " + std::to_string(row));
    }
    return value;
}

// Two-column CSV with a fixed header; returns the numeric rows.
std::vector<std::pair<double, double>> read_pairs_csv(
    const std::string& path, const std::string& header) {
    std::ifstream in = open_for_reading(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument(path + " is empty");
    }
    strip_cr(line);
    if (line != header) {
        throw std::invalid_argument(path + " must start with header '" +
                                    header + "', got '" + line + "'");
    }
    std::vector<std::pair<double, double>> rows;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        strip_cr(line);
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos ||
            line.find(',', comma + 1) != std::string::npos) {
            throw std::invalid_argument(path + " row " + std::to_string(row) +
                                        " must have exactly two columns");
        }
        rows.emplace_back(parse_number(line.substr(0, comma), path, row),
                          parse_number(line.substr(comma + 1), path, row));
    }
    return rows;
}

json parse_json_file(const std::string& path) {
    std::ifstream in = open_for_reading(path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(path + " is not valid JSON: " +
                                    err.what());
    }
}

std::string sidecar_path(const std::string& path) { return path + ".json"; }

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_curve_csv(const std::string& path, const SampledCurve& curve,
                     bool with_sidecar) {
    std::ofstream out = open_for_writing(path);
    out << "x,y\n";
    for (const Vec2& p : curve.points) {
        out << format_double(p.x) << ',' << format_double(p.y) << '\n';
    }
    if (!out) {
        throw std::invalid_argument("failed while writing " + path);
    }
    if (with_sidecar) {
        json meta;
        meta["closed"] = curve.closed;
        meta["n"] = curve.points.size();
        std::ofstream side = open_for_writing(sidecar_path(path));
        side << meta.dump(2) << '\n';
        if (!side) {
            throw std::invalid_argument("failed while writing " +
                                        sidecar_path(path));
        }
    }
}

SampledCurve read_curve_csv(const std::string& path,
                            std::optional<bool> closed_override) {
    const std::vector<std::pair<double, double>> rows =
        read_pairs_csv(path, "x,y");
    SampledCurve curve;
    curve.points.reserve(rows.size());
    for (const auto& [x, y] : rows) {
        curve.points.push_back(Vec2{x, y});
    }

    if (closed_override.has_value()) {
        curve.closed = *closed_override;
        return curve;
    }
    std::ifstream probe(sidecar_path(path));
    if (!probe) {
        throw std::invalid_argument(
            "closedness of " + path + " is unknown: pass a flag or provide " +
            sidecar_path(path));
    }
    probe.close();
    const json meta = parse_json_file(sidecar_path(path));
    if (!meta.is_object() || !meta.contains("closed") ||
        !meta["closed"].is_boolean()) {
        throw std::invalid_argument(sidecar_path(path) +
                                    " must contain a boolean field 'closed'");
    }
    curve.closed = meta["closed"].get<bool>();
    if (meta.contains("n")) {
        if (!meta["n"].is_number_unsigned() ||
            meta["n"].get<std::size_t>() != curve.points.size()) {
            throw std::invalid_argument(
                sidecar_path(path) + " declares a sample count that " +
                "disagrees with " + path);
        }
    }
    return curve;
}

void write_field_csv(const std::string& path, const TangentField& field) {
    std::ofstream out = open_for_writing(path);
    out << "hx,hy\n";
    for (const Vec2& h : field) {
        out << format_double(h.x) << ',' << format_double(h.y) << '\n';
    }
    if (!out) {
        throw std::invalid_argument("failed while writing " + path);
    }
}

TangentField read_field_csv(const std::string& path) {
    const std::vector<std::pair<double, double>> rows =
        read_pairs_csv(path, "hx,hy");
    TangentField field;
    field.reserve(rows.size());
    for (const auto& [x, y] : rows) {
        field.push_back(Vec2{x, y});
    }
    return field;
}

void write_path_json(const std::string& path, const CurvePath& curve_path) {
    validate_path(curve_path);
    json doc;
    doc["n"] = curve_path.slices.front().size();
    doc["k"] = curve_path.time_steps();
    doc["closed"] = curve_path.slices.front().closed;
    json slices = json::array();
    for (const SampledCurve& slice : curve_path.slices) {
        json pts = json::array();
        for (const Vec2& p : slice.points) {
            pts.push_back(json::array({p.x, p.y}));
        }
        slices.push_back(std::move(pts));
    }
    doc["slices"] = std::move(slices);
    std::ofstream out = open_for_writing(path);
    out << doc.dump() << '\n';
    if (!out) {
        throw std::invalid_argument("failed while writing " + path);
    }
}

CurvePath read_path_json(const std::string& path) {
    const json doc = parse_json_file(path);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("k") ||
        !doc.contains("closed") || !doc.contains("slices")) {
        throw std::invalid_argument(
            path + " must be an object with fields n, k, closed, slices");
    }
    if (!doc["n"].is_number_unsigned() || !doc["k"].is_number_unsigned() ||
        !doc["closed"].is_boolean() || !doc["slices"].is_array()) {
        throw std::invalid_argument(path + " has wrongly typed fields");
    }
    const std::size_t n = doc["n"].get<std::size_t>();
    const std::size_t k = doc["k"].get<std::size_t>();
    const bool closed = doc["closed"].get<bool>();
    if (doc["slices"].size() != k + 1) {
        throw std::invalid_argument(
            path + " declares k=" + std::to_string(k) + " but contains " +
            std::to_string(doc["slices"].size()) + " slices");
    }
    CurvePath curve_path;
    curve_path.slices.resize(k + 1);
    for (std::size_t s = 0; s <= k; ++s) {
        const json& pts = doc["slices"][s];
        if (!pts.is_array() || pts.size() != n) {
            throw std::invalid_argument(
                path + " slice " + std::to_string(s) + " must be an array of " +
                std::to_string(n) + " samples");
        }
        SampledCurve& slice = curve_path.slices[s];
        slice.closed = closed;
        slice.points.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& p = pts[i];
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
                !p[1].is_number()) {
                throw std::invalid_argument(
                    path + " slice " + std::to_string(s) + " sample " +
                    std::to_string(i) + " must be a pair of numbers");
            }
            slice.points[i] = Vec2{p[0].get<double>(), p[1].get<double>()};
        }
    }
    return curve_path;
}

void write_trace_csv(const std::string& path, const OptimizerTrace& trace) {
    std::ofstream out = open_for_writing(path);
    out << "iter,energy,gradnorm,step\n";
    for (const TraceEntry& entry : trace.entries) {
        out << entry.iter << ',' << format_double(entry.energy) << ','
            << format_double(entry.grad_norm) << ','
            << format_double(entry.step) << '\n';
    }
    if (!out) {
        throw std::invalid_argument("failed while writing " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in = open_for_reading(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out = open_for_writing(path);
    out << content;
    if (!out) {
        throw std::invalid_argument("failed while writing " + path);
    }
}

}  // namespace shapespace
