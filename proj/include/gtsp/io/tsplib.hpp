#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsp/core/instance.hpp"

namespace gtsp {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

enum class WeightKind { Euc2d, Ceil2d, Geo, Att, Explicit };

struct TspInstance {
    std::string name;
    int n = 0;
    WeightKind weight_kind = WeightKind::Euc2d;
    std::optional<std::vector<std::pair<double, double>>> coords;
    std::optional<std::vector<Weight>> explicit_weights;  // n*n
    bool symmetric = true;

    Weight weight(int u, int v) const;
};

namespace tsplib {

inline Weight euc_2d(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    return static_cast<Weight>(std::llround(std::sqrt(dx * dx + dy * dy)));
}

inline Weight ceil_2d(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    return static_cast<Weight>(std::ceil(std::sqrt(dx * dx + dy * dy)));
}

// Pseudo-Euclidean distance with the round-up rule.
inline Weight att(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2, dy = y1 - y2;
    const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
    const Weight t = static_cast<Weight>(std::llround(r));
    return (static_cast<double>(t) < r) ? t + 1 : t;
}

// Geographical distance: coordinates are in DDD.MM (degrees.minutes) form,
// Earth radius 6378.388 km.
inline double geo_radians(double coordinate) {
    const double deg = std::trunc(coordinate);
    const double min = coordinate - deg;
    constexpr double kPi = 3.141592;
    return kPi * (deg + 5.0 * min / 3.0) / 180.0;
}

inline Weight geo(double x1, double y1, double x2, double y2) {
    constexpr double kRadius = 6378.388;
    const double lat1 = geo_radians(x1), lon1 = geo_radians(y1);
    const double lat2 = geo_radians(x2), lon2 = geo_radians(y2);
    const double q1 = std::cos(lon1 - lon2);
    const double q2 = std::cos(lat1 - lat2);
    const double q3 = std::cos(lat1 + lat2);
    return static_cast<Weight>(
        kRadius * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
}

}  // namespace tsplib

inline Weight TspInstance::weight(int u, int v) const {
    if (weight_kind == WeightKind::Explicit)
        return (*explicit_weights)[static_cast<std::size_t>(u) * n + v];
    const auto& [x1, y1] = (*coords)[u];
    const auto& [x2, y2] = (*coords)[v];
    switch (weight_kind) {
        case WeightKind::Euc2d: return tsplib::euc_2d(x1, y1, x2, y2);
        case WeightKind::Ceil2d: return tsplib::ceil_2d(x1, y1, x2, y2);
        case WeightKind::Geo: return tsplib::geo(x1, y1, x2, y2);
        case WeightKind::Att: return tsplib::att(x1, y1, x2, y2);
        default: return 0;
    }
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Splits "KEY : value" header lines; returns false for section markers.
inline bool split_header(const std::string& line, std::string& key, std::string& value) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    key = trim(line.substr(0, colon));
    value = trim(line.substr(colon + 1));
    return true;
}

}  // namespace detail

// Parses a TSPLIB .tsp/.atsp stream. Supports NODE_COORD_SECTION for the
// coordinate kinds and EDGE_WEIGHT_SECTION with FULL_MATRIX, UPPER_ROW,
// UPPER_DIAG_ROW and LOWER_DIAG_ROW layouts.
inline TspInstance parse_tsplib(std::istream& in) {
    TspInstance tsp;
    std::string edge_weight_type, edge_weight_format, type;
    std::string line;
    int lineno = 0;
    bool have_coords = false, have_matrix = false;

    auto read_numbers = [&](int count) {
        std::vector<double> values;
        values.reserve(count);
        while (static_cast<int>(values.size()) < count && std::getline(in, line)) {
            ++lineno;
            std::istringstream row(line);
            double x;
            while (row >> x) values.push_back(x);
        }
        if (static_cast<int>(values.size()) != count)
            throw ParseError("edge weight section ended early", lineno);
        return values;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        if (stripped == "EOF") break;

        std::string key, value;
        if (detail::split_header(stripped, key, value)) {
            if (key == "NAME") tsp.name = value;
            else if (key == "TYPE") type = value;
            else if (key == "DIMENSION") tsp.n = std::stoi(value);
            else if (key == "EDGE_WEIGHT_TYPE") edge_weight_type = value;
            else if (key == "EDGE_WEIGHT_FORMAT") edge_weight_format = value;
            // COMMENT, DISPLAY_DATA_TYPE, NODE_COORD_TYPE etc. are ignored
            continue;
        }

        if (stripped == "NODE_COORD_SECTION") {
            if (tsp.n <= 0) throw ParseError("NODE_COORD_SECTION before DIMENSION", lineno);
            std::vector<std::pair<double, double>> coords(tsp.n);
            std::vector<char> seen(tsp.n, 0);
            for (int i = 0; i < tsp.n; ++i) {
                if (!std::getline(in, line))
                    throw ParseError("node coord section ended early", lineno);
                ++lineno;
                std::istringstream row(line);
                int id;
                double x, y;
                if (!(row >> id >> x >> y))
                    throw ParseError("malformed node coord line", lineno);
                if (id < 1 || id > tsp.n)
                    throw ParseError("vertex id " + std::to_string(id) + " out of range", lineno);
                coords[id - 1] = {x, y};
                seen[id - 1] = 1;
            }
            for (int i = 0; i < tsp.n; ++i)
                if (!seen[i])
                    throw ParseError("missing coordinates for vertex " + std::to_string(i + 1),
                                     lineno);
            tsp.coords = std::move(coords);
            have_coords = true;
        } else if (stripped == "EDGE_WEIGHT_SECTION") {
            if (tsp.n <= 0) throw ParseError("EDGE_WEIGHT_SECTION before DIMENSION", lineno);
            const int n = tsp.n;
            std::vector<Weight> w(static_cast<std::size_t>(n) * n, 0);
            auto at = [&](int i, int j) -> Weight& {
                return w[static_cast<std::size_t>(i) * n + j];
            };
            if (edge_weight_format == "FULL_MATRIX") {
                auto values = read_numbers(n * n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        at(i, j) = static_cast<Weight>(values[static_cast<std::size_t>(i) * n + j]);
            } else if (edge_weight_format == "UPPER_ROW") {
                auto values = read_numbers(n * (n - 1) / 2);
                std::size_t idx = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        at(i, j) = at(j, i) = static_cast<Weight>(values[idx++]);
                    }
            } else if (edge_weight_format == "UPPER_DIAG_ROW") {
                auto values = read_numbers(n * (n + 1) / 2);
                std::size_t idx = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j) {
                        at(i, j) = at(j, i) = static_cast<Weight>(values[idx++]);
                    }
            } else if (edge_weight_format == "LOWER_DIAG_ROW") {
                auto values = read_numbers(n * (n + 1) / 2);
                std::size_t idx = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j <= i; ++j) {
                        at(i, j) = at(j, i) = static_cast<Weight>(values[idx++]);
                    }
            } else {
                throw ParseError("unsupported EDGE_WEIGHT_FORMAT '" + edge_weight_format + "'",
                                 lineno);
            }
            tsp.explicit_weights = std::move(w);
            have_matrix = true;
        } else if (stripped.find("SECTION") != std::string::npos) {
            // DISPLAY_DATA_SECTION and friends: skip until a known marker
            continue;
        }
    }

    if (tsp.n <= 0) throw ParseError("missing DIMENSION", lineno);
    if (edge_weight_type == "EUC_2D") tsp.weight_kind = WeightKind::Euc2d;
    else if (edge_weight_type == "CEIL_2D") tsp.weight_kind = WeightKind::Ceil2d;
    else if (edge_weight_type == "GEO") tsp.weight_kind = WeightKind::Geo;
    else if (edge_weight_type == "ATT") tsp.weight_kind = WeightKind::Att;
    else if (edge_weight_type == "EXPLICIT") tsp.weight_kind = WeightKind::Explicit;
    else throw ParseError("unsupported EDGE_WEIGHT_TYPE '" + edge_weight_type + "'", lineno);

    if (tsp.weight_kind == WeightKind::Explicit) {
        if (!have_matrix) throw ParseError("EXPLICIT instance without EDGE_WEIGHT_SECTION", lineno);
        tsp.symmetric = true;
        for (int u = 0; u < tsp.n && tsp.symmetric; ++u)
            for (int v = u + 1; v < tsp.n; ++v)
                if (tsp.weight(u, v) != tsp.weight(v, u)) {
                    tsp.symmetric = false;
                    break;
                }
    } else {
        if (!have_coords)
            throw ParseError("coordinate instance without NODE_COORD_SECTION", lineno);
        tsp.symmetric = true;
    }
    return tsp;
}

inline TspInstance parse_tsplib(const std::string& text) {
    std::istringstream in(text);
    return parse_tsplib(in);
}

}  // namespace gtsp
