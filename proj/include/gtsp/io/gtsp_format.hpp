#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsp/core/instance.hpp"
#include "gtsp/io/tsplib.hpp"

namespace gtsp {

// GTSPLIB-style text format:
//   NAME / TYPE: GTSP|AGTSP / DIMENSION / GTSP_SETS headers,
//   EDGE_WEIGHT_TYPE: EXPLICIT with a FULL_MATRIX EDGE_WEIGHT_SECTION,
//   GTSP_SET_SECTION with one "<set-id> <v1> <v2> ... -1" line per cluster.
// Vertex and set ids are 1-based on disk.
inline void write_gtsp(const GtspInstance& inst, std::ostream& out) {
    out << "NAME: " << inst.name() << "\n";
    out << "TYPE: " << (inst.symmetric() ? "GTSP" : "AGTSP") << "\n";
    out << "DIMENSION: " << inst.n() << "\n";
    out << "GTSP_SETS: " << inst.m() << "\n";
    out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
    out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
    out << "EDGE_WEIGHT_SECTION\n";
    for (int u = 0; u < inst.n(); ++u) {
        for (int v = 0; v < inst.n(); ++v) {
            if (v) out << ' ';
            out << inst.weight(u, v);
        }
        out << '\n';
    }
    out << "GTSP_SET_SECTION\n";
    for (int c = 0; c < inst.m(); ++c) {
        out << (c + 1);
        for (int v : inst.cluster(c)) out << ' ' << (v + 1);
        out << " -1\n";
    }
    out << "EOF\n";
}

inline GtspInstance read_gtsp(std::istream& in) {
    std::string name;
    int n = -1, m = -1;
    std::string line;
    int lineno = 0;
    std::vector<Weight> weights;
    std::vector<std::vector<int>> clusters;

    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        if (stripped == "EOF") break;

        std::string key, value;
        if (detail::split_header(stripped, key, value)) {
            if (key == "NAME") name = value;
            else if (key == "DIMENSION") n = std::stoi(value);
            else if (key == "GTSP_SETS") m = std::stoi(value);
            // TYPE and EDGE_WEIGHT_* are informational; symmetry is
            // re-derived from the matrix on load
            continue;
        }

        if (stripped == "EDGE_WEIGHT_SECTION") {
            if (n <= 0) throw ParseError("EDGE_WEIGHT_SECTION before DIMENSION", lineno);
            weights.reserve(static_cast<std::size_t>(n) * n);
            while (static_cast<std::size_t>(n) * n > weights.size() && std::getline(in, line)) {
                ++lineno;
                std::istringstream row(line);
                Weight w;
                while (row >> w) weights.push_back(w);
            }
            if (weights.size() != static_cast<std::size_t>(n) * n)
                throw ParseError("edge weight section ended early", lineno);
        } else if (stripped == "GTSP_SET_SECTION") {
            if (m <= 0) throw ParseError("GTSP_SET_SECTION before GTSP_SETS", lineno);
            for (int c = 0; c < m; ++c) {
                if (!std::getline(in, line))
                    throw ParseError("set section ended early", lineno);
                ++lineno;
                std::istringstream row(line);
                int set_id;
                if (!(row >> set_id) || set_id != c + 1)
                    throw ParseError("expected set " + std::to_string(c + 1), lineno);
                std::vector<int> members;
                int v = 0;
                while (row >> v && v != -1) {
                    if (v < 1 || v > n)
                        throw ParseError("vertex " + std::to_string(v) + " out of range", lineno);
                    members.push_back(v - 1);
                }
                if (v != -1) throw ParseError("set line missing -1 terminator", lineno);
                clusters.push_back(std::move(members));
            }
        }
    }

    if (n <= 0 || m <= 0) throw ParseError("missing DIMENSION or GTSP_SETS", lineno);
    if (weights.empty()) throw ParseError("missing EDGE_WEIGHT_SECTION", lineno);
    if (static_cast<int>(clusters.size()) != m) throw ParseError("missing GTSP_SET_SECTION", lineno);

    // Partition check at the boundary so errors name 1-based vertex ids.
    std::vector<int> owner(n, -1);
    for (int c = 0; c < m; ++c) {
        for (int v : clusters[c]) {
            if (owner[v] != -1)
                throw ParseError("vertex " + std::to_string(v + 1) + " appears in sets " +
                                     std::to_string(owner[v] + 1) + " and " + std::to_string(c + 1),
                                 lineno);
            owner[v] = c;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            throw ParseError("vertex " + std::to_string(v + 1) + " belongs to no set", lineno);

    return GtspInstance(name, n, std::move(weights), std::move(clusters));
}

inline GtspInstance read_gtsp(const std::string& text) {
    std::istringstream in(text);
    return read_gtsp(in);
}

inline std::string write_gtsp(const GtspInstance& inst) {
    std::ostringstream out;
    write_gtsp(inst, out);
    return out.str();
}

}  // namespace gtsp
