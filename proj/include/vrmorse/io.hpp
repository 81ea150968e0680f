// CSV readers (point clouds, distance matrices, Cayley edge lists) and the
// "name:args" generator strings the CLI dispatches on.
#pragma once

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "groups.hpp"
#include "metric.hpp"
#include "rational.hpp"

namespace vrmorse {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) out.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

// accepts "p/q", plain integers, and decimal notation
inline Rational parse_number(const std::string& s) {
    if (s.find('/') != std::string::npos) return Rational::parse(s);
    return Rational::parse_decimal(s);
}

// ------------------------------------------------------------ point cloud --

struct PointCloud {
    std::vector<std::vector<Rational>> coords;  // row per point
    std::vector<std::string> labels;
};

// Header "x0,x1,...[,label]"; each row one point. Coordinates are decimals
// or rationals, parsed exactly.
inline PointCloud read_point_cloud_csv(std::istream& in,
                                       const std::string& what) {
    PointCloud pc;
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument(what + ": empty point-cloud file");
    std::vector<std::string> header = split_csv(line);
    bool has_label = !header.empty() && header.back() == "label";
    std::size_t dims = header.size() - (has_label ? 1 : 0);
    if (dims == 0)
        throw std::invalid_argument(what + ": no coordinate columns");
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv(line);
        if (cells.size() != header.size())
            throw std::invalid_argument(what + ": row " + std::to_string(row) +
                                        " has " + std::to_string(cells.size()) +
                                        " cells, expected " +
                                        std::to_string(header.size()));
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < dims; ++i) pt.push_back(parse_number(cells[i]));
        pc.coords.push_back(std::move(pt));
        pc.labels.push_back(has_label ? cells.back()
                                      : "p" + std::to_string(pc.coords.size() - 1));
    }
    if (pc.coords.empty())
        throw std::invalid_argument(what + ": no points");
    return pc;
}

// Exactness rule: when every coordinate, written over the common denominator,
// has a scaled integer of magnitude <= 2e6, distances are exact squared
// rationals; otherwise the space falls back to doubles with eps = 1e-9.
inline AnySpace space_from_points(const PointCloud& pc,
                                  const std::string& provenance) {
    const int n = int(pc.coords.size());
    bool exact = true;
    std::int64_t L = 1;
    for (const auto& pt : pc.coords) {
        for (const auto& c : pt) {
            std::int64_t d = c.den();
            std::int64_t g = std::gcd(L, d);
            if (L / g > 1'000'000'000 / d) {
                exact = false;
                break;
            }
            L = L / g * d;
        }
        if (!exact) break;
    }
    if (exact)
        for (const auto& pt : pc.coords)
            for (const auto& c : pt) {
                std::int64_t scaled = c.num() * (L / c.den());
                if (scaled > 2'000'000 || scaled < -2'000'000) {
                    exact = false;
                    break;
                }
            }
    if (exact) {
        SquaredSpace sp;
        sp.labels = pc.labels;
        sp.provenance = provenance;
        sp.n = n;
        sp.table.assign(std::size_t(n) * n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rational s(0);
                for (std::size_t k = 0; k < pc.coords[i].size(); ++k) {
                    Rational d = pc.coords[i][k] - pc.coords[j][k];
                    s = s + d * d;
                }
                sp.table[std::size_t(i) * n + j] = s;
                sp.table[std::size_t(j) * n + i] = s;
            }
        return sp;
    }
    ApproxSpace sp;
    sp.labels = pc.labels;
    sp.provenance = provenance;
    sp.n = n;
    sp.table.assign(std::size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double s = 0;
            for (std::size_t k = 0; k < pc.coords[i].size(); ++k) {
                double d = pc.coords[i][k].to_double() -
                           pc.coords[j][k].to_double();
                s += d * d;
            }
            sp.table[std::size_t(i) * n + j] = std::sqrt(s);
            sp.table[std::size_t(j) * n + i] = std::sqrt(s);
        }
    return sp;
}

inline AnySpace load_point_cloud(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    PointCloud pc = read_point_cloud_csv(in, path);
    return space_from_points(pc, "pointcloud:" + path);
}

// ------------------------------------------------------- distance matrix ---

// Labels in the first row and first column; cell (i,j) the distance. Values
// are taken as given (an exact, non-squared metric).
inline ExactSpace read_distance_matrix_csv(std::istream& in,
                                           const std::string& what) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument(what + ": empty matrix file");
    std::vector<std::string> header = split_csv(line);
    if (header.size() < 2)
        throw std::invalid_argument(what + ": matrix header too short");
    ExactSpace sp;
    sp.provenance = "matrix:" + what;
    sp.labels.assign(header.begin() + 1, header.end());
    sp.n = int(sp.labels.size());
    sp.table.assign(std::size_t(sp.n) * sp.n, Rational(0));
    int row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        if (row >= sp.n)
            throw std::invalid_argument(what + ": more rows than labels");
        std::vector<std::string> cells = split_csv(line);
        if (int(cells.size()) != sp.n + 1)
            throw std::invalid_argument(what + ": row " + std::to_string(row + 2) +
                                        " has wrong width");
        if (cells[0] != sp.labels[row])
            throw std::invalid_argument(what + ": row label '" + cells[0] +
                                        "' does not match header order");
        for (int j = 0; j < sp.n; ++j)
            sp.table[std::size_t(row) * sp.n + j] = parse_number(cells[j + 1]);
        ++row;
    }
    if (row != sp.n)
        throw std::invalid_argument(what + ": fewer rows than labels");
    return sp;
}

inline ExactSpace load_distance_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    return read_distance_matrix_csv(in, path);
}

// ------------------------------------------------------------ Cayley CSV ---

// Rows "u,v,generator"; a leading header row with those names is skipped.
inline std::vector<GroupSpec::Edge> read_cayley_edges_csv(
    std::istream& in, const std::string& what) {
    std::vector<GroupSpec::Edge> edges;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv(line);
        if (first && cells.size() >= 2 && cells[0] == "u" && cells[1] == "v") {
            first = false;
            continue;
        }
        first = false;
        if (cells.size() < 2 || cells.size() > 3)
            throw std::invalid_argument(what + ": edge rows are u,v[,generator]");
        edges.push_back({cells[0], cells[1],
                         cells.size() == 3 ? cells[2] : std::string()});
    }
    return edges;
}

inline std::vector<GroupSpec::Edge> load_cayley_edges(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    return read_cayley_edges_csv(in, path);
}

// ---------------------------------------------------------- spec strings ---

// "free_group:2", "free_abelian:2", or "cayley:<edges.csv>"
inline GroupSpec parse_group_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string head = colon == std::string::npos ? text : text.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "free_group") return GroupSpec::free_group(std::stoi(rest));
    if (head == "free_abelian") return GroupSpec::free_abelian(std::stoi(rest));
    if (head == "cayley")
        return GroupSpec::explicit_cayley(load_cayley_edges(rest));
    throw std::invalid_argument("unknown group spec '" + text +
                                "' (free_group:k, free_abelian:n, cayley:file)");
}

// "circle:m", "lattice_box:dim:side", "sphere4"
inline AnySpace make_generated_space(const std::string& gen) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(gen);
    while (std::getline(in, cur, ':')) parts.push_back(cur);
    if (parts.empty()) throw std::invalid_argument("empty generator spec");
    if (parts[0] == "circle" && parts.size() == 2)
        return make_circle(std::stoi(parts[1]));
    if (parts[0] == "lattice_box" && parts.size() == 3)
        return make_lattice_box(std::stoi(parts[1]), std::stoi(parts[2]));
    if (parts[0] == "sphere4" && parts.size() == 1) return make_sphere4();
    throw std::invalid_argument(
        "unknown generator '" + gen +
        "' (circle:m, lattice_box:dim:side, sphere4)");
}

}  // namespace vrmorse
