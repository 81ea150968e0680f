// Finite metric spaces with three comparison regimes.
//
// The Morse function and the descending-coface definition hinge on exact
// diameter ties, so equality semantics live with the space, not the caller:
//
//   ExactSpace    rational distances, compared exactly (circle samples,
//                 rational distance matrices)
//   SquaredSpace  rational *squared* distances, compared exactly; predicates
//                 that mix addition and square roots are evaluated as
//                 polynomial inequalities in the squares (lattices, rational
//                 point clouds)
//   ApproxSpace   doubles with a declared eps; a == b means |a-b| <= eps
//                 (sphere samples, general point clouds)
//
// Every algorithm downstream is templated on the space type and only talks
// through dist()/eq()/lt()/le()/tri_le()/lt_pinched().
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "rational.hpp"

namespace vrmorse {

namespace detail {
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace detail

struct ExactSpace {
    using V = Rational;
    static constexpr bool kSquared = false;
    static constexpr const char* kKind = "exact";

    std::vector<std::string> labels;
    std::string provenance;
    int n = 0;
    std::vector<Rational> table;  // row-major n*n

    const V& dist(int i, int j) const { return table[std::size_t(i) * n + j]; }
    static V zero() { return Rational(0); }
    bool eq(const V& a, const V& b) const { return a == b; }
    bool lt(const V& a, const V& b) const { return a < b; }
    bool le(const V& a, const V& b) const { return a <= b; }
    // a <= b + c, all plain distances
    bool tri_le(const V& a, const V& b, const V& c) const { return a <= b + c; }
    // a < t - r, for the pinched criterion
    bool lt_pinched(const V& a, const V& t, const V& r) const {
        return a < t - r;
    }
    std::string fmt(const V& v) const { return v.str(); }
};

struct SquaredSpace {
    using V = Rational;
    static constexpr bool kSquared = true;
    static constexpr const char* kKind = "exact_squared";

    std::vector<std::string> labels;
    std::string provenance;
    int n = 0;
    std::vector<Rational> table;  // squared distances

    const V& dist(int i, int j) const { return table[std::size_t(i) * n + j]; }
    static V zero() { return Rational(0); }
    bool eq(const V& a, const V& b) const { return a == b; }
    bool lt(const V& a, const V& b) const { return a < b; }  // squares order-preserve
    bool le(const V& a, const V& b) const { return a <= b; }
    // sqrt(a) <= sqrt(b) + sqrt(c)  <=>  a <= b+c, or (a-b-c)^2 <= 4bc
    bool tri_le(const V& a, const V& b, const V& c) const {
        Rational s = a - b - c;
        if (s <= Rational(0)) return true;
        return s * s <= Rational(4) * b * c;
    }
    // sqrt(a) < sqrt(t) - sqrt(r)  <=>  t-a-r > 0 and 4ar < (t-a-r)^2
    bool lt_pinched(const V& a, const V& t, const V& r) const {
        if (r == Rational(0)) return a < t;
        Rational s = t - a - r;
        if (s <= Rational(0)) return false;
        return Rational(4) * a * r < s * s;
    }
    std::string fmt(const V& v) const { return v.str(); }
};

struct ApproxSpace {
    using V = double;
    static constexpr bool kSquared = false;
    static constexpr const char* kKind = "approx";

    std::vector<std::string> labels;
    std::string provenance;
    int n = 0;
    std::vector<double> table;
    double eps = 1e-9;

    V dist(int i, int j) const { return table[std::size_t(i) * n + j]; }
    static V zero() { return 0.0; }
    bool eq(V a, V b) const { return std::fabs(a - b) <= eps; }
    bool lt(V a, V b) const { return a < b - eps; }
    bool le(V a, V b) const { return a <= b + eps; }
    bool tri_le(V a, V b, V c) const { return a <= b + c + eps; }
    bool lt_pinched(V a, V t, V r) const { return lt(a, t - r); }
    std::string fmt(V v) const { return detail::fmt_double(v); }
};

using AnySpace = std::variant<ExactSpace, SquaredSpace, ApproxSpace>;

// ------------------------------------------------------------ validation ---

struct MetricReport {
    bool ok = true;
    std::vector<std::string> problems;
};

template <class S>
MetricReport validate_metric(const S& sp) {
    MetricReport rep;
    auto flag = [&](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };
    if (int(sp.labels.size()) != sp.n ||
        sp.table.size() != std::size_t(sp.n) * sp.n) {
        flag("table/label size mismatch");
        return rep;
    }
    for (int i = 0; i < sp.n; ++i) {
        if (!sp.eq(sp.dist(i, i), S::zero()))
            flag("nonzero self-distance at " + sp.labels[i]);
        for (int j = i + 1; j < sp.n; ++j) {
            if (!sp.eq(sp.dist(i, j), sp.dist(j, i)))
                flag("asymmetry at (" + sp.labels[i] + "," + sp.labels[j] + ")");
            if (sp.lt(sp.dist(i, j), S::zero()))
                flag("negative distance at (" + sp.labels[i] + "," +
                     sp.labels[j] + ")");
        }
    }
    for (int i = 0; i < sp.n && rep.problems.size() < 64; ++i)
        for (int j = 0; j < sp.n; ++j) {
            if (j == i) continue;
            for (int k = 0; k < sp.n; ++k) {
                if (k == i || k == j) continue;
                if (!sp.tri_le(sp.dist(i, k), sp.dist(i, j), sp.dist(j, k))) {
                    flag("triangle violation at (" + sp.labels[i] + "," +
                         sp.labels[k] + "," + sp.labels[j] + ")");
                    break;
                }
            }
        }
    return rep;
}

// ------------------------------------------------------------- spectrum ----

// Distinct pairwise distances, ascending. For approx spaces, values within
// eps of each other are chained into one cluster represented by its smallest
// member; every diameter of a subset is a table entry, so index_of can look
// values up exactly.
template <class S>
struct Spectrum {
    using V = typename S::V;
    std::vector<V> values;               // cluster representatives, ascending
    std::vector<std::pair<V, int>> raw;  // sorted raw value -> cluster index
    bool has_min_gap = false;
    V min_gap{};

    int index_of(const V& d) const {
        auto it = std::lower_bound(
            raw.begin(), raw.end(), d,
            [](const std::pair<V, int>& p, const V& v) { return p.first < v; });
        if (it == raw.end() || !(it->first == d)) return -1;
        return it->second;
    }
};

template <class S>
Spectrum<S> diameter_spectrum(const S& sp) {
    using V = typename S::V;
    Spectrum<S> out;
    std::vector<V> vals;
    for (int i = 0; i < sp.n; ++i)
        for (int j = i + 1; j < sp.n; ++j) vals.push_back(sp.dist(i, j));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (const V& v : vals) {
        if (!out.values.empty() && sp.eq(out.values.back(), v)) {
            // same cluster under eps; representative stays the first seen.
            // chain clustering: the representative is within eps of the
            // previous member, which keeps clusters unambiguous for values
            // that actually occur in the table.
        } else {
            out.values.push_back(v);
        }
        out.raw.emplace_back(v, int(out.values.size()) - 1);
    }
    if (out.values.size() >= 2) {
        out.has_min_gap = true;
        out.min_gap = out.values[1] - out.values[0];
        for (std::size_t k = 2; k < out.values.size(); ++k) {
            V g = out.values[k] - out.values[k - 1];
            if (g < out.min_gap) out.min_gap = g;
        }
    }
    return out;
}

// ------------------------------------------------------------ generators ---

// m evenly spaced points on a circle of circumference 1, arclength metric.
inline ExactSpace make_circle(int m) {
    if (m < 3) throw std::invalid_argument("circle: need at least 3 points");
    ExactSpace sp;
    sp.n = m;
    sp.provenance = "circle(" + std::to_string(m) + ")";
    sp.labels.reserve(m);
    for (int i = 0; i < m; ++i) sp.labels.push_back("p" + std::to_string(i));
    sp.table.assign(std::size_t(m) * m, Rational(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int k = std::abs(i - j);
            k = std::min(k, m - k);
            sp.table[std::size_t(i) * m + j] = Rational(k, m);
        }
    return sp;
}

// Integer grid {0..side-1}^dim with euclidean metric, stored squared.
inline SquaredSpace make_lattice_box(int dim, int side) {
    if (dim < 1 || side < 1) throw std::invalid_argument("lattice_box: bad size");
    long long count = 1;
    for (int i = 0; i < dim; ++i) {
        count *= side;
        if (count > 100000) throw std::invalid_argument("lattice_box: too large");
    }
    SquaredSpace sp;
    sp.n = int(count);
    sp.provenance =
        "lattice_box(" + std::to_string(dim) + "," + std::to_string(side) + ")";
    std::vector<std::vector<int>> pts;
    pts.reserve(sp.n);
    std::vector<int> cur(dim, 0);
    for (;;) {
        pts.push_back(cur);
        int k = dim - 1;
        while (k >= 0 && ++cur[k] == side) cur[k--] = 0;
        if (k < 0) break;
    }
    for (const auto& p : pts) {
        std::string lab = "(";
        for (int i = 0; i < dim; ++i)
            lab += std::to_string(p[i]) + (i + 1 < dim ? "," : ")");
        sp.labels.push_back(lab);
    }
    sp.table.assign(std::size_t(sp.n) * sp.n, Rational(0));
    for (int i = 0; i < sp.n; ++i)
        for (int j = 0; j < sp.n; ++j) {
            long long s = 0;
            for (int k = 0; k < dim; ++k) {
                long long d = pts[i][k] - pts[j][k];
                s += d * d;
            }
            sp.table[std::size_t(i) * sp.n + j] = Rational(s);
        }
    return sp;
}

// Unit vectors on a round sphere; distance = angle normalized so antipodal
// points are 1/2 apart.
inline ApproxSpace make_sphere(const std::vector<std::vector<double>>& pts,
                               std::vector<std::string> labels = {},
                               double eps = 1e-9) {
    if (pts.empty()) throw std::invalid_argument("sphere: empty point list");
    std::size_t dim = pts[0].size();
    ApproxSpace sp;
    sp.eps = eps;
    sp.n = int(pts.size());
    sp.provenance = "sphere(" + std::to_string(sp.n) + " points)";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != dim)
            throw std::invalid_argument("sphere: dimension mismatch");
        double norm2 = 0;
        for (double c : pts[i]) norm2 += c * c;
        if (std::fabs(norm2 - 1.0) > 1e-6)
            throw std::invalid_argument("sphere: point not on the unit sphere");
        sp.labels.push_back(labels.size() > i ? labels[i]
                                              : "s" + std::to_string(i));
    }
    const double two_pi = 8.0 * std::atan(1.0);
    sp.table.assign(std::size_t(sp.n) * sp.n, 0.0);
    for (int i = 0; i < sp.n; ++i)
        for (int j = 0; j < sp.n; ++j) {
            double dot = 0;
            for (std::size_t k = 0; k < dim; ++k) dot += pts[i][k] * pts[j][k];
            dot = std::clamp(dot, -1.0, 1.0);
            sp.table[std::size_t(i) * sp.n + j] = std::acos(dot) / two_pi;
        }
    for (int i = 0; i < sp.n; ++i) sp.table[std::size_t(i) * sp.n + i] = 0.0;
    return sp;
}

// The 4-point sphere sample from the equator-failure analysis: two orthogonal
// equator points, then the poles.
inline ApproxSpace make_sphere4() {
    ApproxSpace sp = make_sphere(
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, -1}}, {"e0", "e1", "N", "S"});
    sp.provenance = "sphere4";
    return sp;
}

}  // namespace vrmorse
