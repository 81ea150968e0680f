// Small explicit simplicial complexes: per-dimension sorted simplex lists.
// The carrier for descending links, sublevel complexes, and Forman input.
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "budget.hpp"

namespace vrmorse {

using Vertices = std::vector<int>;  // strictly increasing

struct ExplicitComplex {
    // dims[k] holds the k-simplices, each a sorted vertex list; every
    // dims[k] is itself sorted lexicographically.
    std::vector<std::vector<Vertices>> dims;

    bool empty() const {
        for (const auto& layer : dims)
            if (!layer.empty()) return false;
        return true;
    }
    int top_dim() const {
        for (int k = int(dims.size()) - 1; k >= 0; --k)
            if (!dims[k].empty()) return k;
        return -1;
    }
    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& layer : dims) s += layer.size();
        return s;
    }
    bool contains(const Vertices& s) const {
        int k = int(s.size()) - 1;
        if (k < 0 || k >= int(dims.size())) return false;
        return std::binary_search(dims[k].begin(), dims[k].end(), s);
    }

    void insert(Vertices s) {
        int k = int(s.size()) - 1;
        if (k < 0) throw std::invalid_argument("complex: empty simplex");
        if (k >= int(dims.size())) dims.resize(k + 1);
        dims[k].push_back(std::move(s));
    }

    void sort_dedup() {
        for (auto& layer : dims) {
            std::sort(layer.begin(), layer.end());
            layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        }
    }

    // Every codimension-1 face of every simplex must be present.
    bool face_closed(std::string* why = nullptr) const {
        for (std::size_t k = 1; k < dims.size(); ++k)
            for (const auto& s : dims[k])
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Vertices f;
                    f.reserve(s.size() - 1);
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) f.push_back(s[i]);
                    if (!contains(f)) {
                        if (why) {
                            *why = "missing face of a " + std::to_string(k) +
                                   "-simplex";
                        }
                        return false;
                    }
                }
        return true;
    }

    static ExplicitComplex from_maximal(
        const std::vector<Vertices>& maximal, Budget* budget = nullptr) {
        std::set<Vertices> faces;
        for (Vertices m : maximal) {
            std::sort(m.begin(), m.end());
            m.erase(std::unique(m.begin(), m.end()), m.end());
            // all nonempty subsets
            std::size_t full = std::size_t(1) << m.size();
            for (std::size_t mask = 1; mask < full; ++mask) {
                Vertices f;
                for (std::size_t b = 0; b < m.size(); ++b)
                    if (mask & (std::size_t(1) << b)) f.push_back(m[b]);
                if (faces.insert(std::move(f)).second && budget)
                    budget->charge();
            }
        }
        ExplicitComplex out;
        for (const auto& f : faces) out.insert(f);
        out.sort_dedup();
        return out;
    }
};

inline ExplicitComplex cone(const ExplicitComplex& c, int apex) {
    ExplicitComplex out = c;
    out.insert({apex});
    for (const auto& layer : c.dims)
        for (const auto& s : layer) {
            if (std::binary_search(s.begin(), s.end(), apex))
                throw std::invalid_argument("cone: apex already a vertex");
            Vertices t = s;
            t.push_back(apex);
            std::sort(t.begin(), t.end());
            out.insert(std::move(t));
        }
    out.sort_dedup();
    return out;
}

// Simplicial join: all unions s (from a) with t (from b), plus both factors.
// Vertex sets must be disjoint.
inline ExplicitComplex join(const ExplicitComplex& a, const ExplicitComplex& b,
                            Budget* budget = nullptr) {
    ExplicitComplex out;
    for (const auto& layer : a.dims)
        for (const auto& s : layer) {
            out.insert(s);
            if (budget) budget->charge();
        }
    for (const auto& layer : b.dims)
        for (const auto& t : layer) {
            out.insert(t);
            if (budget) budget->charge();
        }
    for (const auto& la : a.dims)
        for (const auto& s : la)
            for (const auto& lb : b.dims)
                for (const auto& t : lb) {
                    Vertices u = s;
                    u.insert(u.end(), t.begin(), t.end());
                    std::sort(u.begin(), u.end());
                    if (std::adjacent_find(u.begin(), u.end()) != u.end())
                        throw std::invalid_argument("join: vertex sets overlap");
                    out.insert(std::move(u));
                    if (budget) budget->charge();
                }
    out.sort_dedup();
    return out;
}

}  // namespace vrmorse
