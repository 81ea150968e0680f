// Vietoris-Rips sublevel complexes and the (diam, -dim) attachment order.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "budget.hpp"
#include "explicit_complex.hpp"
#include "metric.hpp"

namespace vrmorse {

// Largest pairwise distance; exact max, no eps fuzz (the result is always one
// of the table entries bit for bit, which keeps Spectrum::index_of exact).
template <class S>
typename S::V simplex_diameter(const S& sp, const Vertices& s) {
    typename S::V best = S::zero();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const auto& d = sp.dist(s[i], s[j]);
            if (best < d) best = d;
        }
    return best;
}

// All simplices of VR_t(X) with dimension <= max_dim. Cliques of the graph
// with edges d <= t, grown by lexicographic depth-first extension, so each
// dimension's list comes out already in lex order.
template <class S>
ExplicitComplex vietoris_rips(const S& sp, const typename S::V& t, int max_dim,
                              Budget* budget = nullptr) {
    if (max_dim < 0) throw std::invalid_argument("vietoris_rips: max_dim < 0");
    const int n = sp.n;
    std::vector<std::vector<int>> nbr_above(n);  // j > i with d(i,j) <= t
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sp.le(sp.dist(i, j), t)) nbr_above[i].push_back(j);

    ExplicitComplex out;
    Vertices cur;
    auto grow = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (int(cur.size()) == max_dim + 1) return;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            int v = candidates[idx];
            cur.push_back(v);
            if (budget) budget->charge();
            out.insert(cur);
            std::vector<int> next;
            for (std::size_t k = idx + 1; k < candidates.size(); ++k) {
                int w = candidates[k];
                if (std::binary_search(nbr_above[v].begin(), nbr_above[v].end(),
                                       w))
                    next.push_back(w);
            }
            self(self, next);
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    grow(grow, all);
    return out;
}

// Attachment sequence sorted by (diameter cluster, -dim, vertex lex). At
// equal diameter the higher-dimensional simplex attaches first; that is what
// makes equal-diameter cofaces "descending".
template <class S>
struct AttachmentOrder {
    std::vector<Vertices> simplices;
    std::vector<typename S::V> diam;  // parallel to simplices
    std::vector<int> spectrum_index;  // parallel; -1 never occurs for dim >= 1
};

template <class S>
AttachmentOrder<S> attachment_order(const S& sp, const ExplicitComplex& c,
                                    const Spectrum<S>& spec) {
    AttachmentOrder<S> ord;
    for (const auto& level : c.dims)
        for (const auto& s : level) {
            ord.simplices.push_back(s);
            ord.diam.push_back(simplex_diameter(sp, s));
            // vertices have diameter zero, below every spectrum value
            int si = s.size() == 1 ? -1 : spec.index_of(ord.diam.back());
            if (s.size() > 1 && si == -1)
                throw std::logic_error(
                    "attachment_order: diameter not in spectrum");
            ord.spectrum_index.push_back(si);
        }
    std::vector<std::size_t> perm(ord.simplices.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (ord.spectrum_index[a] != ord.spectrum_index[b])
            return ord.spectrum_index[a] < ord.spectrum_index[b];
        if (ord.simplices[a].size() != ord.simplices[b].size())
            return ord.simplices[a].size() > ord.simplices[b].size();
        return ord.simplices[a] < ord.simplices[b];
    });
    AttachmentOrder<S> out;
    out.simplices.reserve(perm.size());
    for (std::size_t p : perm) {
        out.simplices.push_back(ord.simplices[p]);
        out.diam.push_back(ord.diam[p]);
        out.spectrum_index.push_back(ord.spectrum_index[p]);
    }
    return out;
}

}  // namespace vrmorse
