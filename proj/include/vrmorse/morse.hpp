// The Morse function (diam, -dim) on a Vietoris-Rips complex: descending
// face/coface links, their classification (cone witnesses with a homology
// fallback), and verification of the attachment property on finite complexes.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "budget.hpp"
#include "explicit_complex.hpp"
#include "homology.hpp"
#include "metric.hpp"
#include "vr_complex.hpp"

namespace vrmorse {

template <class S>
std::pair<typename S::V, int> morse_value(const S& sp, const Vertices& s) {
    return {simplex_diameter(sp, s), -(int(s.size()) - 1)};
}

// Proper nonempty faces of sigma with strictly smaller diameter. Diameter is
// monotone under inclusion, so the result is face-closed automatically.
template <class S>
ExplicitComplex descending_face_link(const S& sp, const Vertices& sigma) {
    ExplicitComplex out;
    const auto t = simplex_diameter(sp, sigma);
    const int k = int(sigma.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        Vertices f;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) f.push_back(sigma[b]);
        if (sp.lt(simplex_diameter(sp, f), t)) out.insert(f);
    }
    out.sort_dedup();
    return out;
}

// W = {w outside sigma with max_f d(w,f) <= diam sigma}, plus the pairs of W
// at distance <= diam sigma. Descending cofaces of sigma are exactly
// sigma union S for nonempty cliques S of this graph. W ranges over the
// whole space, not just points within some ambient scale: a coface at equal
// diameter is automatically inside any sublevel complex containing sigma.
struct CofaceData {
    std::vector<int> W;
    std::vector<std::pair<int, int>> edges;  // indices into W
};

template <class S>
CofaceData descending_coface_data(const S& sp, const Vertices& sigma) {
    CofaceData out;
    const auto t = simplex_diameter(sp, sigma);
    for (int w = 0; w < sp.n; ++w) {
        if (std::binary_search(sigma.begin(), sigma.end(), w)) continue;
        bool close = true;
        for (int f : sigma)
            if (!sp.le(sp.dist(w, f), t)) {
                close = false;
                break;
            }
        if (close) out.W.push_back(w);
    }
    for (std::size_t i = 0; i < out.W.size(); ++i)
        for (std::size_t j = i + 1; j < out.W.size(); ++j)
            if (sp.le(sp.dist(out.W[i], out.W[j]), t))
                out.edges.emplace_back(int(i), int(j));
    return out;
}

// Cliques of the graph (W, edges), sizes 1..max_size, as a complex on the
// original point ids.
inline ExplicitComplex coface_flag_complex(const CofaceData& cd, int max_size,
                                           Budget* budget = nullptr) {
    const int m = int(cd.W.size());
    std::vector<std::vector<int>> nbr_above(m);
    for (auto [i, j] : cd.edges) nbr_above[i].push_back(j);
    ExplicitComplex out;
    Vertices cur;  // indices into W
    auto grow = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (int(cur.size()) == max_size) return;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            int v = candidates[idx];
            cur.push_back(v);
            if (budget) budget->charge();
            Vertices named;
            named.reserve(cur.size());
            for (int c : cur) named.push_back(cd.W[c]);
            out.insert(named);
            std::vector<int> next;
            for (std::size_t k = idx + 1; k < candidates.size(); ++k) {
                int w = candidates[k];
                if (std::binary_search(nbr_above[v].begin(),
                                       nbr_above[v].end(), w))
                    next.push_back(w);
            }
            self(self, next);
            cur.pop_back();
        }
    };
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    grow(grow, all);
    return out;  // W is ascending, so per-dimension lists are lex sorted
}

// Join of the descending face subcomplex and the coface flag complex,
// truncated to dimension <= dim_cap. The two vertex sets are disjoint
// (faces live inside sigma, W outside), so unions are genuine simplices.
inline ExplicitComplex join_truncated(const ExplicitComplex& a,
                                      const ExplicitComplex& b, int dim_cap,
                                      Budget* budget = nullptr) {
    ExplicitComplex out;
    auto emit = [&](const Vertices& v) {
        if (int(v.size()) > dim_cap + 1) return;
        if (budget) budget->charge();
        out.insert(v);
    };
    for (const auto& lev : a.dims)
        for (const auto& s : lev) emit(s);
    for (const auto& lev : b.dims)
        for (const auto& s : lev) emit(s);
    for (const auto& la : a.dims)
        for (const auto& sa : la)
            for (const auto& lb : b.dims)
                for (const auto& sb : lb) {
                    if (int(sa.size() + sb.size()) > dim_cap + 1) continue;
                    Vertices u;
                    u.reserve(sa.size() + sb.size());
                    std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(),
                               std::back_inserter(u));
                    emit(u);
                }
    out.sort_dedup();
    return out;
}

constexpr int kGlobalHomologyCap = 7;

struct DLinkClassification {
    enum class Kind { ConeFace, ConeCoface, Acyclic, Nontrivial, Empty };
    Kind kind = Kind::Empty;
    int witness = -1;          // point id for the two cone kinds
    std::vector<long> betti;   // filled for Acyclic / Nontrivial
    int homology_cap = -1;     // cap actually used by the fallback
};

inline const char* to_string(DLinkClassification::Kind k) {
    switch (k) {
        case DLinkClassification::Kind::ConeFace: return "CONE_FACE";
        case DLinkClassification::Kind::ConeCoface: return "CONE_COFACE";
        case DLinkClassification::Kind::Acyclic: return "ACYCLIC";
        case DLinkClassification::Kind::Nontrivial: return "NONTRIVIAL";
        case DLinkClassification::Kind::Empty: return "EMPTY";
    }
    return "?";
}

// Witness search first (cheap and certifying), homology fallback second.
// Face witness z in sigma: every f in sigma lies strictly within diam(sigma)
// of z; then tau -> tau u {z} cones the face part, and {z} itself is a
// descending face, so the whole join is a cone. Coface witness z in W:
// d(z,w) <= diam(sigma) for all w in W; then z cones the flag part and the
// join. Both searches report the smallest point id. Vertices (diameter 0)
// never admit a witness and fall through to EMPTY.
template <class S>
DLinkClassification classify_descending_link(const S& sp,
                                             const Vertices& sigma,
                                             int homology_cap = -1,
                                             Budget* budget = nullptr) {
    DLinkClassification out;
    const auto t = simplex_diameter(sp, sigma);
    for (int z : sigma) {
        bool ok = true;
        for (int f : sigma)
            if (!sp.lt(sp.dist(z, f), t)) {
                ok = false;
                break;
            }
        if (ok) {
            out.kind = DLinkClassification::Kind::ConeFace;
            out.witness = z;
            return out;
        }
    }
    CofaceData cd = descending_coface_data(sp, sigma);
    std::vector<int> degree(cd.W.size(), 0);
    for (auto [i, j] : cd.edges) {
        ++degree[i];
        ++degree[j];
    }
    for (std::size_t i = 0; i < cd.W.size(); ++i)
        if (degree[i] + 1 == int(cd.W.size())) {
            out.kind = DLinkClassification::Kind::ConeCoface;
            out.witness = cd.W[i];
            return out;
        }
    ExplicitComplex faces = descending_face_link(sp, sigma);
    ExplicitComplex flags =
        coface_flag_complex(cd, kGlobalHomologyCap + 2, budget);
    if (faces.empty() && flags.empty()) {
        out.kind = DLinkClassification::Kind::Empty;
        return out;
    }
    int cap = homology_cap;
    if (cap < 0)
        cap = std::min(faces.top_dim() + flags.top_dim() + 1,
                       kGlobalHomologyCap);
    out.homology_cap = cap;
    ExplicitComplex link = join_truncated(faces, flags, cap + 1, budget);
    out.betti = betti_numbers(link, cap);
    bool zero = true;
    for (long b : out.betti)
        if (b) zero = false;
    out.kind = zero ? DLinkClassification::Kind::Acyclic
                    : DLinkClassification::Kind::Nontrivial;
    return out;
}

// Materialized descending link without classification, for inspection and
// for the join-correctness tests.
template <class S>
ExplicitComplex descending_link(const S& sp, const Vertices& sigma,
                                int dim_cap = kGlobalHomologyCap + 1,
                                Budget* budget = nullptr) {
    ExplicitComplex faces = descending_face_link(sp, sigma);
    ExplicitComplex flags = coface_flag_complex(
        descending_coface_data(sp, sigma), dim_cap + 1, budget);
    return join_truncated(faces, flags, dim_cap, budget);
}

// ------------------------------------------------- attachment verification --

struct AttachmentReport {
    bool pass = true;
    std::string detail;  // empty iff pass
    Vertices simplex;    // failing sigma, if any
    Vertices other;      // the neighbor that was attached at the wrong time
};

// Mask-based core of the attachment check, shared between the (diam, -dim)
// order on VR complexes and the (h, -dim) order of a Forman recast. For each
// simplex, the earlier-attached faces/cofaces must be exactly the descending
// ones: faces with strictly smaller value rank, cofaces with rank <= (a
// coface of equal rank attaches first because dimension breaks the tie the
// other way). Exponential in the number of vertices in play, which is fine
// for the desk-scale complexes it is meant for.
inline AttachmentReport verify_attachment_masks(
    const ExplicitComplex& c, const std::vector<Vertices>& order,
    const std::vector<int>& value_rank) {
    AttachmentReport rep;
    auto fail = [&](const Vertices& s, const Vertices& o, std::string why) {
        rep.pass = false;
        rep.simplex = s;
        rep.other = o;
        rep.detail = std::move(why);
    };
    if (order.size() != c.size() || order.size() != value_rank.size())
        throw std::invalid_argument(
            "attachment order is not a permutation of the complex");
    std::vector<int> universe;
    if (!c.dims.empty())
        for (const auto& v : c.dims[0]) universe.push_back(v[0]);
    if (universe.size() > 25)
        throw std::invalid_argument(
            "attachment verification is exponential in the vertex count");
    std::unordered_map<int, int> bit_of;
    for (std::size_t b = 0; b < universe.size(); ++b)
        bit_of[universe[b]] = int(b);
    auto mask_of = [&](const Vertices& s) {
        std::uint32_t m = 0;
        for (int v : s) {
            auto it = bit_of.find(v);
            if (it == bit_of.end())
                throw std::invalid_argument(
                    "order mentions a vertex outside the complex");
            m |= std::uint32_t(1) << it->second;
        }
        return m;
    };
    const std::uint32_t full =
        std::uint32_t((std::uint64_t(1) << universe.size()) - 1);
    std::unordered_map<std::uint32_t, int> pos;   // mask -> order position
    std::unordered_map<std::uint32_t, int> rank;  // mask -> value rank
    std::vector<std::uint32_t> mask_at(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::uint32_t m = mask_of(order[k]);
        if (!pos.emplace(m, int(k)).second)
            throw std::invalid_argument("order repeats a simplex");
        if (!c.contains(order[k]))
            throw std::invalid_argument("order mentions a missing simplex");
        rank[m] = value_rank[k];
        mask_at[k] = m;
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Vertices& sig = order[k];
        const std::uint32_t m = mask_at[k];
        const int rsig = rank[m];
        auto unmask = [&](std::uint32_t x) {
            Vertices v;
            for (std::size_t b = 0; b < universe.size(); ++b)
                if (x & (std::uint32_t(1) << b)) v.push_back(universe[b]);
            return v;
        };
        // proper nonempty sub-simplices
        for (std::uint32_t sub = (m - 1) & m; sub; sub = (sub - 1) & m) {
            auto it = pos.find(sub);
            if (it == pos.end()) continue;
            bool before = it->second < int(k);
            bool descending = rank[sub] < rsig;
            if (before != descending) {
                fail(sig, unmask(sub),
                     descending ? "descending face attached late"
                                : "non-descending face attached early");
                return rep;
            }
        }
        // proper cofaces within the complex
        const std::uint32_t comp = full & ~m;
        for (std::uint32_t add = comp; add; add = (add - 1) & comp) {
            auto it = pos.find(m | add);
            if (it == pos.end()) continue;
            bool before = it->second < int(k);
            bool descending = rank[m | add] <= rsig;
            if (before != descending) {
                fail(sig, unmask(m | add),
                     descending ? "descending coface attached late"
                                : "non-descending coface attached early");
                return rep;
            }
        }
    }
    return rep;
}

// The VR attachment check: value ranks are diameter clusters, recomputed
// from the space rather than read off the order, so a corrupted order cannot
// vouch for itself.
template <class S>
AttachmentReport verify_attachment_property(const S& sp,
                                            const ExplicitComplex& c,
                                            const AttachmentOrder<S>& order) {
    Spectrum<S> spec = diameter_spectrum(sp);
    std::vector<int> rank;
    rank.reserve(order.simplices.size());
    for (const auto& s : order.simplices)
        rank.push_back(s.size() == 1
                           ? -1
                           : spec.index_of(simplex_diameter(sp, s)));
    return verify_attachment_masks(c, order.simplices, rank);
}

}  // namespace vrmorse
