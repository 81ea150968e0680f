// Forman-style discrete Morse functions: validation of the two cardinality
// conditions, redundant/collapsible/critical classification with its
// matching, the recast to a (h, -dim) attachment order, and verification of
// the descending-link shapes each class forces.
//
// Unlike the VR case, the descending elements of (h, -dim) need not be
// face-closed, so descending links are materialized as order complexes of
// the descending poset (chains of comparable elements), never as joins.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "explicit_complex.hpp"
#include "homology.hpp"
#include "morse.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace vrmorse {

struct FormanComplex {
    ExplicitComplex c;
    std::vector<std::vector<Rational>> h;  // parallel to c.dims

    const Rational& value(const Vertices& s) const {
        int k = int(s.size()) - 1;
        const auto& level = c.dims.at(k);
        auto it = std::lower_bound(level.begin(), level.end(), s);
        if (it == level.end() || *it != s)
            throw std::invalid_argument("forman: unknown simplex");
        return h[k][it - level.begin()];
    }

    // Build from parallel simplex/value lists in any order; every face of
    // every listed simplex must itself be listed.
    static FormanComplex from_lists(std::vector<Vertices> simplices,
                                    std::vector<Rational> values) {
        if (simplices.size() != values.size())
            throw std::invalid_argument("forman: h missing on some simplex");
        FormanComplex fc;
        std::vector<std::size_t> idx(simplices.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (simplices[a].size() != simplices[b].size())
                return simplices[a].size() < simplices[b].size();
            return simplices[a] < simplices[b];
        });
        for (std::size_t i : idx) {
            Vertices s = simplices[i];
            if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("forman: malformed simplex");
            int k = int(s.size()) - 1;
            if (int(fc.c.dims.size()) <= k) {
                fc.c.dims.resize(k + 1);
                fc.h.resize(k + 1);
            }
            if (!fc.c.dims[k].empty() && fc.c.dims[k].back() == s)
                throw std::invalid_argument("forman: duplicate simplex");
            fc.c.dims[k].push_back(std::move(s));
            fc.h[k].push_back(values[i]);
        }
        std::string why;
        if (!fc.c.face_closed(&why))
            throw std::invalid_argument("forman: " + why);
        return fc;
    }
};

// Codim-1 coface lists: for dimension k, cofaces[k][i] holds indices into
// dims[k+1] of the cofaces of dims[k][i].
inline std::vector<std::vector<std::vector<int>>> coface_table(
    const ExplicitComplex& c) {
    std::vector<std::vector<std::vector<int>>> out(c.dims.size());
    for (std::size_t k = 0; k < c.dims.size(); ++k)
        out[k].resize(c.dims[k].size());
    for (std::size_t k = 1; k < c.dims.size(); ++k)
        for (std::size_t j = 0; j < c.dims[k].size(); ++j) {
            const Vertices& s = c.dims[k][j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Vertices f;
                f.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) f.push_back(s[i]);
                auto it = std::lower_bound(c.dims[k - 1].begin(),
                                           c.dims[k - 1].end(), f);
                out[k - 1][it - c.dims[k - 1].begin()].push_back(int(j));
            }
        }
    return out;
}

struct FormanViolation {
    Vertices simplex;
    std::string what;
};

// The two cardinality conditions and their mutual exclusion: at most one
// codim-1 coface with h <= h(sigma), at most one codim-1 face with
// h >= h(sigma), never both.
inline std::vector<FormanViolation> validate_forman(const FormanComplex& fc) {
    std::vector<FormanViolation> out;
    auto cof = coface_table(fc.c);
    for (std::size_t k = 0; k < fc.c.dims.size(); ++k)
        for (std::size_t i = 0; i < fc.c.dims[k].size(); ++i) {
            const Vertices& s = fc.c.dims[k][i];
            const Rational& hs = fc.h[k][i];
            int up = 0;
            for (int j : cof[k][i])
                if (fc.h[k + 1][j] <= hs) ++up;
            int down = 0;
            if (k >= 1)
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Vertices f;
                    for (std::size_t t = 0; t < s.size(); ++t)
                        if (t != drop) f.push_back(s[t]);
                    if (fc.value(f) >= hs) ++down;
                }
            if (up > 1)
                out.push_back({s, "more than one coface with h <= h(simplex)"});
            if (down > 1)
                out.push_back({s, "more than one face with h >= h(simplex)"});
            if (up == 1 && down == 1)
                out.push_back({s, "both a low coface and a high face"});
        }
    return out;
}

enum class SimplexClass { Redundant, Collapsible, Critical };

inline const char* to_string(SimplexClass c) {
    switch (c) {
        case SimplexClass::Redundant: return "REDUNDANT";
        case SimplexClass::Collapsible: return "COLLAPSIBLE";
        case SimplexClass::Critical: return "CRITICAL";
    }
    return "?";
}

struct FormanClassification {
    std::vector<std::vector<SimplexClass>> cls;  // parallel to dims
    std::vector<std::vector<Vertices>> matched;  // empty vector for critical
    std::vector<long> critical_per_dim;

    SimplexClass of(const ExplicitComplex& c, const Vertices& s) const {
        int k = int(s.size()) - 1;
        auto it = std::lower_bound(c.dims[k].begin(), c.dims[k].end(), s);
        return cls[k][it - c.dims[k].begin()];
    }
};

inline FormanClassification classify_simplices(const FormanComplex& fc) {
    if (!validate_forman(fc).empty())
        throw std::invalid_argument("classify: invalid Forman function");
    FormanClassification out;
    auto cof = coface_table(fc.c);
    out.cls.resize(fc.c.dims.size());
    out.matched.resize(fc.c.dims.size());
    out.critical_per_dim.assign(fc.c.dims.size(), 0);
    for (std::size_t k = 0; k < fc.c.dims.size(); ++k)
        for (std::size_t i = 0; i < fc.c.dims[k].size(); ++i) {
            const Vertices& s = fc.c.dims[k][i];
            const Rational& hs = fc.h[k][i];
            Vertices partner;
            SimplexClass cl = SimplexClass::Critical;
            for (int j : cof[k][i])
                if (fc.h[k + 1][j] <= hs) {
                    cl = SimplexClass::Redundant;
                    partner = fc.c.dims[k + 1][j];
                }
            if (cl == SimplexClass::Critical && k >= 1)
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    Vertices f;
                    for (std::size_t t = 0; t < s.size(); ++t)
                        if (t != drop) f.push_back(s[t]);
                    if (fc.value(f) >= hs) {
                        cl = SimplexClass::Collapsible;
                        partner = f;
                    }
                }
            if (cl == SimplexClass::Critical) ++out.critical_per_dim[k];
            out.cls[k].push_back(cl);
            out.matched[k].push_back(std::move(partner));
        }
    return out;
}

// ------------------------------------------------------------- recast ------

struct RecastOrder {
    std::vector<Vertices> simplices;  // ascending in (h, -dim, lex)
    std::vector<Rational> h;          // parallel
    std::vector<int> value_rank;      // h's rank among the distinct values
};

// The (h, -dim) order: h ascending, higher dimension first on ties, vertex
// lists breaking the rest. Ranks realize the order type of the h values as
// integers, which is all downstream consumers need of the real embedding.
inline RecastOrder forman_attachment_order(const FormanComplex& fc) {
    RecastOrder out;
    std::vector<Rational> distinct;
    for (const auto& level : fc.h)
        distinct.insert(distinct.end(), level.begin(), level.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    struct Row {
        Vertices s;
        Rational h;
        int rank;
    };
    std::vector<Row> rows;
    for (std::size_t k = 0; k < fc.c.dims.size(); ++k)
        for (std::size_t i = 0; i < fc.c.dims[k].size(); ++i) {
            const Rational& hv = fc.h[k][i];
            int rank = int(std::lower_bound(distinct.begin(), distinct.end(),
                                            hv) -
                           distinct.begin());
            rows.push_back({fc.c.dims[k][i], hv, rank});
        }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.s.size() != b.s.size()) return a.s.size() > b.s.size();
        return a.s < b.s;
    });
    for (auto& r : rows) {
        out.simplices.push_back(std::move(r.s));
        out.h.push_back(r.h);
        out.value_rank.push_back(r.rank);
    }
    return out;
}

inline AttachmentReport verify_forman_attachment(const FormanComplex& fc) {
    RecastOrder ord = forman_attachment_order(fc);
    return verify_attachment_masks(fc.c, ord.simplices, ord.value_rank);
}

// ------------------------------------------------- descending link shapes --

struct FormanDescending {
    std::vector<Vertices> elements;  // descending faces+cofaces, (size, lex)
    ExplicitComplex order_complex;   // chains, on element indices
};

// Descending elements of sigma under (h, -dim): faces with h strictly below,
// cofaces with h less-or-equal (dimension breaks the tie in their favor).
// The link is the order complex of this poset.
inline FormanDescending forman_descending_link(const FormanComplex& fc,
                                               const Vertices& sigma) {
    FormanDescending out;
    const Rational hs = fc.value(sigma);
    const int k = int(sigma.size()) - 1;
    for (std::uint32_t mask = 1; mask + 1 < (1u << sigma.size()); ++mask) {
        Vertices f;
        for (std::size_t b = 0; b < sigma.size(); ++b)
            if (mask & (1u << b)) f.push_back(sigma[b]);
        if (fc.value(f) < hs) out.elements.push_back(std::move(f));
    }
    for (std::size_t kk = k + 1; kk < fc.c.dims.size(); ++kk)
        for (std::size_t i = 0; i < fc.c.dims[kk].size(); ++i) {
            const Vertices& chi = fc.c.dims[kk][i];
            if (std::includes(chi.begin(), chi.end(), sigma.begin(),
                              sigma.end()) &&
                fc.h[kk][i] <= hs)
                out.elements.push_back(chi);
        }
    std::sort(out.elements.begin(), out.elements.end(),
              [](const Vertices& a, const Vertices& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    // chains of the inclusion poset = cliques of its comparability graph
    const int m = int(out.elements.size());
    std::vector<std::vector<int>> nbr_above(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Vertices& a = out.elements[i];
            const Vertices& b = out.elements[j];
            const Vertices& small = a.size() <= b.size() ? a : b;
            const Vertices& big = a.size() <= b.size() ? b : a;
            if (small.size() != big.size() &&
                std::includes(big.begin(), big.end(), small.begin(),
                              small.end()))
                nbr_above[i].push_back(j);
        }
    Vertices cur;
    auto grow = [&](auto&& self, const std::vector<int>& candidates) -> void {
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            cur.push_back(candidates[idx]);
            out.order_complex.insert(cur);
            std::vector<int> next;
            for (std::size_t t = idx + 1; t < candidates.size(); ++t) {
                int w = candidates[t];
                if (std::binary_search(nbr_above[cur.back()].begin(),
                                       nbr_above[cur.back()].end(), w))
                    next.push_back(w);
            }
            self(self, next);
            cur.pop_back();
        }
    };
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    grow(grow, all);
    return out;
}

struct DescendingTypeReport {
    bool pass = true;
    Vertices simplex;
    std::string detail;
};

// What each class forces, in general (not just in the friendly pictures):
//   CRITICAL     descending set is exactly the full boundary: every proper
//                face descends, no coface does; the link is a sphere.
//   REDUNDANT    the full boundary descends, every descending coface
//                contains the matched coface, and the matched coface is a
//                cone apex, so homology vanishes. The link need not equal
//                boundary * {matched coface}: deeper cofaces can descend too.
//   COLLAPSIBLE  no coface descends, the non-descending faces all sit inside
//                the matched face, and the link is contractible (the map
//                "adjoin the vertex opposite the matched face" is a closure
//                operator into a cone). The link need not be a plain
//                "boundary minus star": which faces drop out varies.
inline DescendingTypeReport verify_descending_types(const FormanComplex& fc) {
    DescendingTypeReport rep;
    FormanClassification cls = classify_simplices(fc);
    auto fail = [&](const Vertices& s, std::string why) {
        rep.pass = false;
        rep.simplex = s;
        rep.detail = std::move(why);
    };
    for (std::size_t k = 0; k < fc.c.dims.size() && rep.pass; ++k)
        for (std::size_t i = 0; i < fc.c.dims[k].size() && rep.pass; ++i) {
            const Vertices& s = fc.c.dims[k][i];
            FormanDescending d = forman_descending_link(fc, s);
            std::vector<Vertices> faces, cofaces;
            for (const auto& e : d.elements)
                (e.size() < s.size() ? faces : cofaces).push_back(e);
            const std::size_t full_boundary =
                (std::size_t(1) << s.size()) - 2;
            std::vector<long> betti;
            if (!d.elements.empty())
                betti = betti_numbers(d.order_complex,
                                      d.order_complex.top_dim());
            auto acyclic = [&] {
                if (d.elements.empty()) return false;
                for (long b : betti)
                    if (b) return false;
                return true;
            };
            switch (cls.cls[k][i]) {
                case SimplexClass::Critical: {
                    if (!cofaces.empty()) {
                        fail(s, "critical simplex with a descending coface");
                        break;
                    }
                    if (faces.size() != full_boundary) {
                        fail(s, "critical simplex missing boundary faces");
                        break;
                    }
                    if (k >= 1) {
                        std::vector<long> want(k, 0);
                        want[k - 1] = 1;
                        std::vector<long> got = betti;
                        got.resize(std::max(got.size(), want.size()), 0);
                        want.resize(got.size(), 0);
                        if (got != want)
                            fail(s, "critical link is not a sphere");
                    } else if (!d.elements.empty()) {
                        fail(s, "critical vertex with a nonempty link");
                    }
                    break;
                }
                case SimplexClass::Redundant: {
                    const Vertices& tau = cls.matched[k][i];
                    if (faces.size() != full_boundary) {
                        fail(s, "redundant simplex missing boundary faces");
                        break;
                    }
                    bool tau_in = false;
                    bool all_contain = true;
                    for (const auto& cfc : cofaces) {
                        if (cfc == tau) tau_in = true;
                        if (!std::includes(cfc.begin(), cfc.end(),
                                           tau.begin(), tau.end()))
                            all_contain = false;
                    }
                    if (!tau_in) {
                        fail(s, "matched coface is not descending");
                        break;
                    }
                    if (!all_contain) {
                        fail(s, "descending coface avoids the matched coface");
                        break;
                    }
                    if (!acyclic()) fail(s, "redundant link not acyclic");
                    break;
                }
                case SimplexClass::Collapsible: {
                    const Vertices& fpartner = cls.matched[k][i];
                    if (!cofaces.empty()) {
                        fail(s, "collapsible simplex with a descending coface");
                        break;
                    }
                    // non-descending proper faces must sit inside the match
                    std::vector<Vertices> missing;
                    for (std::uint32_t mask = 1; mask + 1 < (1u << s.size());
                         ++mask) {
                        Vertices f;
                        for (std::size_t b = 0; b < s.size(); ++b)
                            if (mask & (1u << b)) f.push_back(s[b]);
                        if (!std::binary_search(faces.begin(), faces.end(), f,
                                                [](const Vertices& a,
                                                   const Vertices& b) {
                                                    if (a.size() != b.size())
                                                        return a.size() <
                                                               b.size();
                                                    return a < b;
                                                }))
                            missing.push_back(std::move(f));
                    }
                    bool ok = true;
                    for (const auto& f : missing)
                        if (!std::includes(fpartner.begin(), fpartner.end(),
                                           f.begin(), f.end()))
                            ok = false;
                    if (!ok) {
                        fail(s, "non-descending face outside the matched face");
                        break;
                    }
                    if (!acyclic()) fail(s, "collapsible link not acyclic");
                    break;
                }
            }
        }
    return rep;
}

// -------------------------------------------------- random valid functions --

// Build a random complex, collapse free pairs in random order, and read a
// Forman function off the collapse: core cells get h = dim, the i-th removed
// pair gets a shared value that is higher the earlier it was removed. That
// assignment always satisfies both cardinality conditions, and the intended
// class of every simplex is known by construction.
struct RandomForman {
    FormanComplex fc;
    std::vector<std::pair<Vertices, Vertices>> pairs;  // (redundant, collapsible)
    std::vector<Vertices> core;                        // critical
};

inline RandomForman random_forman(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int n = rng.range(3, 7);
    std::vector<Vertices> maximal;
    for (int v = 0; v < n; ++v) maximal.push_back({v});
    const int extra = rng.range(2, 8);
    for (int e = 0; e < extra; ++e) {
        int sz = rng.range(2, std::min(n, 4));
        Vertices f;
        while (int(f.size()) < sz) {
            int v = rng.range(0, n - 1);
            if (!std::count(f.begin(), f.end(), v)) f.push_back(v);
        }
        std::sort(f.begin(), f.end());
        maximal.push_back(std::move(f));
    }
    ExplicitComplex c = ExplicitComplex::from_maximal(maximal);

    RandomForman out;
    // collapse: a free simplex has exactly one proper coface in the current
    // complex (codim 1 and maximal then come for free)
    std::map<Vertices, bool> alive;
    for (const auto& lev : c.dims)
        for (const auto& s : lev) alive[s] = true;
    auto cofaces_alive = [&](const Vertices& f) {
        std::vector<Vertices> res;
        for (const auto& [s, on] : alive) {
            if (!on || s.size() <= f.size()) continue;
            if (std::includes(s.begin(), s.end(), f.begin(), f.end()))
                res.push_back(s);
        }
        return res;
    };
    for (;;) {
        std::vector<std::pair<Vertices, Vertices>> free_pairs;
        for (const auto& [f, on] : alive) {
            if (!on) continue;
            auto cf = cofaces_alive(f);
            if (cf.size() == 1) free_pairs.emplace_back(f, cf[0]);
        }
        if (free_pairs.empty()) break;
        auto pick = free_pairs[rng.below(free_pairs.size())];
        alive[pick.first] = false;
        alive[pick.second] = false;
        out.pairs.push_back(std::move(pick));
    }
    for (const auto& [s, on] : alive)
        if (on) out.core.push_back(s);

    std::vector<Vertices> simplices;
    std::vector<Rational> values;
    const long base = long(c.dims.size()) + 1;
    for (const auto& s : out.core) {
        simplices.push_back(s);
        values.push_back(Rational(long(s.size()) - 1));
    }
    const long m = long(out.pairs.size());
    for (long i = 0; i < m; ++i) {
        simplices.push_back(out.pairs[i].first);
        values.push_back(Rational(base + (m - i)));
        simplices.push_back(out.pairs[i].second);
        values.push_back(Rational(base + (m - i)));
    }
    out.fc = FormanComplex::from_lists(std::move(simplices), std::move(values));
    return out;
}

}  // namespace vrmorse
