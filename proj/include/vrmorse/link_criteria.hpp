// The Link Criterion for finite subsets, the Strong Link Criterion at a
// scale, its r-pinched variant, and scale-range scans with three-valued
// verdicts (certified / refuted by explicit subset / unknown).
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "metric.hpp"
#include "vr_complex.hpp"

namespace vrmorse {

// ------------------------------------------------------- single subsets ----

struct SubsetVerdict {
    enum class Status { SatisfiedFace, SatisfiedCoface, Failed };
    Status status = Status::Failed;
    int witness = -1;
};

inline const char* to_string(SubsetVerdict::Status s) {
    switch (s) {
        case SubsetVerdict::Status::SatisfiedFace: return "SATISFIED_FACE";
        case SubsetVerdict::Status::SatisfiedCoface: return "SATISFIED_COFACE";
        case SubsetVerdict::Status::Failed: return "FAILED";
    }
    return "?";
}

// Points within closed t-balls around every member of F, ascending.
template <class S>
std::vector<int> lens_of(const S& sp, const Vertices& F,
                         const typename S::V& t) {
    std::vector<int> lens;
    for (int w = 0; w < sp.n; ++w) {
        bool in = true;
        for (int f : F)
            if (!sp.le(sp.dist(w, f), t)) {
                in = false;
                break;
            }
        if (in) lens.push_back(w);
    }
    return lens;
}

// Face case: some z in F sees all of F strictly within diam(F) (open ball).
// Coface case: some z outside F whose closed diam(F)-ball contains the whole
// lens of F. Smallest witness index wins; face witnesses are searched first.
template <class S>
SubsetVerdict link_criterion(const S& sp, const Vertices& F) {
    SubsetVerdict out;
    if (F.empty()) throw std::invalid_argument("link_criterion: empty subset");
    for (int f : F)
        if (f < 0 || f >= sp.n)
            throw std::invalid_argument("link_criterion: F is not a subset");
    if (F.size() == 1) {
        out.status = SubsetVerdict::Status::SatisfiedFace;
        out.witness = F[0];
        return out;
    }
    const auto t = simplex_diameter(sp, F);
    for (int z : F) {
        bool ok = true;
        for (int f : F)
            if (!sp.lt(sp.dist(z, f), t)) {
                ok = false;
                break;
            }
        if (ok) {
            out.status = SubsetVerdict::Status::SatisfiedFace;
            out.witness = z;
            return out;
        }
    }
    const std::vector<int> lens = lens_of(sp, F, t);
    for (int z = 0; z < sp.n; ++z) {
        if (std::binary_search(F.begin(), F.end(), z)) continue;
        bool ok = true;
        for (int w : lens)
            if (!sp.le(sp.dist(z, w), t)) {
                ok = false;
                break;
            }
        if (ok) {
            out.status = SubsetVerdict::Status::SatisfiedCoface;
            out.witness = z;
            return out;
        }
    }
    return out;
}

// ------------------------------------------------------- per-scale sweep ---

struct PairWitness {
    int x = -1, y = -1, z = -1;
};

template <class S>
struct StrongVerdict {
    bool certified = true;
    std::vector<PairWitness> witnesses;  // one per realizing pair, lex order
    // diagnostics for the first failing pair
    std::pair<int, int> failing_pair{-1, -1};
    std::vector<int> lens;
    std::pair<int, int> widest_lens_pair{-1, -1};
    typename S::V widest_dist{};
};

// For every pair x,y with d(x,y) = t, find z whose open B_{t-r}(z) contains
// the closed-ball lens of the pair. r = 0 is the plain strong criterion.
template <class S>
StrongVerdict<S> pinched_strong_link_criterion(const S& sp,
                                               const typename S::V& t,
                                               const typename S::V& r) {
    if (r < S::zero())
        throw std::invalid_argument("pinched criterion: negative r");
    StrongVerdict<S> out;
    for (int x = 0; x < sp.n && out.certified; ++x)
        for (int y = x + 1; y < sp.n; ++y) {
            if (!sp.eq(sp.dist(x, y), t)) continue;
            const std::vector<int> lens = lens_of(sp, Vertices{x, y}, t);
            int found = -1;
            for (int z = 0; z < sp.n && found < 0; ++z) {
                bool ok = true;
                for (int w : lens)
                    if (!sp.lt_pinched(sp.dist(z, w), t, r)) {
                        ok = false;
                        break;
                    }
                if (ok) found = z;
            }
            if (found >= 0) {
                out.witnesses.push_back({x, y, found});
                continue;
            }
            out.certified = false;
            out.witnesses.clear();
            out.failing_pair = {x, y};
            out.lens = lens;
            for (std::size_t i = 0; i < lens.size(); ++i)
                for (std::size_t j = i + 1; j < lens.size(); ++j) {
                    const auto& d = sp.dist(lens[i], lens[j]);
                    if (out.widest_lens_pair.first < 0 ||
                        out.widest_dist < d) {
                        out.widest_lens_pair = {lens[i], lens[j]};
                        out.widest_dist = d;
                    }
                }
            break;
        }
    return out;
}

template <class S>
StrongVerdict<S> strong_link_criterion_at_scale(const S& sp,
                                                const typename S::V& t) {
    return pinched_strong_link_criterion(sp, t, S::zero());
}

// ------------------------------------------------------------ range scan ---

enum class ScanStatus { Certified, Refuted, Unknown };

inline const char* to_string(ScanStatus s) {
    switch (s) {
        case ScanStatus::Certified: return "CERTIFIED";
        case ScanStatus::Refuted: return "REFUTED";
        case ScanStatus::Unknown: return "UNKNOWN";
    }
    return "?";
}

template <class S>
struct ScanEntry {
    typename S::V scale{};
    ScanStatus status = ScanStatus::Unknown;
    StrongVerdict<S> strong;
    // for Refuted: first link-criterion failure per subset size (ascending
    // size, lexicographic within a size); refuting_subset is the first one
    Vertices refuting_subset;
    std::vector<std::pair<int, Vertices>> failures_by_size;
};

// Subsets of diameter exactly t are cliques of the d<=t graph realizing t;
// enumerate them in lex order per size via the usual DFS and probe each with
// the link criterion. Stops once every size up to the cap has a failure.
template <class S>
void refuting_subsets(const S& sp, const typename S::V& t,
                      int max_subset_size, ScanEntry<S>& entry) {
    const int n = sp.n;
    std::vector<std::vector<int>> nbr_above(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sp.le(sp.dist(i, j), t)) nbr_above[i].push_back(j);
    std::vector<std::optional<Vertices>> by_size(max_subset_size + 1);
    int missing = max_subset_size - 1;  // sizes 2..max
    Vertices cur;
    auto grow = [&](auto&& self, const std::vector<int>& candidates) -> void {
        if (missing == 0) return;
        if (int(cur.size()) == max_subset_size) return;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            cur.push_back(candidates[idx]);
            const int sz = int(cur.size());
            if (sz >= 2 && !by_size[sz] &&
                sp.eq(simplex_diameter(sp, cur), t) &&
                link_criterion(sp, cur).status ==
                    SubsetVerdict::Status::Failed) {
                by_size[sz] = cur;
                --missing;
                if (missing == 0) {
                    cur.pop_back();
                    return;
                }
            }
            std::vector<int> next;
            for (std::size_t k = idx + 1; k < candidates.size(); ++k) {
                int w = candidates[k];
                if (std::binary_search(nbr_above[cur.back()].begin(),
                                       nbr_above[cur.back()].end(), w))
                    next.push_back(w);
            }
            self(self, next);
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    grow(grow, all);
    for (int sz = 2; sz <= max_subset_size; ++sz)
        if (by_size[sz]) {
            if (entry.refuting_subset.empty()) entry.refuting_subset = *by_size[sz];
            entry.failures_by_size.emplace_back(sz, *by_size[sz]);
        }
    entry.status = entry.refuting_subset.empty() ? ScanStatus::Unknown
                                                 : ScanStatus::Refuted;
}

template <class S>
std::vector<ScanEntry<S>> criterion_range_scan(
    const S& sp, const std::vector<typename S::V>& scales,
    int max_subset_size = 4) {
    if (max_subset_size < 2)
        throw std::invalid_argument("range scan: max_subset_size < 2");
    std::vector<ScanEntry<S>> out;
    for (const auto& t : scales) {
        ScanEntry<S> entry;
        entry.scale = t;
        entry.strong = strong_link_criterion_at_scale(sp, t);
        if (entry.strong.certified) {
            entry.status = ScanStatus::Certified;
        } else {
            refuting_subsets(sp, t, max_subset_size, entry);
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace vrmorse
