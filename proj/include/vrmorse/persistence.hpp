// Homotopy-persistence intervals: scales where the Strong Link Criterion
// certifies that sublevel inclusions are homotopy equivalences, assembled
// into half-open (anchor, right] ranges and cross-checked against Betti
// profiles of the sublevel complexes.
#pragma once

#include <string>
#include <vector>

#include "budget.hpp"
#include "homology.hpp"
#include "link_criteria.hpp"
#include "metric.hpp"
#include "vr_complex.hpp"

namespace vrmorse {

template <class S>
struct PersistenceInterval {
    typename S::V left{};   // exclusive: the spectrum value before the run,
                            // or zero when the run starts at the bottom
    typename S::V right{};  // inclusive: last certified scale of the run
    int left_index = -1;    // index into spectrum values; -1 for the zero anchor
    int right_index = -1;
    bool contractible_beyond = false;  // run reaches the top of the spectrum
};

template <class S>
struct PersistenceReport {
    Spectrum<S> spectrum;
    std::vector<ScanEntry<S>> per_scale;           // parallel to spectrum
    std::vector<PersistenceInterval<S>> intervals;
    bool has_betti = false;
    int betti_dim = 3;
    std::vector<std::vector<long>> betti;          // parallel to spectrum
};

// Scan the whole spectrum and merge maximal certified runs. UNKNOWN breaks a
// run just like REFUTED: certification must cover every scale in the range.
template <class S>
PersistenceReport<S> persistence_intervals(const S& sp,
                                           int max_subset_size = 4) {
    PersistenceReport<S> rep;
    rep.spectrum = diameter_spectrum(sp);
    rep.per_scale = criterion_range_scan(sp, rep.spectrum.values,
                                         max_subset_size);
    const int m = int(rep.per_scale.size());
    for (int i = 0; i < m;) {
        if (rep.per_scale[i].status != ScanStatus::Certified) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < m &&
               rep.per_scale[j + 1].status == ScanStatus::Certified)
            ++j;
        PersistenceInterval<S> iv;
        iv.left_index = i - 1;
        iv.left = i > 0 ? rep.spectrum.values[i - 1] : S::zero();
        iv.right_index = j;
        iv.right = rep.spectrum.values[j];
        iv.contractible_beyond = (j + 1 == m);
        rep.intervals.push_back(iv);
        i = j + 1;
    }
    return rep;
}

// Reduced Betti vector of VR_t(X), dimensions 0..max_dim.
template <class S>
std::vector<long> vr_betti(const S& sp, const typename S::V& t, int max_dim,
                           Budget* budget = nullptr) {
    ExplicitComplex c = vietoris_rips(sp, t, max_dim + 1, budget);
    return betti_numbers(c, max_dim);
}

template <class S>
void add_betti_profile(const S& sp, PersistenceReport<S>& rep, int max_dim,
                       Budget* budget = nullptr) {
    rep.betti.clear();
    rep.betti_dim = max_dim;
    for (const auto& t : rep.spectrum.values)
        rep.betti.push_back(vr_betti(sp, t, max_dim, budget));
    rep.has_betti = true;
}

struct CrossValidation {
    bool pass = true;
    std::string detail;  // empty iff pass
};

// Homotopy equivalence across a certified interval forces equal homology.
// The comparison includes the left anchor: for scales just above the anchor
// the sublevel complex still equals the anchor's, so the anchor's Betti
// vector belongs to the (t, s] range even though the anchor itself is not
// certified. A failure here means an implementation bug, not a refutation
// of the underlying theory.
template <class S>
CrossValidation cross_validate(const PersistenceReport<S>& rep, const S& sp) {
    CrossValidation out;
    if (!rep.has_betti) {
        out.pass = false;
        out.detail = "report carries no betti profile";
        return out;
    }
    for (const auto& iv : rep.intervals) {
        const int base = iv.left_index >= 0 ? iv.left_index : iv.right_index;
        for (int k = iv.left_index >= 0 ? iv.left_index : iv.left_index + 1;
             k <= iv.right_index; ++k) {
            if (k < 0) continue;
            if (rep.betti[k] != rep.betti[base]) {
                out.pass = false;
                out.detail = "betti jump inside certified interval between " +
                             sp.fmt(rep.spectrum.values[base]) + " and " +
                             sp.fmt(rep.spectrum.values[k]);
                return out;
            }
        }
    }
    return out;
}

}  // namespace vrmorse
