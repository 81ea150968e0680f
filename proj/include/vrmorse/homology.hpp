// Reduced simplicial homology over GF(2) by boundary-matrix rank.
//
// Columns are dynamic bitsets; rank comes from the usual low-bit pivot
// reduction. Small and dumb on purpose: this is the ground-truth oracle the
// rest of the library is held against.
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "explicit_complex.hpp"

namespace vrmorse {

namespace gf2 {

using Column = std::vector<std::uint64_t>;

inline void set_bit(Column& c, int row) {
    std::size_t blk = std::size_t(row) >> 6;
    if (c.size() <= blk) c.resize(blk + 1, 0);
    c[blk] |= std::uint64_t(1) << (row & 63);
}

inline int low_bit(const Column& c) {
    for (int blk = int(c.size()) - 1; blk >= 0; --blk)
        if (c[blk]) {
            int b = 63;
            while (!(c[blk] & (std::uint64_t(1) << b))) --b;
            return blk * 64 + b;
        }
    return -1;
}

inline void add_into(Column& a, const Column& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
}

inline int rank(std::vector<Column> cols) {
    std::unordered_map<int, int> pivot_of_low;  // low bit -> index in store
    std::vector<Column> store;
    int rank = 0;
    for (auto& col : cols) {
        int low = low_bit(col);
        while (low >= 0) {
            auto it = pivot_of_low.find(low);
            if (it == pivot_of_low.end()) {
                pivot_of_low.emplace(low, int(store.size()));
                store.push_back(std::move(col));
                ++rank;
                break;
            }
            add_into(col, store[it->second]);
            low = low_bit(col);
        }
    }
    return rank;
}

}  // namespace gf2

// Boundary matrix of dimension k: rows indexed by (k-1)-simplices, one column
// per k-simplex, 1 where the row is a codim-1 face.
inline std::vector<gf2::Column> boundary_matrix(const ExplicitComplex& c,
                                                int k) {
    std::vector<gf2::Column> cols;
    if (k <= 0 || k >= int(c.dims.size())) return cols;
    const auto& rows = c.dims[k - 1];
    for (const auto& s : c.dims[k]) {
        gf2::Column col;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            Vertices f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            auto it = std::lower_bound(rows.begin(), rows.end(), f);
            gf2::set_bit(col, int(it - rows.begin()));
        }
        cols.push_back(std::move(col));
    }
    return cols;
}

// Reduced Betti numbers b~_0 .. b~_max_k. The empty complex has b~_{-1} = 1,
// which this vector cannot carry; is_acyclic handles that case explicitly.
inline std::vector<long> betti_numbers(const ExplicitComplex& c, int max_k) {
    std::vector<long> out;
    if (c.empty()) return std::vector<long>(std::size_t(max_k) + 1, 0);
    std::vector<int> rank_of(max_k + 2, 0);
    for (int k = 1; k <= max_k + 1; ++k)
        rank_of[k] = gf2::rank(boundary_matrix(c, k));
    long n0 = c.dims.empty() ? 0 : long(c.dims[0].size());
    long prev_ker = n0 - (n0 > 0 ? 1 : 0);  // reduced augmentation
    for (int k = 0; k <= max_k; ++k) {
        out.push_back(prev_ker - rank_of[k + 1]);
        long nk1 = (k + 1) < int(c.dims.size()) ? long(c.dims[k + 1].size()) : 0;
        prev_ker = nk1 - rank_of[k + 1];
    }
    return out;
}

// True iff all reduced Betti numbers vanish up to max_k. The empty complex is
// never acyclic (b~_{-1} = 1).
inline bool is_acyclic(const ExplicitComplex& c, int max_k) {
    if (c.empty()) return false;
    for (long b : betti_numbers(c, max_k))
        if (b != 0) return false;
    return true;
}

}  // namespace vrmorse
