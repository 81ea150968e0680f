#pragma once

#include <cstdint>
#include <string>

namespace vrmorse {

// FNV-1a, 64-bit. Reports embed this as the input-space fingerprint so a
// report can be matched to the exact table it was computed from.
inline std::uint64_t fnv1a64(const std::string& s,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

template <class S>
std::string space_content_hash(const S& sp) {
    std::uint64_t h = fnv1a64(S::kKind);
    h = fnv1a64("\x1f" + std::to_string(sp.n), h);
    for (const auto& l : sp.labels) h = fnv1a64("\x1f" + l, h);
    for (int i = 0; i < sp.n; ++i)
        for (int j = 0; j < sp.n; ++j)
            h = fnv1a64("\x1f" + sp.fmt(sp.dist(i, j)), h);
    return hex64(h);
}

}  // namespace vrmorse
