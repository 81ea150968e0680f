#!/usr/bin/env python3
"""Brute-force reference for evenly spaced circle samples.

Everything here is naive search over exact fractions, written independently of
the C++ library. The output is frozen into tests/golden/circle_scan.json and
the test suite holds the library to it.
"""
import json
from fractions import Fraction
from itertools import combinations


def circle_space(m):
    return [
        [Fraction(min(abs(i - j), m - abs(i - j)), m) for j in range(m)]
        for i in range(m)
    ]


def diam(d, F):
    F = list(F)
    if len(F) < 2:
        return Fraction(0)
    return max(d[i][j] for i, j in combinations(F, 2))


def link_criterion(d, n, F):
    t = diam(d, F)
    for z in sorted(F):
        if all(f == z or d[z][f] < t for f in F):
            return ("SATISFIED_FACE", z)
    lens = [w for w in range(n) if all(d[w][f] <= t for f in F)]
    for z in range(n):
        if z in F:
            continue
        if all(d[z][w] <= t for w in lens):
            return ("SATISFIED_COFACE", z)
    return ("FAILED", None)


def strong_at_scale(d, n, t):
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if d[x][y] == t]
    witnesses = []
    for (x, y) in pairs:
        lens = [w for w in range(n) if d[w][x] <= t and d[w][y] <= t]
        z = next((z for z in range(n) if all(d[z][w] < t for w in lens)), None)
        if z is None:
            wide = max(
                ((u, v) for u, v in combinations(lens, 2)),
                key=lambda p: (d[p[0]][p[1]], [-p[0], -p[1]]),
            )
            return {
                "status": "REFUTED_SCALE",
                "pair": [x, y],
                "widest_lens_pair": list(wide),
            }
        witnesses.append({"pair": [x, y], "z": z})
    return {"status": "CERTIFIED_SCALE", "witnesses": witnesses}


def scan_scale(d, n, t, max_subset):
    strong = strong_at_scale(d, n, t)
    if strong["status"] == "CERTIFIED_SCALE":
        return {"status": "CERTIFIED", "strong": strong}
    by_size = {}
    first = None
    for size in range(2, max_subset + 1):
        found = None
        for F in combinations(range(n), size):
            if diam(d, F) != t:
                continue
            status, _ = link_criterion(d, n, F)
            if status == "FAILED":
                found = list(F)
                break
        by_size[str(size)] = found
        if found is not None and first is None:
            first = found
    if first is None:
        return {"status": "UNKNOWN", "strong": strong}
    return {
        "status": "REFUTED",
        "strong": strong,
        "witness": first,
        "witness_by_size": by_size,
    }


def vr_layers(d, n, t, max_dim):
    adj = [[d[i][j] <= t for j in range(n)] for i in range(n)]
    layers = [[(i,) for i in range(n)]]
    for _ in range(max_dim):
        nxt = []
        for s in layers[-1]:
            for v in range(s[-1] + 1, n):
                if all(adj[u][v] for u in s):
                    nxt.append(s + (v,))
        layers.append(nxt)
    return layers


def gf2_rank(cols):
    pivots = {}
    rank = 0
    for col in cols:
        while col:
            low = col.bit_length() - 1
            p = pivots.get(low)
            if p is None:
                pivots[low] = col
                rank += 1
                break
            col ^= p
    return rank


def reduced_betti(layers):
    ranks = []
    for k in range(1, len(layers)):
        rows = {s: i for i, s in enumerate(layers[k - 1])}
        cols = []
        for s in layers[k]:
            col = 0
            for drop in range(len(s)):
                col |= 1 << rows[s[:drop] + s[drop + 1:]]
            cols.append(col)
        ranks.append(gf2_rank(cols))
    n0 = len(layers[0])
    out = []
    prev_ker = n0 - (1 if n0 else 0)
    for k in range(len(layers) - 1):
        out.append(prev_ker - ranks[k])
        prev_ker = len(layers[k + 1]) - ranks[k]
    return out


def frac(x):
    return f"{x.numerator}/{x.denominator}"


def run_circle(m, max_subset=4, betti_cap=3):
    d = circle_space(m)
    n = m
    spectrum = [Fraction(k, m) for k in range(1, m // 2 + 1)]
    scales = {}
    for t in spectrum:
        scales[frac(t)] = scan_scale(d, n, t, max_subset)
    # certified runs -> half-open intervals anchored at the preceding value
    intervals = []
    i = 0
    vals = list(spectrum)
    while i < len(vals):
        if scales[frac(vals[i])]["status"] == "CERTIFIED":
            j = i
            while j + 1 < len(vals) and scales[frac(vals[j + 1])]["status"] == "CERTIFIED":
                j += 1
            anchor = frac(vals[i - 1]) if i > 0 else "0"
            intervals.append(
                {
                    "left": anchor,
                    "right": frac(vals[j]),
                    "contractible_beyond": j == len(vals) - 1,
                }
            )
            i = j + 1
        else:
            i += 1
    # Betti vectors at small scales (certified run + anchor): cap dim
    betti = {}
    kmax = (m + 2) // 3 - 1  # largest k with k/m < 1/3
    for k in range(1, kmax + 1):
        t = Fraction(k, m)
        layers = vr_layers(d, n, t, betti_cap)
        betti[frac(t)] = reduced_betti(layers)
    # one scale past the run, so tests can see the Betti jump a bogus
    # certification of that scale would have to explain away
    if m == 12:
        t = Fraction(kmax + 1, m)
        layers = vr_layers(d, n, t, betti_cap)
        betti[frac(t)] = reduced_betti(layers)
    return {
        "m": m,
        "spectrum": [frac(t) for t in spectrum],
        "scales": scales,
        "intervals": intervals,
        "betti_small_scales": betti,
    }


def figure_triad():
    m = 12
    d = circle_space(m)
    out = {}
    for name, F in [
        ("face_triangle", (0, 2, 10)),
        ("coface_edge", (2, 11)),
        ("failed_triangle", (0, 4, 8)),
    ]:
        status, z = link_criterion(d, m, F)
        out[name] = {
            "subset": list(F),
            "diam": frac(diam(d, F)),
            "status": status,
            "witness": z,
        }
    return out


def main():
    golden = {
        "figure_triad": figure_triad(),
        "circles": {str(m): run_circle(m) for m in (12, 20, 30)},
    }
    with open("tests/golden/circle_scan.json", "w") as f:
        json.dump(golden, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote tests/golden/circle_scan.json")


if __name__ == "__main__":
    main()
