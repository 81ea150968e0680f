#!/usr/bin/env python3
"""Brute-force reference for the 4-point sphere sample and integer lattices.

Sphere distances are exact fractions of the full turn here (the sampled points
are mutually orthogonal or antipodal), so the reference is exact; the library
stores them as doubles with eps and the tests compare within that tolerance.
Lattice distances are exact squared integers; the pinched predicates are
evaluated with fraction arithmetic (sqrt(a) + sqrt(b) < sqrt(c) iff
a + b < c and 4ab < (c - a - b)^2).
"""
import json
from fractions import Fraction
from itertools import combinations
from math import isqrt


def frac(x):
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- sphere ----

def sphere4():
    # order: e0, e1, N, S
    names = ["e0", "e1", "N", "S"]
    q = Fraction(1, 4)
    h = Fraction(1, 2)
    z = Fraction(0)
    d = [
        [z, q, q, q],
        [q, z, q, q],
        [q, q, z, h],
        [q, q, h, z],
    ]
    n = 4

    def strong(t):
        pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if d[x][y] == t]
        wit = []
        for (x, y) in pairs:
            lens = [w for w in range(n) if d[w][x] <= t and d[w][y] <= t]
            zz = next((zz for zz in range(n) if all(d[zz][w] < t for w in lens)), None)
            if zz is None:
                wide = max(
                    combinations(lens, 2), key=lambda p: (d[p[0]][p[1]], -p[0], -p[1])
                )
                return {
                    "status": "REFUTED_SCALE",
                    "pair": [x, y],
                    "lens": lens,
                    "widest_lens_pair": list(wide),
                    "widest_dist": frac(d[wide[0]][wide[1]]),
                }
            wit.append({"pair": [x, y], "z": zz})
        return {"status": "CERTIFIED_SCALE", "witnesses": wit}

    return {
        "order": names,
        "spectrum": [frac(q), frac(h)],
        "strong_quarter": strong(q),
        "strong_half": strong(h),
    }


# --------------------------------------------------------------- lattice ----

def box_points(side):
    return [(a, b) for a in range(side) for b in range(side)]


def d2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def sq_lt_diff(a, s, r2):
    """sqrt(a) < sqrt(s) - sqrt(r2) for nonnegative fractions."""
    a = Fraction(a)
    s = Fraction(s)
    r2 = Fraction(r2)
    if r2 == 0:
        return a < s
    rest = s - a - r2
    if rest <= 0:
        return False
    return 4 * a * r2 < rest * rest


def lattice15():
    side = 15
    pts = box_points(side)
    idx = {p: i for i, p in enumerate(pts)}
    hi = side - 1

    def in_window(p, m):
        return m <= p[0] <= hi - m and m <= p[1] <= hi - m

    def ceil_sqrt(s):
        r = isqrt(s)
        return r if r * r == s else r + 1

    def vecs(s):
        out = []
        r = isqrt(s)
        for dx in range(-r, r + 1):
            rem = s - dx * dx
            dy = isqrt(rem)
            if dy * dy == rem:
                out.append((dx, dy))
                if dy:
                    out.append((dx, -dy))
        return out

    def eligible_pairs(s):
        m = ceil_sqrt(s)
        seen = set()
        for x in pts:
            for v in vecs(s):
                y = (x[0] + v[0], x[1] + v[1])
                if y not in idx:
                    continue
                if not (in_window(x, m) or in_window(y, m)):
                    continue
                key = (min(x, y), max(x, y))
                seen.add(key)
        return sorted(seen)

    def check_scale(s, r2_global):
        pairs = eligible_pairs(s)
        result = {
            "squared_scale": s,
            "eligible_pairs": len(pairs),
            "strong": "CERTIFIED_SCALE",
            "pinched_global": "CERTIFIED_SCALE",
            "pinched_per_pair": "CERTIFIED_SCALE",
        }
        for (x, y) in pairs:
            lens = [w for w in pts if d2(w, x) <= s and d2(w, y) <= s]
            zs = next(
                (z for z in pts if all(d2(z, w) < s for w in lens)), None
            )
            if zs is None:
                result["strong"] = "REFUTED_SCALE"
                result["failing_pair"] = [list(x), list(y)]
                break
            zp = next(
                (z for z in pts if all(sq_lt_diff(d2(z, w), s, r2_global) for w in lens)),
                None,
            )
            if zp is None:
                result["pinched_global"] = "REFUTED_SCALE"
                result.setdefault("pinched_failing_pair", [list(x), list(y)])
            rp = Fraction(((x[0] + y[0]) % 2) + ((x[1] + y[1]) % 2), 4)
            zq = next(
                (z for z in pts if all(sq_lt_diff(d2(z, w), s, rp) for w in lens)),
                None,
            )
            if zq is None:
                result["pinched_per_pair"] = "REFUTED_SCALE"
                result.setdefault("per_pair_failing", [list(x), list(y)])
        return result

    window_scales = [29, 32, 34, 36, 37, 40, 41]
    small_scales = [1, 2, 4]
    r2_global = Fraction(1, 2)
    return {
        "side": side,
        "window_squared_scales": window_scales,
        "window": {str(s): check_scale(s, r2_global) for s in window_scales},
        "small": {str(s): check_scale(s, r2_global) for s in small_scales},
    }


# -------------------------------------------------- small lattice corpus ----

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


def lattice4():
    side = 4
    pts = box_points(side)
    n = len(pts)
    d = [[d2(p, q) for q in pts] for p in pts]
    spectrum = sorted({d[i][j] for i in range(n) for j in range(i + 1, n)})

    def link_criterion(F):
        t = max(d[i][j] for i, j in combinations(F, 2))
        for z in sorted(F):
            if all(f == z or d[z][f] < t for f in F):
                return "SATISFIED_FACE"
            # squared comparisons are order-preserving, strict stays strict
        lens = [w for w in range(n) if all(d[w][f] <= t for f in F)]
        for z in range(n):
            if z in F:
                continue
            if all(d[z][w] <= t for w in lens):
                return "SATISFIED_COFACE"
        return "FAILED"

    def scan(t):
        pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if d[x][y] == t]
        ok = True
        for (x, y) in pairs:
            lens = [w for w in range(n) if d[w][x] <= t and d[w][y] <= t]
            if not any(all(d[z][w] < t for w in lens) for z in range(n)):
                ok = False
                break
        if ok:
            return {"status": "CERTIFIED"}
        witness = None
        by_size = {}
        for size in (2, 3, 4):
            for F in combinations(range(n), size):
                if max(d[i][j] for i, j in combinations(F, 2)) != t:
                    continue
                if link_criterion(F) == "FAILED":
                    by_size[str(size)] = list(F)
                    if witness is None:
                        witness = list(F)
                    break
        if witness is not None:
            return {"status": "REFUTED", "witness": witness, "by_size": by_size}
        return {"status": "UNKNOWN"}

    statuses = {str(t): scan(t) for t in spectrum}
    intervals = []
    i = 0
    while i < len(spectrum):
        if statuses[str(spectrum[i])]["status"] == "CERTIFIED":
            j = i
            while (j + 1 < len(spectrum)
                   and statuses[str(spectrum[j + 1])]["status"] == "CERTIFIED"):
                j += 1
            intervals.append({
                "left": str(spectrum[i - 1]) if i > 0 else "0",
                "right": str(spectrum[j]),
                "contractible_beyond": j == len(spectrum) - 1,
            })
            i = j + 1
        else:
            i += 1
    # betti for certified scales plus anchors, enumeration capped at dim 3
    adj_scales = set()
    vals = list(spectrum)
    for i, t in enumerate(vals):
        if statuses[str(t)]["status"] == "CERTIFIED":
            adj_scales.add(t)
            if i > 0:
                adj_scales.add(vals[i - 1])
    betti = {}
    for t in sorted(adj_scales):
        adj = [[d[i][j] <= t for j in range(n)] for i in range(n)]
        layers = [[(i,) for i in range(n)]]
        for _ in range(3):
            nxt = []
            for sx in layers[-1]:
                for v in range(sx[-1] + 1, n):
                    if all(adj[u][v] for u in sx):
                        nxt.append(sx + (v,))
            layers.append(nxt)
        betti[str(t)] = reduced_betti(layers)
    return {"side": side, "spectrum": spectrum, "statuses": statuses,
            "intervals": intervals, "betti": betti}


def main():
    golden = {"sphere4": sphere4(), "lattice15": lattice15(), "lattice4": lattice4()}
    with open("tests/golden/sphere_lattice.json", "w") as f:
        json.dump(golden, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote tests/golden/sphere_lattice.json")


if __name__ == "__main__":
    main()
