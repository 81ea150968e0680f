#!/usr/bin/env python3
"""Brute-force GF(2) homology reference for small explicit complexes.

Also freezes two hand-built Forman-style functions on a triangle with their
classifications and descending-link homology computed on the order complex
(chains of the descending poset), independent of the library's join shortcut.
"""
import json
import random
from itertools import combinations


def closure(maximal):
    faces = set()
    for m in maximal:
        m = tuple(sorted(m))
        for r in range(1, len(m) + 1):
            faces.update(combinations(m, r))
    return faces


def layers_of(faces):
    top = max(len(f) for f in faces)
    return [sorted(f for f in faces if len(f) == k + 1) for k in range(top)]


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


def reduced_betti(layers, cap=None):
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
    for k in range(len(layers)):
        boundary_in = ranks[k] if k < len(ranks) else 0
        out.append(prev_ker - boundary_in)
        if k < len(ranks):
            prev_ker = len(layers[k + 1]) - ranks[k]
    if cap is not None:
        out = out[: cap + 1] + [0] * max(0, cap + 1 - len(out))
    return out


def betti_of_maximal(maximal, cap=None):
    return reduced_betti(layers_of(closure(maximal)), cap)


def euler_ok(maximal):
    faces = closure(maximal)
    chi = sum((-1) ** (len(f) - 1) for f in faces)
    b = reduced_betti(layers_of(faces))
    return chi == 1 + sum((-1) ** k * bk for k, bk in enumerate(b))


# ------------------------------------------------------------ Forman --------

def forman_classify(faces, h):
    """faces: set of tuples; h: dict face -> value. Returns dict or None."""
    out = {}
    for s in faces:
        cof = [c for c in faces if len(c) == len(s) + 1 and set(s) < set(c)]
        fac = [f for f in faces if len(f) == len(s) - 1 and set(f) < set(s)]
        low_cof = [c for c in cof if h[c] <= h[s]]
        high_fac = [f for f in fac if h[f] >= h[s]]
        if len(low_cof) > 1 or len(high_fac) > 1:
            return None
        if low_cof and high_fac:
            return None
        if low_cof:
            out[s] = ("REDUNDANT", low_cof[0])
        elif high_fac:
            out[s] = ("COLLAPSIBLE", high_fac[0])
        else:
            out[s] = ("CRITICAL", None)
    return out


def descending_poset(faces, h, s):
    """Neighbors of s in the order complex with lex-smaller (h, -dim)."""
    val = (h[s], -(len(s) - 1))
    down = []
    for o in faces:
        if o == s:
            continue
        if set(o) < set(s) or set(s) < set(o):
            if (h[o], -(len(o) - 1)) < val:
                down.append(o)
    return sorted(down, key=lambda f: (len(f), f))


def order_complex_betti(elements):
    """Reduced Betti of the order complex of a poset of faces under strict
    inclusion. Elements are face tuples; chains become simplices."""
    if not elements:
        return None  # empty link; convention b~(-1)=1 handled by caller
    idx = {e: i for i, e in enumerate(elements)}
    chains = [(i,) for i in range(len(elements))]
    maximal = []
    frontier = chains
    all_chains = set(chains)
    while frontier:
        nxt = []
        for ch in frontier:
            last = elements[ch[-1]]
            for e in elements:
                if idx[e] > ch[-1] and set(last) < set(e):
                    c2 = ch + (idx[e],)
                    nxt.append(c2)
                    all_chains.add(c2)
        frontier = nxt
    # chains are automatically face-closed once all subchains are present;
    # sub-chains of a chain are chains, so close explicitly
    closed = set()
    for ch in all_chains:
        for r in range(1, len(ch) + 1):
            closed.update(combinations(ch, r))
    top = max(len(c) for c in closed)
    layers = [sorted(c for c in closed if len(c) == k + 1) for k in range(top)]
    return reduced_betti(layers)


def forman_case(name, maximal, h_list):
    faces = closure(maximal)
    h = {f: v for f, v in h_list}
    assert set(h) == faces, (name, set(h) ^ faces)
    cls = forman_classify(faces, h)
    assert cls is not None, name
    # matching must biject redundant and collapsible sets
    red = {s: m for s, (k, m) in cls.items() if k == "REDUNDANT"}
    col = {s: m for s, (k, m) in cls.items() if k == "COLLAPSIBLE"}
    assert len(red) == len(col)
    for s, m in red.items():
        assert col.get(m) == s, (name, s, m)
    entry = {"maximal": [list(m) for m in sorted(maximal)],
             "h": [[list(f), v] for f, v in sorted(h.items())],
             "classes": [], "dlinks": []}
    for s in sorted(faces, key=lambda f: (len(f), f)):
        kind, mate = cls[s]
        entry["classes"].append(
            [list(s), kind, list(mate) if mate else None])
        dl = descending_poset(faces, h, s)
        b = order_complex_betti(dl)
        entry["dlinks"].append(
            [list(s), [list(x) for x in dl], b if b is not None else "EMPTY"])
    return entry


def main():
    golden = {"fixed": {}, "random": [], "forman": {}}

    fixed = {
        "triangle_boundary": [(0, 1), (1, 2), (0, 2)],
        "full_triangle": [(0, 1, 2)],
        "two_vertices": [(0,), (1,)],
        "square_cycle": [(0, 1), (1, 2), (2, 3), (0, 3)],
        "cone_over_square": [(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)],
        "tetra_boundary": [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)],
        "two_circles": [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        "wedge_two_circles": [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)],
        "projective_plane_6": [
            (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 5), (0, 4, 5),
            (1, 2, 4), (1, 2, 5), (1, 3, 5), (2, 3, 4), (3, 4, 5),
        ],
    }
    for name, maximal in fixed.items():
        assert euler_ok(maximal), name
        golden["fixed"][name] = {
            "maximal": [list(m) for m in maximal],
            "betti": betti_of_maximal(maximal),
        }

    rng = random.Random(6021)
    for case in range(20):
        n = rng.randint(3, 7)
        k = rng.randint(2, 8)
        maximal = set()
        for _ in range(k):
            size = rng.randint(2, min(n, 4))
            maximal.add(tuple(sorted(rng.sample(range(n), size))))
        maximal.update((v,) for v in range(n))
        maximal = sorted(maximal)
        assert euler_ok(maximal)
        golden["random"].append({
            "maximal": [list(m) for m in maximal],
            "betti": betti_of_maximal(maximal),
        })

    # Forman case with a redundant vertex whose descending link is a segment,
    # not just the matched edge: the shape statements must follow the cone
    # characterization, not a literal one-coface reading.
    golden["forman"]["redundant_vertex_segment"] = forman_case(
        "redundant_vertex_segment",
        [(0, 1, 2)],
        [((0,), 10), ((1,), -1), ((2,), 2),
         ((0, 1), 4), ((0, 2), 11), ((1, 2), 0),
         ((0, 1, 2), 6)],
    )
    # Collapsible top cell with a bad vertex inside the matched face: the
    # descending part of the boundary is not all of it, yet still contractible.
    golden["forman"]["collapsible_bad_vertex"] = forman_case(
        "collapsible_bad_vertex",
        [(0, 1, 2)],
        [((0,), 5), ((1,), 0), ((2,), 0),
         ((0, 1), 7), ((0, 2), 1), ((1, 2), 1),
         ((0, 1, 2), 3)],
    )

    with open("tests/golden/homology_cases.json", "w") as f:
        json.dump(golden, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote tests/golden/homology_cases.json")


if __name__ == "__main__":
    main()
