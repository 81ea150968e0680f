#!/usr/bin/env python3
"""Brute-force reference for word-metric ball checks.

Covers the free group F_2 (reduced words), Z^2 (l1 metric), and an explicit
8-cycle Cayley graph. Conventions shared with the library: generator order
[a, A, b, B] resp. [+e1, -e1, +e2, -e2], FIFO BFS from the identity, all
searches in discovery-index order.
"""
import json
from collections import deque


# ------------------------------------------------------------- free group ---

def f2_mul(u, v):
    u = list(u)
    for c in v:
        if u and u[-1] == c.swapcase():
            u.pop()
        else:
            u.append(c)
    return "".join(u)


def f2_inv(u):
    return u[::-1].swapcase()


def f2_dist(u, v):
    return len(f2_mul(f2_inv(u), v))


F2_GENS = ["a", "A", "b", "B"]


def f2_ball(R):
    order = [""]
    dist = {"": 0}
    q = deque([""])
    while q:
        g = q.popleft()
        if dist[g] == R:
            continue
        for s in F2_GENS:
            h = f2_mul(g, s)
            if h not in dist:
                dist[h] = dist[g] + 1
                order.append(h)
                q.append(h)
    return order, dist


# ---------------------------------------------------------------- Z^2 ------

def z2_dist(u, v):
    return abs(u[0] - v[0]) + abs(u[1] - v[1])


Z2_GENS = [(1, 0), (-1, 0), (0, 1), (0, -1)]


def z2_ball(R):
    order = [(0, 0)]
    dist = {(0, 0): 0}
    q = deque([(0, 0)])
    while q:
        g = q.popleft()
        if dist[g] == R:
            continue
        for s in Z2_GENS:
            h = (g[0] + s[0], g[1] + s[1])
            if h not in dist:
                dist[h] = dist[g] + 1
                order.append(h)
                q.append(h)
    return order, dist


# ------------------------------------------------------ explicit 8-cycle ----

def cycle8():
    n = 8
    edges = [(str(i), str((i + 1) % n)) for i in range(n)]
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    # BFS from the first node of the first row
    root = edges[0][0]
    order = [root]
    dist = {root: 0}
    q = deque([root])
    while q:
        g = q.popleft()
        for h in adj[g]:
            if h not in dist:
                dist[h] = dist[g] + 1
                order.append(h)
                q.append(h)
    # all-pairs graph distances
    pair = {}
    for src in order:
        d = {src: 0}
        q = deque([src])
        while q:
            g = q.popleft()
            for h in adj[g]:
                if h not in d:
                    d[h] = d[g] + 1
                    q.append(h)
        pair[src] = d
    return order, dist, pair


# ------------------------------------------------------------ checks --------

def strong_translation(order, dist_from_1, pdist, t):
    """Check pairs (1, g) for g in sphere(t), index order. pdist(u,v)."""
    out = {"scale": t, "mode": "translation", "pairs": []}
    for g in order:
        if dist_from_1[g] != t:
            continue
        lens = [w for w in order
                if dist_from_1[w] <= t and pdist(w, g) <= t]
        witness = None
        for z in order:
            if dist_from_1[z] >= t:
                continue  # any witness is strictly inside the t-ball of 1
            if all(pdist(z, w) < t for w in lens):
                witness = z
                break
        if witness is None:
            wide = max(
                ((u, v) for i, u in enumerate(lens) for v in lens[i + 1:]),
                key=lambda p: pdist(p[0], p[1]),
            )
            out["status"] = "REFUTED_SCALE"
            out["failing_g"] = g
            out["lens_size"] = len(lens)
            out["widest_lens_pair"] = list(wide)
            out["widest_dist"] = pdist(wide[0], wide[1])
            return out
        out["pairs"].append({"g": g, "z": witness})
    out["status"] = "CERTIFIED_SCALE" if out["pairs"] else "VACUOUS"
    return out


def strong_literal(order, dist_from_1, pdist, t, R, complete):
    """Margin-filtered in-ball pairs; all pairs when the ball is complete."""
    out = {"scale": t, "mode": "literal", "checked": 0}
    first = []
    for i, x in enumerate(order):
        if not complete and dist_from_1[x] > R - 2 * t:
            continue
        for y in order[i + 1:]:
            if not complete and dist_from_1[y] > R - 2 * t:
                continue
            if pdist(x, y) != t:
                continue
            out["checked"] += 1
            lens = [w for w in order if pdist(w, x) <= t and pdist(w, y) <= t]
            witness = None
            for z in order:
                if all(pdist(z, w) < t for w in lens):
                    witness = z
                    break
            if witness is None:
                wide = max(
                    ((u, v) for a, u in enumerate(lens) for v in lens[a + 1:]),
                    key=lambda p: pdist(p[0], p[1]),
                )
                out["status"] = "REFUTED_SCALE"
                out["failing_pair"] = [x, y]
                out["lens_size"] = len(lens)
                out["widest_lens_pair"] = list(wide)
                out["widest_dist"] = pdist(wide[0], wide[1])
                return out
            if len(first) < 5:
                first.append({"pair": [x, y], "z": witness})
    out["status"] = "CERTIFIED_SCALE" if out["checked"] else "VACUOUS"
    out["first_witnesses"] = first
    return out


def good_combing(order, dist_from_1, pdist, comb_path, N, R):
    """comb_path(g) -> list of elements from identity to g (geodesic)."""
    tmax = R // 3
    results = []
    for g in order:
        t = dist_from_1[g]
        if t < N or t > tmax:
            continue
        path = comb_path(g)
        assert len(path) == t + 1 and path[0] == order[0] and path[-1] == g
        for i in range(t):
            assert pdist(path[i], path[i + 1]) == 1
            assert dist_from_1[path[i]] == i  # geodesic
        lens = [h for h in order
                if dist_from_1[h] <= t and pdist(h, g) <= t]
        found = None
        for n in range(t + 1):
            z = path[n]
            if all(pdist(h, z) < t for h in lens):
                found = n
                break
        results.append({"g": g, "t": t, "n": found})
    failing = [r for r in results if r["n"] is None]
    return {
        "N": N,
        "t_max": tmax,
        "checked": len(results),
        "failed": len(failing),
        "first_failing": failing[0] if failing else None,
        "per_g": results,
    }


def main():
    golden = {}

    # trivial ball sizes
    f2o2, _ = f2_ball(2)
    z2o2, _ = z2_ball(2)
    golden["ball_sizes"] = {"f2_R2": len(f2o2), "z2_R2": len(z2o2)}

    # --- F2, R=8 ---
    order, dist = f2_ball(8)
    golden["f2"] = {"R": 8, "ball_size": len(order)}
    for t in (2, 3):
        golden["f2"][f"strong_t{t}"] = strong_translation(
            order, dist, f2_dist, t)
        golden["f2"][f"literal_t{t}"] = strong_literal(
            order, dist, f2_dist, t, 8, complete=False)

    def f2_prefix_path(g):
        return [g[:i] for i in range(len(g) + 1)]

    golden["f2"]["combing"] = good_combing(
        order, dist, f2_dist, f2_prefix_path, N=2, R=8)

    # --- Z2, R=12 ---
    zorder, zdist = z2_ball(12)
    golden["z2"] = {"R": 12, "ball_size": len(zorder)}
    for t in (2, 3, 4):
        r = strong_translation(zorder, zdist, z2_dist, t)
        r["pairs"] = r["pairs"][:5]
        if "failing_g" in r:
            r["failing_g"] = list(r["failing_g"])
        if "widest_lens_pair" in r:
            r["widest_lens_pair"] = [list(p) for p in r["widest_lens_pair"]]
        golden["z2"][f"strong_t{t}"] = r

    def z2_staircase_path(g):
        path = [(0, 0)]
        cur = (0, 0)
        axis = 0  # start along x
        while cur != g:
            rx, ry = g[0] - cur[0], g[1] - cur[1]
            if axis == 0 and rx != 0:
                cur = (cur[0] + (1 if rx > 0 else -1), cur[1])
            elif ry != 0:
                cur = (cur[0], cur[1] + (1 if ry > 0 else -1))
            else:
                cur = (cur[0] + (1 if rx > 0 else -1), cur[1])
            path.append(cur)
            axis ^= 1
        return path

    zc = good_combing(zorder, zdist, z2_dist, z2_staircase_path, N=2, R=12)
    zc["per_g"] = [r for r in zc["per_g"] if r["n"] is None][:10]
    for r in zc["per_g"]:
        r["g"] = list(r["g"])
    if zc["first_failing"]:
        zc["first_failing"]["g"] = list(zc["first_failing"]["g"])
    golden["z2"]["staircase_combing"] = zc

    # --- explicit 8-cycle ---
    corder, cdist, cpair = cycle8()
    golden["cycle8"] = {
        "node_order": corder,
        "ball_size": len(corder),
        "strong_t4": strong_literal(
            corder, cdist, lambda u, v: cpair[u][v], 4, 8, complete=True),
    }

    with open("tests/golden/groups.json", "w") as f:
        json.dump(golden, f, indent=1, sort_keys=True)
        f.write("\n")
    print("wrote tests/golden/groups.json")


if __name__ == "__main__":
    main()
