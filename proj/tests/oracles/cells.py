"""Independent oracle for the square-cell tilings (chair, L tetromino, strips, 4^4).

Tiles are sets of unit cells and neighbours are found through cell contacts, so nothing
here shares code with the library. Writes golden.json next to this file.

    python3 cells.py            # everything
    python3 cells.py strips     # one section
"""
import collections
import json
import math
import os
import sys

import numpy as np

ROT = [((1, 0), (0, 1)), ((0, -1), (1, 0)), ((-1, 0), (0, -1)), ((0, 1), (-1, 0))]

# Cells of the prototile and (quarter turns, translation) of each child inside the
# doubled prototile.
CHAIR = dict(cells=[(0, 0), (1, 0), (0, 1)], rules=[(0, (0, 0)), (3, (0, 4)), (0, (1, 1)), (1, (4, 0))])
LTET = dict(cells=[(0, 0), (1, 0), (0, 1), (0, 2)], rules=[(3, (0, 2)), (0, (0, 2)), (2, (2, 6)), (1, (4, 0))])


def mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def app(a, t, p):
    return (a[0][0] * p[0] + a[0][1] * p[1] + t[0], a[1][0] * p[0] + a[1][1] * p[1] + t[1])


def generate(system, level, center, radius):
    cells = system["cells"]
    xs = [c[0] for c in cells] + [c[0] + 1 for c in cells]
    ys = [c[1] for c in cells] + [c[1] + 1 for c in cells]
    box = [(min(xs), min(ys)), (max(xs), min(ys)), (min(xs), max(ys)), (max(xs), max(ys))]
    out = []
    stack = [(level, ((1, 0), (0, 1)), (0, 0))]
    while stack:
        lev, a, t = stack.pop()
        s = 2 ** lev
        pts = [app(a, t, (s * p[0], s * p[1])) for p in box]
        lo = (min(p[0] for p in pts), min(p[1] for p in pts))
        hi = (max(p[0] for p in pts), max(p[1] for p in pts))
        dx = max(lo[0] - center[0], 0, center[0] - hi[0])
        dy = max(lo[1] - center[1], 0, center[1] - hi[1])
        if dx * dx + dy * dy > radius * radius:
            continue
        if lev == 0:
            out.append((a, t))
            continue
        h = 2 ** (lev - 1)
        for k, tk in reversed(system["rules"]):
            stack.append((lev - 1, mul(a, ROT[k]), app(a, t, (h * tk[0], h * tk[1]))))
    return out


def tile_cells(system, a, t):
    res = []
    for x, y in system["cells"]:
        c = app(a, t, (x + 0.5, y + 0.5))
        res.append((math.floor(c[0]), math.floor(c[1])))
    return res


def neighbours(tiles):
    owner = {c: i for i, cs in enumerate(tiles) for c in cs}
    adj = []
    for i, cs in enumerate(tiles):
        s = set()
        for x, y in cs:
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                j = owner.get((x + dx, y + dy))
                if j is not None and j != i:
                    s.add(j)
        adj.append(s)
    return adj


def bfs(adj, seed, nmax, complete):
    seen = {seed}
    shells = [[seed]]
    for n in range(1, nmax + 1):
        nxt = []
        for i in shells[-1]:
            if not complete[i]:
                raise RuntimeError("guard band reached at shell %d" % n)
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        shells.append(nxt)
    return shells


def centroid(cs):
    return np.array([sum(c[0] + 0.5 for c in cs) / len(cs), sum(c[1] + 0.5 for c in cs) / len(cs)])


def hull(points):
    pts = sorted(set(map(tuple, points)))
    def half(seq):
        h = []
        for p in seq:
            while len(h) >= 2 and ((h[-1][0] - h[-2][0]) * (p[1] - h[-2][1]) - (h[-1][1] - h[-2][1]) * (p[0] - h[-2][0])) <= 1e-12:
                h.pop()
            h.append(p)
        return h
    lower, upper = half(pts), half(reversed(pts))
    return np.array(lower[:-1] + upper[:-1])


def recession(points, step=1e-3):
    """Largest distance from a point of the hull boundary to the point set."""
    from scipy.spatial import cKDTree
    h = hull(points)
    samples = []
    for a, b in zip(h, np.roll(h, -1, axis=0)):
        k = max(1, int(math.ceil(np.linalg.norm(b - a) / step)))
        for s in range(k):
            samples.append(a + (b - a) * s / k)
    d, _ = cKDTree(points).query(np.array(samples))
    return float(d.max())


def supertile_run(system, level, radius, n):
    s = 2 ** level
    r = s * math.sqrt(2) / (1 + math.sqrt(2))
    center = (r, r)
    tiles = [tile_cells(system, a, t) for a, t in generate(system, level, center, radius)]
    cents = [centroid(cs) for cs in tiles]
    seed_cell = (math.floor(center[0]), math.floor(center[1]))
    seed = next(i for i, cs in enumerate(tiles) if seed_cell in cs)
    diam = max(math.hypot(max(c[0] for c in cs) - min(c[0] for c in cs) + 1,
                          max(c[1] for c in cs) - min(c[1] for c in cs) + 1) for cs in tiles[:8])
    complete = [np.hypot(*(p - center)) <= radius - 2 * diam for p in cents]
    shells = bfs(neighbours(tiles), seed, n, complete)
    pts = np.array([(cents[i] - cents[seed]) / n for i in shells[n]])
    return tiles, shells, pts


def chair_section():
    tiles, shells, pts = supertile_run(CHAIR, 10, 300.0, 128)
    h = hull(pts)
    one = [tile_cells(CHAIR, a, t) for a, t in generate(CHAIR, 1, (0, 0), 1e9)]
    adj1 = neighbours(one)
    return {
        "level1_edges": sum(len(s) for s in adj1) // 2,
        "coordination_10": [len(s) for s in shells[1:11]],
        "shell_128_count": len(shells[128]),
        "shell_128_extent": [float(pts[:, 0].min()), float(pts[:, 0].max()), float(pts[:, 1].min()), float(pts[:, 1].max())],
        "shell_128_hull_vertices": len(h),
    }


def ltet_section():
    _, shells, pts = supertile_run(LTET, 11, 650.0, 255)
    m = recession(pts)
    return {"shell_255_count": len(shells[255]), "coordination_10": [len(s) for s in shells[1:11]],
            "recession_255": m, "t0": m / 2}


def strips_ratios(levels, half_height, ns):
    tiles = []
    x = 0
    for i in range(levels):
        w = 4 ** i
        for c in range(w):
            for y in range(-half_height, half_height):
                tiles.append([(x + c, y)])
        x += w
        for c in range(w):
            for y in range(-half_height, half_height, 2):
                tiles.append([(x + 2 * c + a, y + b) for a in (0, 1) for b in (0, 1)])
        x += 2 * w
    width = x
    cents = [centroid(t) for t in tiles]
    complete = [abs(p[1]) < half_height - 4 and p[0] < width - 4 for p in cents]
    seed = next(i for i, t in enumerate(tiles) if t == [(0, 0)])
    shells = bfs(neighbours(tiles), seed, max(ns), complete)
    return [float(max(cents[i][0] - cents[seed][0] for i in shells[n]) / n) for n in ns]


def square_ratios(half, ns):
    tiles = [[(x, y)] for x in range(-half, half) for y in range(-half, half)]
    cents = [centroid(t) for t in tiles]
    complete = [max(abs(p[0]), abs(p[1])) < half - 2 for p in cents]
    seed = next(i for i, t in enumerate(tiles) if t == [(0, 0)])
    shells = bfs(neighbours(tiles), seed, max(ns), complete)
    return [float(max(cents[i][0] - cents[seed][0] for i in shells[n]) / n) for n in ns]


def strips_section():
    ns = list(range(16, 257, 16))
    r = strips_ratios(5, 560, ns)
    ctrl_ns = [16, 32, 48, 64]
    c = square_ratios(80, ctrl_ns)
    return {"n": ns, "ratio": r, "range": max(r) - min(r), "g0": (max(r) - min(r)) / 2,
            "control_n": ctrl_ns, "control_ratio": c, "control_range": max(c) - min(c)}


SECTIONS = {"chair": chair_section, "ltetromino": ltet_section, "strips": strips_section}

if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    path = os.path.join(here, "golden.json")
    golden = json.load(open(path)) if os.path.exists(path) else {}
    for name in sys.argv[1:] or SECTIONS:
        golden[name] = SECTIONS[name]()
        print(name, json.dumps(golden[name]))
    with open(path, "w") as f:
        json.dump(golden, f, indent=2, sort_keys=True)
        f.write("\n")
