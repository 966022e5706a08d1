"""Independent brute-force ground truth.

BFS distances, exhaustive shortest-path enumeration, explicit-map
isomorphism checking, and definitional lattice-law reports.  Nothing here
reuses the closed-form machinery it is meant to check.
"""

from collections import deque

from .lattice import (DOWN, UP, LatticeError, PathRecord, is_distributive,
                      is_modular, is_topographically_balanced, sort_key)
from .poset import VertexColoredPoset


class PathCapExceeded(RuntimeError):
    """Raised when shortest-path enumeration would overflow its cap."""


def _adjacency(L, undirected):
    adj = {v: [w for w, _ in L.up_neighbors(v)] for v in L.vertices}
    if undirected:
        for v in L.vertices:
            adj[v].extend(w for w, _ in L.down_neighbors(v))
    return adj


def bfs_distances(L, source, undirected=True):
    adj = _adjacency(L, undirected)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def bfs_all_pairs(L, undirected=True):
    """Exact distance table over all vertex pairs; rejects disconnected input."""
    table = {}
    for s in L.vertices:
        dist = bfs_distances(L, s, undirected)
        if len(dist) != len(L.vertices):
            raise LatticeError("graph is disconnected")
        for t, d in dist.items():
            table[(s, t)] = d
    return table


def enumerate_shortest_paths(L, s, t, cap=100_000):
    """All simple shortest paths from s to t (edges usable both ways).

    Walks only along vertices whose distance-to-t strictly decreases, so
    every emitted path is simple and shortest.  Raises PathCapExceeded
    rather than silently truncating.
    """
    dist_t = bfs_distances(L, t)
    if s not in dist_t:
        raise LatticeError(f"{s!r} and {t!r} are not connected")
    paths = []
    stack = [(s, [s])]
    while stack:
        v, trail = stack.pop()
        if v == t:
            steps = []
            for a, b in zip(trail, trail[1:]):
                if L.has_edge(a, b):
                    steps.append((L.edge_color(a, b), UP))
                else:
                    steps.append((L.edge_color(b, a), DOWN))
            paths.append(PathRecord(tuple(trail), tuple(steps)))
            if len(paths) > cap:
                raise PathCapExceeded(f"more than {cap} shortest paths")
            continue
        for w, _ in L.up_neighbors(v) + L.down_neighbors(v):
            if dist_t.get(w, -1) == dist_t[v] - 1:
                stack.append((w, trail + [w]))
    return paths


def check_constructed_iso(G, H, f):
    """Is the explicit map f a color-preserving digraph isomorphism G -> H?"""
    g = f.__getitem__ if isinstance(f, dict) else f
    images = {v: g(v) for v in G.vertices}
    if len(set(images.values())) != len(G.vertices):
        return False
    if set(images.values()) != set(H.vertices):
        return False
    g_edges = {(images[a], images[b], c) for a, b, c in G.edges}
    return g_edges == set(H.edges)


def check_lattice_laws(L):
    """Definitional verdicts: lattice, modular, distributive, rank identity."""
    report = {
        "vertices": len(L.vertices),
        "is_lattice": L.is_lattice,
        "modular": None,
        "distributive": None,
        "topographically_balanced": is_topographically_balanced(L),
        "rank_identity": None,
    }
    if not report["is_lattice"]:
        return report
    report["modular"] = is_modular(L)
    report["distributive"] = is_distributive(L)
    ranks = L.ranks
    if ranks is None:
        report["rank_identity"] = False
        return report
    holds = True
    for s in L.vertices:
        for t in L.vertices:
            up = 2 * ranks[L.join(s, t)] - ranks[s] - ranks[t]
            down = ranks[s] + ranks[t] - 2 * ranks[L.meet(s, t)]
            if up != down:
                holds = False
                break
        if not holds:
            break
    report["rank_identity"] = holds
    return report


def random_colored_poset(rng, max_vertices=8, max_colors=3, min_vertices=1):
    """A random vertex-colored poset, reproducible from the given rng."""
    n = rng.randint(min_vertices, max_vertices)
    names = [f"v{i}" for i in range(n)]
    less = {name: set() for name in names}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                less[names[i]].add(names[j])
    for i in range(n):          # transitive closure along the topological order
        for j in range(i + 1, n):
            if names[j] in less[names[i]]:
                less[names[i]] |= less[names[j]]
    covers = []
    for a in names:
        for b in less[a]:
            if not any(b in less[z] for z in less[a] if z != b):
                covers.append((a, b))
    colors = {name: rng.randint(1, max_colors) for name in names}
    return VertexColoredPoset(names, covers, colors)


def random_simple_path(L, rng, max_len=None):
    """A uniformly improvised simple walk in the cover graph (both directions)."""
    adj = _adjacency(L, undirected=True)
    start = rng.choice(L.vertices)
    trail = [start]
    seen = {start}
    limit = max_len if max_len is not None else rng.randint(0, len(L.vertices) - 1)
    while len(trail) - 1 < limit:
        options = [w for w in adj[trail[-1]] if w not in seen]
        if not options:
            break
        nxt = rng.choice(sorted(options, key=sort_key))
        trail.append(nxt)
        seen.add(nxt)
    steps = []
    for a, b in zip(trail, trail[1:]):
        if L.has_edge(a, b):
            steps.append((L.edge_color(a, b), UP))
        else:
            steps.append((L.edge_color(b, a), DOWN))
    return PathRecord(tuple(trail), tuple(steps))
