"""The type-A fundamental lattice and its four coordinatizations.

Elements live in a k x (N-k) box and are seen, interchangeably, as
partitions, as k-subsets of [N] (tableaux), as length-N bitstrings over a
physical two-row box layout (circle diagrams), or as the census of shaded
boxes along the northwest-southeast diagonals (diagonal coordinates).
Partitions are the default view; every map here is a pure function on
plain tuples.
"""

from dataclasses import dataclass
from functools import lru_cache

from .lattice import ColoredLattice, product
from .poset import VertexColoredPoset, j_lattice


@dataclass(frozen=True)
class BoxSpec:
    """Game box parameters: k rows, N-k columns, colors drawn from [N-1]."""

    k: int
    N: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.N, int)):
            raise ValueError("k and N must be integers")
        if not 1 <= self.k <= self.N - 1:
            raise ValueError(f"need 1 <= k <= N-1, got k={self.k}, N={self.N}")

    @property
    def cols(self):
        return self.N - self.k

    @property
    def colors(self):
        return range(1, self.N)


@dataclass(frozen=True)
class CircleState:
    """Length-N indicator bits plus the physical numbering scheme they use."""

    bits: tuple
    scheme: str  # "L" or "D"

    def __post_init__(self):
        if self.scheme not in ("L", "D"):
            raise ValueError(f"unknown circle scheme {self.scheme!r}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("circle bits must be 0/1")

    @property
    def ones(self):
        """1-based positions of the dots."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)


def vertex_id(r, c):
    return f"{r},{c}"


def vertex_rc(v):
    r, c = v.split(",")
    return int(r), int(c)


def vertex_color(spec, r, c):
    return spec.N - spec.k + r - c


@lru_cache(maxsize=None)
def build_p_a(spec):
    """Grid poset on (r, c) cells with color N-k+r-c at (r, c)."""
    vertices = []
    covers = []
    colors = {}
    for r in range(1, spec.k + 1):
        for c in range(1, spec.cols + 1):
            v = vertex_id(r, c)
            vertices.append(v)
            colors[v] = vertex_color(spec, r, c)
            if r < spec.k:
                covers.append((v, vertex_id(r + 1, c)))
            if c < spec.cols:
                covers.append((v, vertex_id(r, c + 1)))
    return VertexColoredPoset(vertices, covers, colors)


@lru_cache(maxsize=None)
def build_l_a(spec):
    """The fundamental lattice: ideal lattice of the grid poset."""
    return j_lattice(build_p_a(spec))


# -- partitions -----------------------------------------------------------------


def validate_partition(spec, parts):
    parts = tuple(parts)
    if len(parts) != spec.k:
        raise ValueError(f"expected {spec.k} parts, got {len(parts)}")
    prev = spec.cols
    for i, p in enumerate(parts):
        if not isinstance(p, int):
            raise ValueError(f"part {i + 1} is not an integer")
        if p < 0 or p > spec.cols:
            raise ValueError(f"part {i + 1} out of range [0, {spec.cols}]: {p}")
        if p > prev:
            raise ValueError(f"parts must be weakly decreasing at position {i + 1}")
        prev = p
    return parts


def is_valid_partition(spec, parts):
    try:
        validate_partition(spec, parts)
    except ValueError:
        return False
    return True


@lru_cache(maxsize=None)
def all_partitions(spec):
    """Every k x (N-k) partition, in lexicographic order."""
    out = []

    def fill(prefix, bound):
        if len(prefix) == spec.k:
            out.append(tuple(prefix))
            return
        for p in range(bound + 1):
            fill(prefix + [p], p)

    fill([], spec.cols)
    return tuple(sorted(out))


def ideal_to_partition(spec, ideal):
    counts = [0] * spec.k
    for v in ideal:
        r, _ = vertex_rc(v)
        counts[r - 1] += 1
    return validate_partition(spec, counts)


def partition_to_ideal(spec, parts):
    parts = validate_partition(spec, parts)
    return frozenset(vertex_id(r + 1, c + 1)
                     for r, p in enumerate(parts) for c in range(p))


def partition_rank(spec, parts):
    return sum(validate_partition(spec, parts))


def partition_meet(spec, a, b):
    a, b = validate_partition(spec, a), validate_partition(spec, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def partition_join(spec, a, b):
    a, b = validate_partition(spec, a), validate_partition(spec, b)
    return tuple(max(x, y) for x, y in zip(a, b))


# -- tableaux (L convention: entries increasing) ----------------------------------


def partition_to_tableau_L(spec, parts):
    parts = validate_partition(spec, parts)
    return tuple(spec.cols + r + 1 - p for r, p in enumerate(parts))


def tableau_to_partition_L(spec, entries):
    entries = tuple(entries)
    if len(entries) != spec.k:
        raise ValueError(f"expected {spec.k} tableau entries")
    prev = 0
    for i, t in enumerate(entries):
        if not isinstance(t, int) or not 1 <= t <= spec.N:
            raise ValueError(f"entry {i + 1} out of range [1, {spec.N}]")
        if t <= prev:
            raise ValueError(f"entries must strictly increase at position {i + 1}")
        prev = t
    return validate_partition(
        spec, tuple(spec.cols + r + 1 - t for r, t in enumerate(entries)))


# -- circle diagrams (L scheme) ----------------------------------------------------


def tableau_to_circle(spec, entries, scheme="L"):
    entries = set(entries)
    if len(entries) != spec.k:
        raise ValueError(f"expected {spec.k} distinct entries")
    if not entries <= set(range(1, spec.N + 1)):
        raise ValueError(f"entries must lie in [1, {spec.N}]")
    return CircleState(tuple(1 if i in entries else 0
                             for i in range(1, spec.N + 1)), scheme)


def circle_to_tableau(spec, state):
    if len(state.bits) != spec.N:
        raise ValueError(f"expected {spec.N} bits")
    ones = state.ones
    if len(ones) != spec.k:
        raise ValueError(f"expected {spec.k} dots, got {len(ones)}")
    if state.scheme == "L":
        return tuple(sorted(ones))
    return tuple(sorted(ones, reverse=True))


def partition_to_circle_L(spec, parts):
    return tableau_to_circle(spec, partition_to_tableau_L(spec, parts), "L")


def circle_to_partition_L(spec, state):
    if state.scheme != "L":
        raise ValueError("expected an L-scheme circle state")
    return tableau_to_partition_L(spec, circle_to_tableau(spec, state))


# -- diagonal coordinates ------------------------------------------------------------

# Diagonal i collects the box cells (r, c) with r - c = i - (N - k); the
# first N-k diagonals start along the top row (rightmost first), the
# remaining k-1 continue down the left column.


def partition_to_diagonal(spec, parts):
    parts = validate_partition(spec, parts)
    diag = [0] * (spec.N - 1)
    for r in range(1, spec.k + 1):
        for c in range(1, parts[r - 1] + 1):
            diag[r - c + spec.cols - 1] += 1
    return tuple(diag)


def validate_diagonal(spec, diag):
    diag = tuple(diag)
    n, k = spec.N, spec.k
    if len(diag) != n - 1:
        raise ValueError(f"expected {n - 1} diagonal entries")
    for i, d in enumerate(diag, start=1):
        if not isinstance(d, int) or d < 0:
            raise ValueError(f"diagonal entry {i} must be a nonnegative integer")
        if i <= n - k and d > min(i, k):
            raise ValueError(f"diagonal entry {i} exceeds {min(i, k)}")
        if i >= n - k and d > min(n - i, n - k):
            raise ValueError(f"diagonal entry {i} exceeds {min(n - i, n - k)}")
    for i in range(1, n - k):
        if diag[i] not in (diag[i - 1], diag[i - 1] + 1):
            raise ValueError(f"rising step violated between entries {i} and {i + 1}")
    for i in range(n - k, n - 1):
        if diag[i] not in (diag[i - 1], diag[i - 1] - 1):
            raise ValueError(f"falling step violated between entries {i} and {i + 1}")
    return diag


def is_valid_diagonal(spec, diag):
    try:
        validate_diagonal(spec, diag)
    except ValueError:
        return False
    return True


def diagonal_to_partition(spec, diag):
    diag = validate_diagonal(spec, diag)
    n, k = spec.N, spec.k
    parts = []
    for i in range(1, k + 1):
        total = sum(1 for j in range(i, n - k + 1) if diag[j - 1] >= i)
        total += sum(1 for l in range(1, i) if diag[n - k + l - 1] >= i - l)
        parts.append(total)
    return validate_partition(spec, parts)


# -- colored up-edges in each coordinatization ------------------------------------


def l_up_edges(spec, x, system="part"):
    """Up-neighbors of x with edge colors, computed natively per system."""
    if system == "part":
        parts = validate_partition(spec, x)
        out = []
        for l in range(1, spec.k + 1):
            if parts[l - 1] < spec.cols and (l == 1 or parts[l - 2] > parts[l - 1]):
                tau = parts[:l - 1] + (parts[l - 1] + 1,) + parts[l:]
                out.append((tau, spec.cols - tau[l - 1] + l))
        return out
    if system == "tab":
        entries = set(x)
        out = []
        for i in range(1, spec.N):
            if i + 1 in entries and i not in entries:
                out.append((tuple(sorted((entries - {i + 1}) | {i})), i))
        return out
    if system == "circ":
        if x.scheme != "L":
            raise ValueError("expected an L-scheme circle state")
        bits = x.bits
        out = []
        for l in range(1, spec.N):
            if bits[l] == 1 and bits[l - 1] == 0:
                t = list(bits)
                t[l], t[l - 1] = 0, 1
                out.append((CircleState(tuple(t), "L"), l))
        return out
    if system == "diag":
        diag = validate_diagonal(spec, x)
        out = []
        for l in range(1, spec.N):
            cand = diag[:l - 1] + (diag[l - 1] + 1,) + diag[l:]
            if is_valid_diagonal(spec, cand):
                out.append((cand, l))
        return out
    raise ValueError(f"unknown coordinatization {system!r}")


@lru_cache(maxsize=None)
def build_l_graph(spec, system="part"):
    """The L-lattice generated directly from one coordinatization's edge rule."""
    if system == "part":
        vertices = all_partitions(spec)
    elif system == "tab":
        vertices = [partition_to_tableau_L(spec, p) for p in all_partitions(spec)]
    elif system == "circ":
        vertices = [partition_to_circle_L(spec, p) for p in all_partitions(spec)]
    elif system == "diag":
        vertices = [partition_to_diagonal(spec, p) for p in all_partitions(spec)]
    else:
        raise ValueError(f"unknown coordinatization {system!r}")
    edges = []
    for v in vertices:
        for w, color in l_up_edges(spec, v, system):
            edges.append((v, w, color))
    return ColoredLattice(vertices, edges)


# -- product-of-chains lattice and its tableau sublattice ---------------------------


@lru_cache(maxsize=None)
def build_l_tilde(spec):
    """Product of k colored chains; vertices are tableau-valued k-tuples.

    Chain r runs from the numeric label N-k+r (bottom) up to r, the edge
    into label v carrying color v.
    """
    chains = []
    for r in range(1, spec.k + 1):
        labels = list(range(r, spec.cols + r + 1))
        edges = [(v + 1, v, v) for v in labels[:-1]]
        chains.append(ColoredLattice(labels, edges))
    return product(*chains)


def tab_vertices(spec):
    """The strictly increasing tuples inside the product of chains."""
    return [v for v in build_l_tilde(spec).vertices
            if all(a < b for a, b in zip(v, v[1:]))]


@lru_cache(maxsize=None)
def build_l_tab(spec):
    from .lattice import check_full_length_sublattice, induced_sublattice
    big = build_l_tilde(spec)
    K = [v for v in big.vertices if all(a < b for a, b in zip(v, v[1:]))]
    if not check_full_length_sublattice(big, K):
        raise ValueError("tableau subset is not a full-length sublattice")
    return induced_sublattice(big, K)
