"""The Domino Game digraph and its coordinatizations.

Vertices are k x (N-k) partitions; directed edges are the legal domino
moves, colored by [N-1].  The "up" direction is fixed by the per-color
move-vector branch tables, which differ with the parity of N.  The board
is checkered with the upper-right cell red.
"""

from functools import lru_cache

from .lattice import ColoredLattice, is_diamond_colored
from .typea import (CircleState, all_partitions, is_valid_diagonal,
                    is_valid_partition, partition_to_diagonal,
                    validate_diagonal, validate_partition)


def is_red(spec, r, c):
    """Checkerboard predicate anchored red at the upper-right cell (1, N-k)."""
    if not (1 <= r <= spec.k and 1 <= c <= spec.cols):
        raise ValueError(f"cell ({r}, {c}) is outside the {spec.k}x{spec.cols} board")
    return (r + c) % 2 == (1 + spec.cols) % 2


def render_board(spec):
    """ASCII board with R/W cell tags, row 1 on top."""
    return "\n".join(
        "".join("R" if is_red(spec, r, c) else "W"
                for c in range(1, spec.cols + 1))
        for r in range(1, spec.k + 1))


def cells(spec, parts):
    parts = validate_partition(spec, parts)
    return {(r + 1, c + 1) for r, p in enumerate(parts) for c in range(p)}


def is_legal_domino_move(spec, sigma, tau):
    """Geometric move test, direction-agnostic.

    The symmetric difference of the two shapes must be either a single
    edge-adjacent pair of cells, or exactly the red corner cell.
    """
    if not (is_valid_partition(spec, sigma) and is_valid_partition(spec, tau)):
        return False
    diff = cells(spec, sigma) ^ cells(spec, tau)
    if len(diff) == 1:
        return diff == {(1, spec.cols)}
    if len(diff) == 2:
        (r1, c1), (r2, c2) = sorted(diff)
        return abs(r1 - r2) + abs(c1 - c2) == 1
    return False


def _apply(parts, deltas):
    out = list(parts)
    for j, d in deltas:
        out[j - 1] += d
    return tuple(out)


def beta_part(spec, sigma, l):
    """The color-l domino move available at sigma, if any.

    Returns (tau, delta) with delta the part-space difference tau - sigma,
    or None when no branch applies.  A two-row branch additionally needs
    its two cells in one column (sigma_j == sigma_{j+1}), otherwise the
    move would not be a domino; together with shape validity this leaves
    at most one candidate per color, which is asserted.
    """
    sigma = validate_partition(spec, sigma)
    n, k = spec.N, spec.k
    if not 1 <= l <= n - 1:
        raise ValueError(f"color {l} outside [1, {n - 1}]")
    mid = n // 2
    candidates = []

    def single(j, step):
        tau = _apply(sigma, [(j, step)])
        if is_valid_partition(spec, tau):
            candidates.append(tau)

    def double(j, step):
        if sigma[j - 1] != sigma[j]:
            return
        tau = _apply(sigma, [(j, step), (j + 1, step)])
        if is_valid_partition(spec, tau):
            candidates.append(tau)

    if n % 2 == 0:
        if l < mid:
            a = 2 * l - k
            for j in range(1, k + 1):
                if sigma[j - 1] - j == a:
                    single(j, -2)
            for j in range(1, k):
                if sigma[j] - j == a:
                    double(j, -1)
        elif l == mid:
            if sigma[0] == n - k:
                single(1, -1)
        else:
            for j in range(1, k + 1):
                if sigma[j - 1] - j == 2 * n - k - 2 * l - 1:
                    single(j, 2)
            for j in range(1, k):
                if sigma[j] - j == 2 * n - k - 2 * l:
                    double(j, 1)
    else:
        if l < mid:
            a = 2 * l - k + 1
            for j in range(1, k + 1):
                if sigma[j - 1] - j == a:
                    single(j, -2)
            for j in range(1, k):
                if sigma[j] - j == a:
                    double(j, -1)
        elif l == mid:
            if sigma[0] == n - k:
                single(1, -1)
        else:
            for j in range(1, k + 1):
                if sigma[j - 1] - j == 2 * n - k - 2 * l - 2:
                    single(j, 2)
            for j in range(1, k):
                if sigma[j] - j == 2 * n - k - 2 * l - 1:
                    double(j, 1)

    if not candidates:
        return None
    if len(candidates) > 1:
        raise AssertionError(
            f"color {l} matches several moves at {sigma}: {candidates}")
    tau = candidates[0]
    return tau, tuple(t - s for s, t in zip(sigma, tau))


def d_up_edges(spec, x, system="part"):
    """Up-neighbors with colors in the requested Domino coordinatization."""
    if system == "part":
        out = []
        for l in spec.colors:
            hit = beta_part(spec, x, l)
            if hit is not None:
                out.append((hit[0], l))
        return out
    if system == "tab":
        entries = set(x)
        out = []
        for l in spec.colors:
            xx, yy = dtab_move_pair(spec.N, l)
            if yy in entries and xx not in entries:
                out.append((tuple(sorted((entries - {yy}) | {xx}, reverse=True)), l))
        return out
    if system == "circ":
        if x.scheme != "D":
            raise ValueError("expected a D-scheme circle state")
        out = []
        for l in spec.colors:
            delta = beta_circ(spec, l)
            t = tuple(b + d for b, d in zip(x.bits, delta))
            if all(b in (0, 1) for b in t):
                out.append((CircleState(t, "D"), l))
        return out
    if system == "diag":
        diag = validate_diagonal(spec, x)
        out = []
        for l in spec.colors:
            t = tuple(d + e for d, e in zip(diag, beta_diag(spec, l)))
            if is_valid_diagonal(spec, t):
                out.append((t, l))
        return out
    raise ValueError(f"unknown coordinatization {system!r}")


@lru_cache(maxsize=None)
def build_d_a(spec):
    """The Domino Game lattice on all k x (N-k) partitions.

    Diamond coloring and the existence of unique extremes are asserted at
    build time; the deeper structure checks live in the verification
    suites.
    """
    vertices = all_partitions(spec)
    edges = []
    for sigma in vertices:
        for l in spec.colors:
            hit = beta_part(spec, sigma, l)
            if hit is not None:
                edges.append((sigma, hit[0], l))
    L = ColoredLattice(vertices, edges)
    if L.minimum is None or L.maximum is None:
        raise AssertionError("domino digraph lacks unique extremes")
    if not is_diamond_colored(L):
        raise AssertionError("domino digraph is not diamond colored")
    return L


def d_min(spec):
    """Bottom shape of the Domino lattice (computed structurally)."""
    return build_d_a(spec).minimum


def d_max(spec):
    return build_d_a(spec).maximum


def m_diag(spec):
    """Diagonal coordinates of the Domino minimum."""
    return partition_to_diagonal(spec, d_min(spec))


# -- the gamma conversion maps (Domino conventions) -----------------------------


def gamma_pt(spec, sigma):
    """Partition -> tableau, entries listed in decreasing order."""
    sigma = validate_partition(spec, sigma)
    return tuple(s + spec.k - j + 1 for j, s in enumerate(sigma, start=1))


def gamma_tp(spec, entries):
    entries = tuple(sorted(entries, reverse=True))
    if len(set(entries)) != len(entries) or len(entries) != spec.k:
        raise ValueError(f"expected {spec.k} distinct tableau entries")
    if not all(1 <= t <= spec.N for t in entries):
        raise ValueError(f"entries must lie in [1, {spec.N}]")
    return validate_partition(
        spec, tuple(t - spec.k + j - 1 for j, t in enumerate(entries, start=1)))


def gamma_tc(spec, entries):
    entries = set(entries)
    if len(entries) != spec.k or not entries <= set(range(1, spec.N + 1)):
        raise ValueError(f"expected {spec.k} distinct entries in [1, {spec.N}]")
    return CircleState(tuple(1 if i in entries else 0
                             for i in range(1, spec.N + 1)), "D")


def gamma_ct(spec, state):
    if state.scheme != "D":
        raise ValueError("expected a D-scheme circle state")
    if len(state.bits) != spec.N:
        raise ValueError(f"expected {spec.N} bits")
    ones = state.ones
    if len(ones) != spec.k:
        raise ValueError(f"expected {spec.k} dots, got {len(ones)}")
    return tuple(sorted(ones, reverse=True))


def partition_to_circle_D(spec, sigma):
    return gamma_tc(spec, gamma_pt(spec, sigma))


def circle_to_partition_D(spec, state):
    return gamma_tp(spec, gamma_ct(spec, state))


# -- move vectors in the other coordinate spaces ---------------------------------


def dtab_move_pair(N, l):
    """(x, y) such that the color-l up-move replaces tableau entry y by x.

    The middle color owns its index; the outer branches are strict, which
    resolves the overlap the printed ranges would otherwise have.
    """
    if not 1 <= l <= N - 1:
        raise ValueError(f"color {l} outside [1, {N - 1}]")
    mid = N // 2
    if N % 2 == 0:
        if l < mid:
            return (2 * l - 1, 2 * l + 1)
        if l == mid:
            return (2 * l - 1, 2 * l)
        return (2 * N - 2 * l + 2, 2 * N - 2 * l)
    if l < mid:
        return (2 * l, 2 * l + 2)
    if l == mid:
        return (2 * l, 2 * l + 1)
    return (2 * N - 2 * l + 1, 2 * N - 2 * l - 1)


def beta_circ(spec, l):
    """Circle-space delta of the color-l up-move: one dot hops y -> x.

    Components are the indicator difference; the signs follow from the
    tableau move pair so that transported partition edges are reproduced
    exactly.
    """
    x, y = dtab_move_pair(spec.N, l)
    delta = [0] * spec.N
    delta[x - 1] += 1
    delta[y - 1] -= 1
    return tuple(delta)


def beta_diag(spec, l):
    """Diagonal-space delta of the color-l up-move."""
    n = spec.N
    if not 1 <= l <= n - 1:
        raise ValueError(f"color {l} outside [1, {n - 1}]")
    mid = n // 2
    delta = [0] * (n - 1)
    if n % 2 == 0:
        if l < mid:
            delta[n - 2 * l - 1] -= 1
            delta[n - 2 * l] -= 1
        elif l == mid:
            delta[0] -= 1
        else:
            delta[2 * l - n - 1] += 1
            delta[2 * l - n - 2] += 1
    else:
        if l < mid:
            delta[n - 2 * l - 1] -= 1
            delta[n - 2 * l - 2] -= 1
        elif l == mid:
            delta[0] -= 1
        else:
            delta[2 * l - n - 1] += 1
            delta[2 * l - n] += 1
    return tuple(delta)
