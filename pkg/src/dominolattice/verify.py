"""Named verification suites behind the CLI `verify` subcommand.

Each suite returns a report dict with a boolean "passed" plus per-check
entries, so failures say what broke.  The pytest acceptance module covers
the same ground; these suites make it scriptable.
"""

import random
from math import comb

from .lattice import (ColoredLattice, is_diamond_colored, is_distributive,
                      is_modular, is_topographically_balanced, path_stats,
                      product)
from .poset import (canonical_iso_to_filters, canonical_iso_to_ideals,
                    check_poset_iso, disjoint_sum, dual, j_lattice,
                    join_irreducibles, m_lattice, meet_irreducibles,
                    principal_filter, principal_ideal, recolor)
from .typea import (BoxSpec, build_l_a, build_l_tab, build_l_tilde,
                    ideal_to_partition, partition_to_circle_L,
                    partition_to_diagonal, partition_to_tableau_L,
                    build_l_graph, all_partitions, circle_to_partition_L,
                    diagonal_to_partition, tableau_to_partition_L)
from .domino import (build_d_a, circle_to_partition_D, d_up_edges, gamma_pt,
                     gamma_tp, is_legal_domino_move, partition_to_circle_D)
from .isomorphism import apply_p, move_matrix, phi, phi_inverse
from .oracle import (bfs_all_pairs, check_constructed_iso,
                     enumerate_shortest_paths, random_colored_poset)
from .solver import solve_distributive, solve_domino

SUITES = ("fundamental", "coordinates", "iso", "solver", "structure", "transport")


def _result(checks):
    return {"passed": all(ok for _, ok in checks),
            "checks": [{"name": name, "passed": ok} for name, ok in checks]}


def _partition_lattice(spec):
    return build_l_a(spec).relabel(lambda i: ideal_to_partition(spec, i))


def suite_fundamental(seed=0, rounds=50):
    """Birkhoff round trips and the J/M/j/m identity families."""
    rng = random.Random(seed)
    checks = []
    jj = mm = True
    for _ in range(rounds):
        P = random_colored_poset(rng, 8, 4)
        L = j_lattice(P)
        jj &= check_poset_iso(P, join_irreducibles(L),
                              {v: principal_ideal(P, v) for v in P.vertices})
        jj &= check_constructed_iso(
            L, j_lattice(join_irreducibles(L)),
            {x: canonical_iso_to_ideals(L, x) for x in L.vertices})
        M = m_lattice(P)
        mm &= check_poset_iso(P, meet_irreducibles(M),
                              {v: principal_filter(P, v) for v in P.vertices})
        mm &= check_constructed_iso(
            M, m_lattice(meet_irreducibles(M)),
            {x: canonical_iso_to_filters(M, x) for x in M.vertices})
    checks.append(("j(J(P)) = P and J(j(L)) = L", jj))
    checks.append(("m(M(P)) = P and M(m(L)) = L", mm))

    fam = {"dual": True, "recolor": True, "sum": True}
    for _ in range(max(10, rounds // 2)):
        P = random_colored_poset(rng, 6, 3)
        Q = random_colored_poset(rng, 6, 3)
        sigma = {c: c + 7 for c in range(1, 4)}
        for build in (j_lattice, m_lattice):
            built = build(P)
            comp = {x: frozenset(set(P.vertices) - x)
                    for x in build(dual(P)).vertices}
            fam["dual"] &= check_constructed_iso(build(dual(P)), built.dual(), comp)
            tinted = ColoredLattice(built.vertices,
                                    [(a, b, sigma[c]) for a, b, c in built.edges])
            fam["recolor"] &= check_constructed_iso(
                build(recolor(P, sigma)), tinted,
                {x: x for x in built.vertices})
            summed = build(disjoint_sum(P, Q))
            split = {x: (frozenset(v for t, v in x if t == 0),
                         frozenset(v for t, v in x if t == 1))
                     for x in summed.vertices}
            fam["sum"] &= check_constructed_iso(summed,
                                                product(build(P), build(Q)), split)
    checks.append(("duality family", fam["dual"]))
    checks.append(("recoloring family", fam["recolor"]))
    checks.append(("sum/product family", fam["sum"]))
    return _result(checks)


def suite_coordinates(k, N):
    """Conversion square and edge agreement for one box."""
    spec = BoxSpec(k, N)
    checks = []
    parts = all_partitions(spec)
    ok = all(
        tableau_to_partition_L(spec, partition_to_tableau_L(spec, p)) == p
        and circle_to_partition_L(spec, partition_to_circle_L(spec, p)) == p
        and diagonal_to_partition(spec, partition_to_diagonal(spec, p)) == p
        and gamma_tp(spec, gamma_pt(spec, p)) == p
        and circle_to_partition_D(spec, partition_to_circle_D(spec, p)) == p
        for p in parts)
    checks.append(("round trips through every coordinatization", ok))
    base = build_l_graph(spec, "part")
    for system, conv in (("tab", lambda p: partition_to_tableau_L(spec, p)),
                         ("circ", lambda p: partition_to_circle_L(spec, p)),
                         ("diag", lambda p: partition_to_diagonal(spec, p))):
        checks.append((f"edge agreement part vs {system}",
                       check_constructed_iso(base, build_l_graph(spec, system), conv)))
    checks.append(("ideal lattice matches the partition edge rule",
                   check_constructed_iso(build_l_a(spec), base,
                                         lambda i: ideal_to_partition(spec, i))))
    checks.append(("cardinality C(N, k)", len(parts) == comb(N, k)))
    return _result(checks)


def suite_iso(k, N):
    """Phi as a colored digraph isomorphism, plus the matrix transport."""
    spec = BoxSpec(k, N)
    L = _partition_lattice(spec)
    D = build_d_a(spec)
    checks = [
        ("phi is a color-preserving isomorphism",
         check_constructed_iso(L, D, {p: phi(spec, p) for p in L.vertices})),
        ("phi_inverse inverts phi",
         all(phi_inverse(spec, phi(spec, p)) == p for p in L.vertices)),
        ("matrix transport agrees with phi",
         all(apply_p(spec, partition_to_diagonal(spec, p))
             == partition_to_diagonal(spec, phi(spec, p)) for p in L.vertices)),
        ("move matrix is invertible over the integers",
         move_matrix(spec).is_unimodular),
    ]
    return _result(checks)


def suite_solver(k, N, seed=0):
    """Closed-form distances against BFS, path legality, color optimality."""
    spec = BoxSpec(k, N)
    from .typea import build_p_a, partition_to_ideal
    P = build_p_a(spec)
    L = _partition_lattice(spec)
    D = build_d_a(spec)
    distL = bfs_all_pairs(L)
    distD = bfs_all_pairs(D)
    okL = okD = okPath = True
    for a in D.vertices:
        for b in D.vertices:
            ga = solve_distributive(P, partition_to_ideal(spec, a),
                                    partition_to_ideal(spec, b))
            okL &= ga.distance == distL[(a, b)]
            gd = solve_domino(spec, a, b)
            okD &= gd.distance == distD[(a, b)]
            try:
                gd.path.validate(D)
            except Exception:
                okPath = False
    checks = [("ideal-counting distance equals BFS on L", okL),
              ("multiset distance equals BFS on D", okD),
              ("returned domino paths are legal colored edges", okPath)]
    rng = random.Random(seed)
    verts = list(D.vertices)
    okColors = True
    for _ in range(10):
        a, b = rng.choice(verts), rng.choice(verts)
        expected = solve_domino(spec, a, b).per_color
        for p in enumerate_shortest_paths(D, a, b):
            _, asc, desc = path_stats(p)
            okColors &= (asc + desc) == expected
    checks.append(("all shortest paths share the per-color census", okColors))
    return _result(checks)


def suite_structure(k, N, include_chain_product=None):
    """Diamond coloring, balance, lattice laws, and the rank identity."""
    spec = BoxSpec(k, N)
    if include_chain_product is None:
        include_chain_product = (spec.cols + 1) ** spec.k <= 130
    built = [("L_A", _partition_lattice(spec)), ("D_A", build_d_a(spec))]
    if include_chain_product:
        built.append(("L_tilde", build_l_tilde(spec)))
        built.append(("L_tab", build_l_tab(spec)))
    checks = []
    for name, L in built:
        ranks = L.ranks
        good = (L.is_lattice and is_diamond_colored(L)
                and is_topographically_balanced(L)
                and is_modular(L) and is_distributive(L) and ranks is not None)
        if good:
            for s in L.vertices:
                for t in L.vertices:
                    if (2 * ranks[L.join(s, t)] - ranks[s] - ranks[t]
                            != ranks[s] + ranks[t] - 2 * ranks[L.meet(s, t)]):
                        good = False
                        break
                if not good:
                    break
        checks.append((f"{name} structure and rank identity", good))
    return _result(checks)


def suite_transport(k, N):
    """Move-vector coherence across coordinatizations; geometric legality."""
    spec = BoxSpec(k, N)
    okEdges = okGeom = True
    for sigma in all_partitions(spec):
        part = {(t, l) for t, l in d_up_edges(spec, sigma, "part")}
        tab = {(gamma_tp(spec, t), l)
               for t, l in d_up_edges(spec, gamma_pt(spec, sigma), "tab")}
        circ = {(circle_to_partition_D(spec, t), l)
                for t, l in d_up_edges(spec, partition_to_circle_D(spec, sigma), "circ")}
        diag = {(diagonal_to_partition(spec, t), l)
                for t, l in d_up_edges(spec, partition_to_diagonal(spec, sigma), "diag")}
        okEdges &= part == tab == circ == diag
        okGeom &= all(is_legal_domino_move(spec, sigma, t) for t, _ in part)
    return _result([
        ("beta vectors generate one edge set in all coordinatizations", okEdges),
        ("every generated edge is a legal domino move", okGeom),
    ])


def run_suite(name, k=2, N=5, seed=0):
    if name == "fundamental":
        return suite_fundamental(seed=seed)
    if name == "coordinates":
        return suite_coordinates(k, N)
    if name == "iso":
        return suite_iso(k, N)
    if name == "solver":
        return suite_solver(k, N, seed=seed)
    if name == "structure":
        return suite_structure(k, N)
    if name == "transport":
        return suite_transport(k, N)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
