"""JSON and DOT serialization.

Poset schema:   {"vertices": [{"id": str, "color": int}], "covers": [[id, id]]}
Lattice schema: {"vertices": [str], "edges": [{"from": str, "to": str, "color": int}]}

Output is deterministic (canonical ordering, fixed separators) so files
round-trip byte for byte.
"""

import json

from .lattice import ColoredLattice, sort_key
from .poset import VertexColoredPoset

_DOT_PALETTE = ("red", "blue", "forestgreen", "purple", "orange", "cyan4",
                "magenta", "gold3", "gray40", "brown", "darkolivegreen",
                "deeppink3")


def label(v):
    """Canonical flat string for a vertex label."""
    if isinstance(v, frozenset):
        return "{" + ";".join(sorted(label(x) for x in v)) + "}"
    if isinstance(v, tuple):
        return ",".join(label(x) for x in v)
    return str(v)


def poset_to_json(P):
    doc = {
        "vertices": [{"id": str(v), "color": P.color(v)} for v in P.vertices],
        "covers": sorted([str(a), str(b)] for a, b in P.covers),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def poset_from_json(text):
    doc = json.loads(text)
    vertices = [item["id"] for item in doc["vertices"]]
    colors = {item["id"]: item["color"] for item in doc["vertices"]}
    return VertexColoredPoset(vertices, [tuple(c) for c in doc["covers"]], colors)


def lattice_to_json(L):
    doc = {
        "vertices": sorted(label(v) for v in L.vertices),
        "edges": sorted(({"from": label(a), "to": label(b), "color": c}
                         for a, b, c in L.edges),
                        key=lambda e: (e["from"], e["to"])),
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def lattice_from_json(text):
    doc = json.loads(text)
    return ColoredLattice(doc["vertices"],
                          [(e["from"], e["to"], e["color"]) for e in doc["edges"]])


def lattice_to_dot(L, name="lattice"):
    """Graphviz source: edge label = color, same-rank layout hints."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for v in L.vertices:
        lines.append(f'  "{label(v)}";')
    ranks = L.ranks
    if ranks is not None:
        by_rank = {}
        for v, r in ranks.items():
            by_rank.setdefault(r, []).append(v)
        for r in sorted(by_rank):
            row = " ".join(f'"{label(v)}";' for v in
                           sorted(by_rank[r], key=sort_key))
            lines.append(f"  {{ rank=same; {row} }}")
    for a, b, c in L.edges:
        tint = _DOT_PALETTE[(c - 1) % len(_DOT_PALETTE)]
        lines.append(f'  "{label(a)}" -> "{label(b)}" '
                     f'[label="{c}", color="{tint}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
