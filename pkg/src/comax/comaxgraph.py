"""The co-maximal subgroup graph and its exports.

Vertices are the proper nontrivial subgroups, in lattice order.  H and K
are adjacent when HK is the whole group, which for subgroups is the
counting condition |H||K| = |G||H ∩ K|.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from math import gcd

from .classes import SimpleGraph
from .errors import AmbientMismatch, InvalidParameter, ResourceLimit
from .groups import GroupTable, make_gen_quaternion
from .lattice import SubgroupLattice, SubgroupSet, _closure, all_subgroups


@dataclass(frozen=True)
class ComaxGraph:
    group_name: str
    group_order: int
    vertices: tuple[SubgroupSet, ...]
    adj: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def as_simple(self) -> SimpleGraph:
        return SimpleGraph(len(self.vertices), self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return self.as_simple().edges()

    def labels(self) -> list[str]:
        return [v.describe() for v in self.vertices]

    def isolated(self) -> list[int]:
        return [i for i, a in enumerate(self.adj) if a == 0]


def build_comax_graph(g: GroupTable, lat: SubgroupLattice) -> ComaxGraph:
    if lat.group is not g and (lat.group.name, lat.group.order) != (g.name, g.order):
        raise AmbientMismatch(f"lattice of {lat.group.name} used with group {g.name}")
    verts = tuple(lat.proper_nontrivial())
    n, order = len(verts), g.order
    by_order: dict[int, list[int]] = defaultdict(list)
    for i, h in enumerate(verts):
        by_order[h.order].append(i)
    adj = [0] * n
    sizes = sorted(by_order)
    for ai, a in enumerate(sizes):
        for b in sizes[ai:]:
            # |H||K| = |G| |H∩K| forces the intersection size
            if (a * b) % order:
                continue
            meet = a * b // order
            if meet < 1:
                continue
            left, right = by_order[a], by_order[b]
            for i in left:
                hb = verts[i].bits
                for j in right:
                    if j <= i and a == b:
                        continue
                    if (hb & verts[j].bits).bit_count() == meet:
                        adj[i] |= 1 << j
                        adj[j] |= 1 << i
    return ComaxGraph(g.name, order, verts, tuple(adj))


def comax_graph(g: GroupTable, **caps) -> ComaxGraph:
    return build_comax_graph(g, all_subgroups(g, **caps))


def export_dot(graph: ComaxGraph) -> str:
    lines = ["graph comax {"]
    for i, h in enumerate(graph.vertices):
        elems = ", ".join(str(x) for x in h.elements())
        lines.append(f'  v{i} [label="|H|={h.order}: {{{elems}}}"];')
    for u, v in graph.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(graph: ComaxGraph) -> str:
    doc = {
        "group": graph.group_name,
        "vertices": [{"order": h.order, "elements": h.elements()} for h in graph.vertices],
        "edges": [list(e) for e in graph.edges()],
    }
    return json.dumps(doc) + "\n"


def parse_graph_json(text: str) -> tuple[str, SimpleGraph]:
    """Read a graph written by :func:`export_json`; returns (group name, graph)."""
    doc = json.loads(text)
    n = len(doc["vertices"])
    return doc.get("group", ""), SimpleGraph.from_edges(n, [tuple(e) for e in doc["edges"]])


# -- generalized quaternion closed form ---------------------------------------

@dataclass(frozen=True)
class QSubgroupDescriptor:
    """``kind="I"``: <r^d>.  ``kind="II"``: <r^d, r^i s> with 0 <= i < d."""

    kind: str
    d: int
    i: int = 0

    def __str__(self):
        if self.kind == "I":
            return f"<r^{self.d}>"
        return f"<r^{self.d}, r^{self.i}s>"


def _check_descriptor(n: int, a: QSubgroupDescriptor) -> None:
    top = 2 ** (n - 1)
    if a.kind not in ("I", "II"):
        raise InvalidParameter(f"descriptor kind must be 'I' or 'II', got {a.kind!r}")
    if a.d < 1 or top % a.d:
        raise InvalidParameter(f"{a}: d must divide {top}")
    if a.kind == "I" and a.d == top:
        raise InvalidParameter(f"{a}: trivial subgroup")
    if a.kind == "II":
        # d = 1 names the whole group; the closed form still evaluates it
        if a.d > top // 2:
            raise InvalidParameter(f"{a}: need d <= {top // 2} for a Type-II subgroup")
        if not 0 <= a.i < a.d:
            raise InvalidParameter(f"{a}: shift must satisfy 0 <= i < d")


def q_adjacency_predicate(n: int, a: QSubgroupDescriptor, b: QSubgroupDescriptor) -> bool:
    """Closed-form adjacency of two proper nontrivial subgroups of Q_{2^n}."""
    if n < 3:
        raise InvalidParameter(f"Q_(2^n) needs n >= 3, got {n}")
    _check_descriptor(n, a)
    _check_descriptor(n, b)
    if a.kind == "I" and b.kind == "I":
        return False
    g = gcd(a.d, b.d)
    if a.kind != b.kind:
        return g == 1
    return g == 1 or (g == 2 and (a.i - b.i) % 2 == 1)


def realize_q_descriptor(q: GroupTable, n: int, a: QSubgroupDescriptor) -> SubgroupSet:
    half = 2 ** (n - 1)
    r, s = 1, half  # index layout of make_dicyclic: x^a y^b at a + 2m*b
    gens = [q.power(r, a.d)]
    if a.kind == "II":
        gens.append(q.mul[q.power(r, a.i)][s])
    return SubgroupSet(q, _closure(q, gens))


def q_descriptors(n: int, max_n: int = 7) -> list[tuple[QSubgroupDescriptor, SubgroupSet]]:
    """Every proper nontrivial subgroup of Q_{2^n} with its descriptor."""
    if n < 3:
        raise InvalidParameter(f"Q_(2^n) needs n >= 3, got {n}")
    if n > max_n:
        raise ResourceLimit(f"Q_(2^{n}) exceeds the descriptor cap n <= {max_n}", max_n)
    q = make_gen_quaternion(n)
    top = 2 ** (n - 1)
    out = []
    d = 1
    while d < top:
        out.append(QSubgroupDescriptor("I", d))
        d *= 2
    d = 2
    while d <= top // 2:
        for i in range(d):
            out.append(QSubgroupDescriptor("II", d, i))
        d *= 2
    return [(a, realize_q_descriptor(q, n, a)) for a in out]
