"""Brute-force reference checks shared by several test modules."""

from itertools import product

from comax.classes import BEINEKE, find_induced
from comax.groups import GroupTable

FORBIDDEN = {
    "cluster": ("P3",),
    "triangle_free": ("K3",),
    "claw_free": ("claw",),
    "cograph": ("P4",),
    "chordal": ("C4", "C5", "C6", "C7", "C8"),
    "split": ("2K2", "C4", "C5"),
    "threshold": ("P4", "C4", "2K2"),
    "line_graph": tuple(name for name, _ in BEINEKE),
    "bipartite": ("C3", "C5", "C7"),
}


def forbidden_free(cls: str, g) -> bool:
    return all(find_induced(name, g) is None for name in FORBIDDEN[cls])


def closure(g: GroupTable, seed) -> frozenset:
    out = {g.identity}
    frontier = [g.identity]
    seed = list(seed)
    while frontier:
        nxt = []
        for a in frontier:
            for s in seed:
                y = g.mul[a][s]
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def subgroups_by_adjoining(g: GroupTable) -> set:
    """All subgroups, grown from the trivial one by adjoining single elements."""
    found = {frozenset([g.identity])}
    todo = list(found)
    while todo:
        h = todo.pop()
        for x in range(g.order):
            if x not in h:
                k = closure(g, list(h) + [x])
                if k not in found:
                    found.add(k)
                    todo.append(k)
    return found


def comaximal_by_products(g: GroupTable, h, k) -> bool:
    return len({g.mul[a][b] for a in h for b in k}) == g.order


def is_subgroup_by_axioms(g: GroupTable, s) -> bool:
    return g.identity in s and all(g.mul[a][g.inv[b]] in s for a, b in product(s, repeat=2))
