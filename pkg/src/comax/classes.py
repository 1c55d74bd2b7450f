"""Recognizers for forbidden-subgraph graph classes.

Graphs are :class:`SimpleGraph` objects holding one integer bitmask of
neighbours per vertex.  Each recognizer decides membership with a
polynomial method and, on a negative verdict, returns a witness: the
lexicographically first induced embedding of a forbidden pattern (or an
induced cycle, for the cycle-based classes).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import InternalInconsistency, InvalidParameter

MAX_PATTERN = 8


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for {n} vertices")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def complement(self) -> SimpleGraph:
        full = self.full
        return SimpleGraph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def induced(self, vertices: list[int]) -> SimpleGraph:
        pos = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            adj.append(row)
        return SimpleGraph(len(vertices), tuple(adj))

    def is_valid(self) -> bool:
        return all(
            not a >> v & 1 and all(self.adj[u] >> v & 1 for u in _bits(a))
            for v, a in enumerate(self.adj)
        ) and all(a >> self.n == 0 for a in self.adj)


def path(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k, [(i, j) for i in range(k) for j in range(i)])


def star(k: int) -> SimpleGraph:
    return SimpleGraph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def _from_dict(d: dict[int, list[int]]) -> SimpleGraph:
    n = 1 + max(max(d), max(v for vs in d.values() for v in vs))
    return SimpleGraph.from_edges(n, [(u, v) for u, vs in d.items() for v in vs])


# The nine minimal non-line graphs (Beineke 1970).  Adjacency lists follow
# the enumeration used by SageMath's graphs.line_graph_forbidden_subgraphs();
# tests/test_classes.py re-derives minimality against a brute-force
# line-graph oracle.
BEINEKE = (
    ("beineke1", star(3)),
    ("beineke2", _from_dict({0: [1, 2, 3], 1: [2, 3], 4: [2], 5: [3]})),
    ("beineke3", _from_dict({0: [1, 2, 3, 4], 1: [2, 3, 4], 3: [4], 2: [5]})),
    ("beineke4", _from_dict({0: [1, 2, 3], 1: [2, 3], 4: [2, 3]})),
    ("beineke5", _from_dict({0: [1, 2, 3], 1: [2, 3], 4: [2], 5: [3, 4]})),
    ("beineke6", _from_dict({0: [1, 2, 3, 4], 1: [2, 3, 4], 3: [4], 5: [2, 0, 1]})),
    ("beineke7", _from_dict({5: [0, 1, 2, 3, 4], 0: [1, 4], 2: [1, 3], 3: [4]})),
    ("beineke8", _from_dict({1: [0, 2, 3, 4], 3: [0, 4], 2: [4, 5], 4: [5]})),
    ("beineke9", _from_dict({0: [1, 2, 3], 1: [2, 3, 4], 2: [3, 4], 3: [4]})),
)

PATTERNS: dict[str, SimpleGraph] = {
    "K3": complete(3),
    "P3": path(3),
    "P4": path(4),
    "C4": cycle(4),
    "C5": cycle(5),
    "2K2": SimpleGraph.from_edges(4, [(0, 1), (2, 3)]),
    "claw": star(3),
    **dict(BEINEKE),
}


def pattern_graph(name: str) -> SimpleGraph:
    if name in PATTERNS:
        return PATTERNS[name]
    if name.startswith("C") and name[1:].isdigit():
        return cycle(int(name[1:]))
    raise KeyError(f"unknown pattern {name!r}")


@dataclass(frozen=True)
class PatternWitness:
    pattern: str
    mapping: tuple[int, ...]

    def validate(self, host: SimpleGraph) -> bool:
        """True iff the mapping is an injective, exactly induced embedding."""
        pat = pattern_graph(self.pattern)
        m = self.mapping
        if len(m) != pat.n or len(set(m)) != len(m) or any(not 0 <= v < host.n for v in m):
            return False
        return all(
            pat.has_edge(i, j) == host.has_edge(m[i], m[j])
            for i in range(pat.n) for j in range(i)
        )

    def __str__(self):
        return f"{self.pattern} on {list(self.mapping)}"


def find_induced(
    pattern: SimpleGraph | str,
    host: SimpleGraph,
    name: str | None = None,
    within: int | None = None,
) -> Optional[PatternWitness]:
    """First induced copy of ``pattern`` in ``host``, searching pattern vertices
    in index order and host candidates in ascending order."""
    if isinstance(pattern, str):
        name, pattern = pattern, pattern_graph(pattern)
    if pattern.n > MAX_PATTERN:
        raise InvalidParameter(f"pattern has {pattern.n} vertices; at most {MAX_PATTERN} supported")
    name = name or f"pattern{pattern.n}"
    k = pattern.n
    pool = host.full if within is None else within
    if k == 0:
        return PatternWitness(name, ())

    deg_ok = []
    for i in range(k):
        d = pattern.degree(i)
        deg_ok.append(sum(1 << v for v in _bits(pool) if (host.adj[v] & pool).bit_count() >= d))
    earlier_adj = [[j for j in range(i) if pattern.has_edge(i, j)] for i in range(k)]
    earlier_non = [[j for j in range(i) if not pattern.has_edge(i, j)] for i in range(k)]
    image = [0] * k
    adj = host.adj

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = deg_ok[i] & ~used
        for j in earlier_adj[i]:
            cand &= adj[image[j]]
        for j in earlier_non[i]:
            cand &= ~adj[image[j]]
        for v in _bits(cand):
            image[i] = v
            if extend(i + 1, used | 1 << v):
                return True
        return False

    if extend(0, 0):
        return PatternWitness(name, tuple(image))
    return None


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: Optional[PatternWitness] = None

    def __bool__(self):
        return self.value


def _first_of(names: Iterable[str], g: SimpleGraph) -> Verdict:
    for name in names:
        w = find_induced(name, g)
        if w is not None:
            return Verdict(False, w)
    raise InternalInconsistency(f"no forbidden pattern among {list(names)} found")


def is_cluster(g: SimpleGraph) -> Verdict:
    for v in range(g.n):
        closed = g.adj[v] | 1 << v
        for u in _bits(g.adj[v]):
            if g.adj[u] | 1 << u != closed:
                return _first_of(["P3"], g)
    return Verdict(True)


def is_triangle_free(g: SimpleGraph) -> Verdict:
    for u in range(g.n):
        for v in _bits(g.adj[u] >> (u + 1) << (u + 1)):
            if g.adj[u] & g.adj[v]:
                return _first_of(["K3"], g)
    return Verdict(True)


def is_claw_free(g: SimpleGraph) -> Verdict:
    adj = g.adj
    for v in range(g.n):
        nv = adj[v]
        for a in _bits(nv):
            rest = nv & ~adj[a] & ~((2 << a) - 1)
            for b in _bits(rest):
                if rest & ~adj[b] & ~((2 << b) - 1):
                    return _first_of(["claw"], g)
    return Verdict(True)


def _components(adj_of: Callable[[int], int], pool: int) -> list[int]:
    comps = []
    while pool:
        start = pool & -pool
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj_of(v)
            grow &= pool & ~comp
            comp |= grow
            frontier = grow
        comps.append(comp)
        pool &= ~comp
    return comps


def cograph_irreducible(g: SimpleGraph) -> Optional[int]:
    """A vertex set (as a mask) that is connected and co-connected with at
    least two vertices, or None if the graph is complement-reducible."""
    adj = g.adj
    stack = [g.full]
    while stack:
        s = stack.pop()
        if s & (s - 1) == 0:
            continue
        parts = _components(lambda v: adj[v], s)
        if len(parts) == 1:
            parts = _components(lambda v: s & ~adj[v] & ~(1 << v), s)
            if len(parts) == 1:
                return s
        stack.extend(parts)
    return None


def is_cograph(g: SimpleGraph) -> Verdict:
    if cograph_irreducible(g) is None:
        return Verdict(True)
    return _first_of(["P4"], g)


def lex_bfs(g: SimpleGraph) -> list[int]:
    """Lexicographic BFS by partition refinement; ties go to the lowest index."""
    cells = [g.full] if g.n else []
    order = []
    while cells:
        first = cells[0]
        v = (first & -first).bit_length() - 1
        order.append(v)
        nv = g.adj[v]
        refined = []
        for c in cells:
            c &= ~(1 << v)
            inside, outside = c & nv, c & ~nv
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        cells = refined
    return order


def _peo_violation(g: SimpleGraph, order: list[int]) -> Optional[tuple[int, int, int]]:
    """Check that reversing a LexBFS order gives a perfect elimination order.

    Returns (v, u, w) with u, w earlier neighbours of v that are not adjacent.
    """
    seen = 0
    pos = {}
    for i, v in enumerate(order):
        pos[v] = i
        earlier = g.adj[v] & seen
        if earlier:
            parent = max(_bits(earlier), key=pos.__getitem__)
            missing = earlier & ~g.adj[parent] & ~(1 << parent)
            if missing:
                return v, parent, (missing & -missing).bit_length() - 1
        seen |= 1 << v
    return None


def _path_avoiding(g: SimpleGraph, a: int, b: int, allowed: int) -> Optional[list[int]]:
    """Shortest a-b path whose interior lies in ``allowed``."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in _bits(g.adj[x] & (allowed | 1 << b)):
            if y in prev:
                continue
            prev[y] = x
            if y == b:
                out = [b]
                while prev[out[-1]] is not None:
                    out.append(prev[out[-1]])
                return out[::-1]
            queue.append(y)
    return None


def _induced_cycle_through(g: SimpleGraph, v: int, a: int, b: int) -> Optional[list[int]]:
    block = g.adj[v] | 1 << v
    p = _path_avoiding(g, a, b, g.full & ~block)
    return None if p is None else [v] + p


def find_long_induced_cycle(g: SimpleGraph, hint=None) -> Optional[list[int]]:
    """An induced cycle of length >= 4, or None if the graph is chordal."""
    if hint is not None:
        c = _induced_cycle_through(g, *hint)
        if c is not None:
            return c
    for v in range(g.n):
        nv = g.adj[v]
        for a in _bits(nv):
            for b in _bits(nv & ~g.adj[a] & ~((2 << a) - 1)):
                c = _induced_cycle_through(g, v, a, b)
                if c is not None:
                    return c
    return None


def is_chordal(g: SimpleGraph) -> Verdict:
    bad = _peo_violation(g, lex_bfs(g))
    if bad is None:
        return Verdict(True)
    cyc = find_long_induced_cycle(g, bad)
    if cyc is None:
        raise InternalInconsistency("elimination order failed but no long induced cycle exists")
    return Verdict(False, PatternWitness(f"C{len(cyc)}", tuple(cyc)))


def splittance_ok(g: SimpleGraph) -> bool:
    degs = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    m = max((i for i, d in enumerate(degs, start=1) if d >= i - 1), default=0)
    return sum(degs[:m]) == m * (m - 1) + sum(degs[m:])


def is_split(g: SimpleGraph) -> Verdict:
    if splittance_ok(g):
        return Verdict(True)
    return _first_of(["C4", "C5", "2K2"], g)


def threshold_peel(g: SimpleGraph) -> bool:
    alive = g.full
    remaining = g.n
    while remaining:
        for v in _bits(alive):
            d = (g.adj[v] & alive).bit_count()
            if d == 0 or d == remaining - 1:
                alive &= ~(1 << v)
                remaining -= 1
                break
        else:
            return False
    return True


def is_threshold(g: SimpleGraph) -> Verdict:
    if threshold_peel(g):
        return Verdict(True)
    return _first_of(["P4", "C4", "2K2"], g)


def is_line_graph(g: SimpleGraph) -> Verdict:
    for name, pat in BEINEKE:
        w = find_induced(pat, g, name)
        if w is not None:
            return Verdict(False, w)
    return Verdict(True)


def _shorten_odd_cycle(g: SimpleGraph, cyc: list[int]) -> list[int]:
    """Split an odd cycle along chords until it is induced."""
    while True:
        k = len(cyc)
        chord = next(
            ((i, j) for i in range(k) for j in range(i + 2, k)
             if not (i == 0 and j == k - 1) and g.has_edge(cyc[i], cyc[j])),
            None,
        )
        if chord is None:
            return cyc
        i, j = chord
        inner = cyc[i:j + 1]
        outer = cyc[j:] + cyc[:i + 1]
        cyc = inner if len(inner) % 2 else outer


def is_bipartite(g: SimpleGraph) -> Verdict:
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in _bits(g.adj[x]):
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    cyc = _odd_cycle(parent, x, y)
                    cyc = _shorten_odd_cycle(g, cyc)
                    return Verdict(False, PatternWitness(f"C{len(cyc)}", tuple(cyc)))
    return Verdict(True)


def _odd_cycle(parent: list[int], x: int, y: int) -> list[int]:
    def chain(v):
        out = [v]
        while parent[out[-1]] >= 0:
            out.append(parent[out[-1]])
        return out

    px, py = chain(x), chain(y)
    common = set(px) & set(py)
    ax = next(i for i, v in enumerate(px) if v in common)
    ay = py.index(px[ax])
    return px[:ax + 1] + py[:ay][::-1]


CLASS_NAMES = (
    "cluster", "triangle_free", "claw_free", "cograph", "chordal",
    "split", "threshold", "line_graph", "bipartite",
)

RECOGNIZERS: dict[str, Callable[[SimpleGraph], Verdict]] = {
    "cluster": is_cluster,
    "triangle_free": is_triangle_free,
    "claw_free": is_claw_free,
    "cograph": is_cograph,
    "chordal": is_chordal,
    "split": is_split,
    "threshold": is_threshold,
    "line_graph": is_line_graph,
    "bipartite": is_bipartite,
}

# (premise, consequence) pairs that every report must respect
IMPLICATIONS = (
    ("cluster", "cograph"),
    ("cluster", "claw_free"),
    ("threshold", "split"),
    ("threshold", "cograph"),
    ("split", "chordal"),
    ("bipartite", "triangle_free"),
    ("line_graph", "claw_free"),
)


@dataclass
class GraphClassReport:
    verdicts: dict[str, bool] = field(default_factory=dict)
    witnesses: dict[str, Optional[PatternWitness]] = field(default_factory=dict)

    def __getitem__(self, name: str) -> bool:
        return self.verdicts[name]

    def lines(self) -> list[str]:
        out = []
        for name in CLASS_NAMES:
            if name not in self.verdicts:
                continue
            line = f"{name.replace('_', '-')}: {'yes' if self.verdicts[name] else 'no'}"
            w = self.witnesses.get(name)
            if w is not None:
                line += f" [witness: {w}]"
            out.append(line)
        return out


def classify(g: SimpleGraph, classes: Iterable[str] = CLASS_NAMES) -> GraphClassReport:
    report = GraphClassReport()
    for name in classes:
        v = RECOGNIZERS[name](g)
        report.verdicts[name] = v.value
        report.witnesses[name] = v.witness
    for a, b in IMPLICATIONS:
        if report.verdicts.get(a) and report.verdicts.get(b) is False:
            raise InternalInconsistency(f"graph is {a} but not {b}")
    return report


def parse_edge_list(text: str) -> SimpleGraph:
    """Read the ``n m`` header followed by ``m`` lines of ``u v``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise InvalidParameter("edge list must start with a line 'n m'")
    n, m = (int(t) for t in lines[0])
    body = lines[1:]
    if len(body) != m:
        raise InvalidParameter(f"header announces {m} edges, found {len(body)}")
    return SimpleGraph.from_edges(n, [(int(u), int(v)) for u, v in body])


def format_edge_list(g: SimpleGraph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])
