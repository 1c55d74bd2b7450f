"""Finite groups as Cayley tables over dense element indices.

Every constructor returns a :class:`GroupTable` whose elements are the
integers ``0..n-1``.  The multiplication table is stored as a tuple of
row tuples so tables are immutable and can be shared between threads
and pickled into worker processes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidParameter, ResourceLimit

DEFAULT_TABLE_CAP = 1024


@dataclass(frozen=True, eq=False)
class GroupTable:
    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    inv: tuple[int, ...]
    name: str
    generator_labels: dict[int, str] = field(default_factory=dict)
    _words: dict = field(default_factory=dict, repr=False)

    def __repr__(self):
        return f"GroupTable({self.name!r}, order={self.order})"

    def __len__(self):
        return self.order

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        result = self.identity
        base = x
        while k:
            if k & 1:
                result = self.mul[result][base]
            base = self.mul[base][base]
            k >>= 1
        return result

    def is_abelian(self) -> bool:
        mul = self.mul
        return all(mul[i][j] == mul[j][i] for i in range(self.order) for j in range(i))

    def label(self, x: int) -> str:
        """Shortest word in the labelled generators, e.g. "r^2 s".

        Falls back to the element index when the labels do not generate.
        """
        if not self._words:
            self._words.update(_shortest_words(self))
        return self._words.get(x, str(x))


def _shortest_words(g: GroupTable) -> dict[int, str]:
    gens = sorted(g.generator_labels.items(), key=lambda t: t[1])
    # ordered normal forms g1^a1 g2^a2 ... first, then BFS for the rest
    words: dict[int, list[str]] = {g.identity: []}
    for x, lab in gens:
        for a, w in list(words.items()):
            y, k = g.mul[a][x], 1
            while y not in words:
                words[y] = w + [lab] * k
                y, k = g.mul[y][x], k + 1
    frontier = list(words)
    while frontier:
        nxt = []
        for a in frontier:
            for x, lab in gens:
                y = g.mul[a][x]
                if y not in words:
                    words[y] = words[a] + [lab]
                    nxt.append(y)
        frontier = nxt
    out = {}
    for x, w in words.items():
        parts = []
        for lab in w:
            if parts and parts[-1][0] == lab:
                parts[-1][1] += 1
            else:
                parts.append([lab, 1])
        out[x] = " ".join(lab if k == 1 else f"{lab}^{k}" for lab, k in parts) or "1"
    return out


def _table(mul: Sequence[Sequence[int]], name: str, labels=None) -> GroupTable:
    """Wrap a raw table, locating the identity and inverses by scanning."""
    n = len(mul)
    rows = tuple(tuple(int(v) for v in row) for row in mul)
    identity = next(
        (e for e in range(n) if all(rows[e][x] == x for x in range(n))), 0
    )
    inv = []
    for x in range(n):
        row = rows[x]
        inv.append(next((y for y in range(n) if row[y] == identity), identity))
    return GroupTable(n, rows, identity, tuple(inv), name, dict(labels or {}))


def make_cyclic(n: int) -> GroupTable:
    if n < 1:
        raise InvalidParameter(f"cyclic group needs n >= 1, got {n}")
    rows = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    inv = tuple((-i) % n for i in range(n))
    labels = {1: "g"} if n > 1 else {}
    return GroupTable(n, rows, 0, inv, f"C{n}", labels)


def make_dihedral(n: int) -> GroupTable:
    """Symmetries of the n-gon: index ``i`` is r^i, index ``n+i`` is r^i s."""
    if n < 3:
        raise InvalidParameter(f"dihedral group needs n >= 3, got {n}")

    def mult(a, b):
        (i, f), (j, g) = divmod_pair(a, n), divmod_pair(b, n)
        k = (i - j) % n if f else (i + j) % n
        return k + n * ((f + g) % 2)

    rows = [[mult(a, b) for b in range(2 * n)] for a in range(2 * n)]
    return _table(rows, f"D{n}", {1: "r", n: "s"})


def divmod_pair(index: int, n: int) -> tuple[int, int]:
    """Split an index ``a + n*b`` into ``(a, b)``."""
    return index % n, index // n


def make_dicyclic(m: int) -> GroupTable:
    """Dic_m of order 4m: x^(2m) = 1, x^m = y^2, y x y^-1 = x^-1.

    Index ``a + 2m*b`` encodes x^a y^b with b in {0, 1}.
    """
    if m < 2:
        raise InvalidParameter(f"dicyclic group needs m >= 2, got {m}")
    half = 2 * m

    def mult(u, v):
        (a, b), (c, d) = divmod_pair(u, half), divmod_pair(v, half)
        if b == 0:
            return (a + c) % half + half * d
        if d == 0:
            return (a - c) % half + half
        return (a - c + m) % half

    rows = [[mult(u, v) for v in range(2 * half)] for u in range(2 * half)]
    return _table(rows, f"Dic{m}", {1: "x", half: "y"})


def make_gen_quaternion(k: int) -> GroupTable:
    if k < 3:
        raise InvalidParameter(f"generalized quaternion group needs k >= 3, got {k}")
    g = make_dicyclic(2 ** (k - 2))
    return GroupTable(g.order, g.mul, g.identity, g.inv, f"Q{2 ** k}", g.generator_labels)


def make_semidirect(n: int, m: int, k: int) -> GroupTable:
    """C_n ⋊ C_m where the generator of C_m acts by x -> x^k.

    Pair ``(a, b)`` lives at index ``a*m + b``.
    """
    if n < 1 or m < 1 or k < 1:
        raise InvalidParameter(f"semidirect parameters must be positive, got ({n},{m},{k})")
    if gcd(k, n) != 1:
        raise InvalidParameter(f"gcd({k}, {n}) = {gcd(k, n)} != 1: x -> x^{k} is not an automorphism of C{n}")
    if pow(k, m, n) != 1 % n:
        raise InvalidParameter(
            f"{k}^{m} = {pow(k, m, n)} (mod {n}), need 1: action is not a homomorphism from C{m}"
        )
    twist = [pow(k, b, n) for b in range(m)]
    size = n * m
    rows = []
    for u in range(size):
        a, b = divmod(u, m)
        row = []
        for v in range(size):
            c, d = divmod(v, m)
            row.append(((a + c * twist[b]) % n) * m + (b + d) % m)
        rows.append(row)
    labels = {}
    if n > 1:
        labels[m] = "x"
    if m > 1:
        labels[1] = "y"
    return _table(rows, f"SD({n},{m},{k})", labels)


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Turn cycle notation like ``"(0 1)(2 3)"`` into an image tuple."""
    cycles = []
    for chunk in text.replace(")", "").split("("):
        points = [int(tok) for tok in chunk.replace(",", " ").split()]
        if points:
            cycles.append(points)
    top = max((p for c in cycles for p in c), default=-1) + 1
    degree = max(degree or 0, top)
    image = list(range(degree))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            image[p] = cyc[(i + 1) % len(cyc)]
    return tuple(image)


def from_permutations(
    generators: Iterable[Sequence[int]],
    name: str = "perm",
    cap: int = DEFAULT_TABLE_CAP,
) -> GroupTable:
    """Breadth-first closure of a set of permutations.

    Permutations are image sequences; shorter ones are padded with fixed
    points.  Composition ``p*q`` applies ``q`` first, then ``p``.
    """
    gens = [tuple(int(v) for v in g) for g in generators]
    degree = max((len(g) for g in gens), default=0)
    padded = []
    for g in gens:
        if sorted(g) != list(range(len(g))):
            raise InvalidParameter(f"not a bijection on 0..{len(g) - 1}: {g}")
        padded.append(g + tuple(range(len(g), degree)))

    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        p = elements[head]
        head += 1
        for g in padded:
            q = tuple(p[g[i]] for i in range(degree))
            if q not in index:
                if len(elements) >= cap:
                    raise ResourceLimit(f"permutation closure exceeds cap {cap}", cap)
                index[q] = len(elements)
                elements.append(q)

    rows = []
    for p in elements:
        rows.append([index[tuple(p[q[i]] for i in range(degree))] for q in elements])
    labels = {index[g]: f"g{i}" for i, g in enumerate(padded) if g != ident}
    return _table(rows, name, labels)


def make_alternating(n: int, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    if n < 1:
        raise InvalidParameter(f"alternating group needs n >= 1, got {n}")
    gens = [parse_cycles(f"(0 1 {i})", n) for i in range(2, n)]
    return from_permutations(gens, f"A{n}", cap)


def make_symmetric(n: int, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    if n < 1:
        raise InvalidParameter(f"symmetric group needs n >= 1, got {n}")
    gens = []
    if n >= 2:
        gens.append(parse_cycles("(0 1)", n))
        gens.append(tuple(list(range(1, n)) + [0]))
    return from_permutations(gens, f"S{n}", cap)


def direct_product(g: GroupTable, h: GroupTable, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    """Componentwise product; pair ``(i, j)`` lives at index ``i*|h| + j``."""
    n, m = g.order, h.order
    if n * m > cap:
        raise ResourceLimit(f"direct product order {n * m} exceeds cap {cap}", cap)
    gm, hm = g.mul, h.mul
    rows = tuple(
        tuple(gm[a][c] * m + hm[b][d] for c in range(n) for d in range(m))
        for a in range(n)
        for b in range(m)
    )
    inv = tuple(g.inv[a] * m + h.inv[b] for a in range(n) for b in range(m))
    labels = {}
    for x, lab in g.generator_labels.items():
        labels[x * m + h.identity] = f"({lab},1)"
    for y, lab in h.generator_labels.items():
        labels[g.identity * m + y] = f"(1,{lab})"
    return GroupTable(
        n * m, rows, g.identity * m + h.identity, inv, f"{g.name}x{h.name}", labels
    )


def element_order(g: GroupTable, x: int) -> int:
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} out of range for order {g.order}")
    t, y = 1, x
    while y != g.identity:
        y = g.mul[y][x]
        t += 1
    return t


def order_census(g: GroupTable) -> dict[int, int]:
    """Map each element order to how many elements have it."""
    return dict(sorted(Counter(element_order(g, x) for x in range(g.order)).items()))


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    witness: tuple[int, ...]


@dataclass
class ValidationReport:
    group: str
    failures: list[AxiomFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failed_axioms(self) -> set[str]:
        return {f.axiom for f in self.failures}


def validate(g: GroupTable) -> ValidationReport:
    """Check closure, identity, inverse and associativity exhaustively.

    Reports at most one witness per axiom.  If any entry is out of range
    the remaining axioms are skipped, since they index through the table.
    """
    report = ValidationReport(g.name)
    n = g.order
    if len(g.mul) != n or any(len(row) != n for row in g.mul):
        report.failures.append(AxiomFailure("range", (len(g.mul),)))
        return report
    for x in range(n):
        for y in range(n):
            if not 0 <= g.mul[x][y] < n:
                report.failures.append(AxiomFailure("range", (x, y)))
                return report
    if not 0 <= g.identity < n or len(g.inv) != n or any(not 0 <= v < n for v in g.inv):
        report.failures.append(AxiomFailure("range", (g.identity,)))
        return report

    e = g.identity
    for x in range(n):
        if g.mul[e][x] != x or g.mul[x][e] != x:
            report.failures.append(AxiomFailure("identity", (x,)))
            break
    for x in range(n):
        if g.mul[x][g.inv[x]] != e:
            report.failures.append(AxiomFailure("inverse", (x,)))
            break

    table = np.asarray(g.mul, dtype=np.int64)
    for x in range(n):
        # rows: y, cols: z
        left = table[table[x]]
        right = table[x][table]
        bad = np.argwhere(left != right)
        if bad.size:
            y, z = bad[0]
            report.failures.append(AxiomFailure("associativity", (x, int(y), int(z))))
            break
    return report
