"""The group-spec DSL: ``C12``, ``D6``, ``Dic3``, ``Q16``, ``SD(7,3,2)``, ``A4``,
``S3`` and direct products of those joined by ``x``.

Grammar::

    spec := term { "x" term }
    term := "C" INT | "D" INT | "Dic" INT | "Q" INT | "A" INT | "S" INT
          | "SD(" INT "," INT "," INT ")"

``Q`` takes the group order (a power of two, at least 8); the AST stores
the exponent.  Whitespace is ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Union

from . import groups
from .errors import ResourceLimit, SpecSemanticError, SpecSyntaxError


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Dicyclic:
    m: int


@dataclass(frozen=True)
class GenQuaternion:
    k: int


@dataclass(frozen=True)
class Semidirect:
    n: int
    m: int
    k: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple


Term = Union[Cyclic, Dihedral, Dicyclic, GenQuaternion, Semidirect, Alternating, Symmetric]
GroupSpec = Union[Term, DirectProduct]

_PREFIXES = ("SD(", "Dic", "C", "D", "Q", "A", "S")


def render(spec: GroupSpec) -> str:
    """Canonical text form; ``parse_spec(render(s)) == s``."""
    if isinstance(spec, Cyclic):
        return f"C{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.n}"
    if isinstance(spec, Dicyclic):
        return f"Dic{spec.m}"
    if isinstance(spec, GenQuaternion):
        return f"Q{2 ** spec.k}"
    if isinstance(spec, Semidirect):
        return f"SD({spec.n},{spec.m},{spec.k})"
    if isinstance(spec, Alternating):
        return f"A{spec.n}"
    if isinstance(spec, Symmetric):
        return f"S{spec.n}"
    if isinstance(spec, DirectProduct):
        return "x".join(render(f) for f in spec.factors)
    raise TypeError(f"not a group spec: {spec!r}")


def check_spec(spec: GroupSpec, offset: int | None = None) -> None:
    """Raise SpecSemanticError if any parameter violates its constraint."""
    if isinstance(spec, DirectProduct):
        if len(spec.factors) < 2:
            raise SpecSemanticError("direct product needs at least two factors", offset)
        for f in spec.factors:
            check_spec(f, offset)
        return
    if isinstance(spec, Cyclic) and spec.n < 1:
        raise SpecSemanticError(f"C{spec.n}: need n >= 1", offset)
    if isinstance(spec, Dihedral) and spec.n < 3:
        raise SpecSemanticError(f"D{spec.n}: need n >= 3", offset)
    if isinstance(spec, Dicyclic) and spec.m < 2:
        raise SpecSemanticError(f"Dic{spec.m}: need m >= 2", offset)
    if isinstance(spec, GenQuaternion) and spec.k < 3:
        raise SpecSemanticError(f"Q{2 ** spec.k}: need order 2^k with k >= 3", offset)
    if isinstance(spec, (Alternating, Symmetric)) and spec.n < 1:
        raise SpecSemanticError(f"{render(spec)}: need n >= 1", offset)
    if isinstance(spec, Semidirect):
        n, m, k = spec.n, spec.m, spec.k
        if min(n, m, k) < 1:
            raise SpecSemanticError(f"SD({n},{m},{k}): parameters must be positive", offset)
        if gcd(k, n) != 1:
            raise SpecSemanticError(f"SD({n},{m},{k}): need gcd(k, n) = 1", offset)
        if pow(k, m, n) != 1 % n:
            raise SpecSemanticError(f"SD({n},{m},{k}): need k^m = 1 (mod n)", offset)


class _Parser:
    def __init__(self, text: str):
        # keep original offsets while skipping whitespace
        self.chars = [(i, c) for i, c in enumerate(text) if not c.isspace()]
        self.end = len(text)
        self.pos = 0

    def offset(self) -> int:
        return self.chars[self.pos][0] if self.pos < len(self.chars) else self.end

    def peek(self, literal: str) -> bool:
        chunk = "".join(c for _, c in self.chars[self.pos:self.pos + len(literal)])
        return chunk == literal

    def expect(self, literal: str) -> None:
        if not self.peek(literal):
            raise SpecSyntaxError(f"expected {literal!r}", self.offset(), [repr(literal)])
        self.pos += len(literal)

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.chars) and self.chars[self.pos][1].isdigit():
            self.pos += 1
        if self.pos == start:
            raise SpecSyntaxError("expected integer", self.offset(), ["INT"])
        return int("".join(c for _, c in self.chars[start:self.pos]))

    def term(self) -> Term:
        at = self.offset()
        for prefix in _PREFIXES:
            if self.peek(prefix):
                self.pos += len(prefix)
                break
        else:
            raise SpecSyntaxError("expected group term", at, [repr(p) for p in _PREFIXES])
        if prefix == "SD(":
            n = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            node = Semidirect(n, m, k)
        else:
            value = self.integer()
            if prefix == "Q":
                if value < 8 or value & (value - 1):
                    raise SpecSemanticError(f"Q{value}: order must be 2^k with k >= 3", at)
                node = GenQuaternion(value.bit_length() - 1)
            else:
                node = {"C": Cyclic, "D": Dihedral, "Dic": Dicyclic,
                        "A": Alternating, "S": Symmetric}[prefix](value)
        check_spec(node, at)
        return node

    def spec(self) -> GroupSpec:
        terms = [self.term()]
        while self.pos < len(self.chars):
            if not self.peek("x"):
                raise SpecSyntaxError("unexpected character", self.offset(), ["'x'", "end of input"])
            self.pos += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else DirectProduct(tuple(terms))


def parse_spec(text: str) -> GroupSpec:
    return _Parser(text).spec()


def _with_factor_labels(g: groups.GroupTable, parts) -> groups.GroupTable:
    """Name the generators of factor k by their factor label plus k, e.g. g1, x2."""
    labels = {}
    for k, part in enumerate(parts):
        for x, lab in part.generator_labels.items():
            idx = 0
            for j, other in enumerate(parts):
                idx = idx * other.order + (x if j == k else other.identity)
            labels[idx] = f"{lab}{k + 1}"
    return groups.GroupTable(g.order, g.mul, g.identity, g.inv, g.name, labels)


def realize(spec: GroupSpec | str, cap: int = groups.DEFAULT_TABLE_CAP) -> groups.GroupTable:
    """Build the Cayley table for a spec; the table is named by ``render(spec)``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    check_spec(spec)
    if isinstance(spec, DirectProduct):
        parts = [realize(f, cap) for f in spec.factors]
        g = reduce(lambda a, b: groups.direct_product(a, b, cap), parts)
        g = _with_factor_labels(g, parts)
    elif isinstance(spec, Cyclic):
        g = groups.make_cyclic(spec.n)
    elif isinstance(spec, Dihedral):
        g = groups.make_dihedral(spec.n)
    elif isinstance(spec, Dicyclic):
        g = groups.make_dicyclic(spec.m)
    elif isinstance(spec, GenQuaternion):
        g = groups.make_gen_quaternion(spec.k)
    elif isinstance(spec, Semidirect):
        g = groups.make_semidirect(spec.n, spec.m, spec.k)
    elif isinstance(spec, Alternating):
        g = groups.make_alternating(spec.n, cap)
    elif isinstance(spec, Symmetric):
        g = groups.make_symmetric(spec.n, cap)
    else:
        raise TypeError(f"not a group spec: {spec!r}")
    if g.order > cap:
        raise ResourceLimit(f"{render(spec)} has order {g.order} > cap {cap}", cap)
    return groups.GroupTable(g.order, g.mul, g.identity, g.inv, render(spec), g.generator_labels)
