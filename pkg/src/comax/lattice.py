"""Subgroup enumeration and subgroup set algebra.

A subgroup is an integer bitset over the element indices of its ambient
:class:`~comax.groups.GroupTable`; bit ``i`` is set when element ``i`` is a
member.  Intersections are ``&`` and orders are popcounts.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .errors import AmbientMismatch, ComaxError, ResourceLimit
from .groups import GroupTable, element_order

DEFAULT_ORDER_CAP = 256
DEFAULT_SUBGROUP_CAP = 100_000


def bits_of(elements) -> int:
    bits = 0
    for x in elements:
        bits |= 1 << x
    return bits


def members(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


@dataclass(frozen=True)
class SubgroupSet:
    group: GroupTable = field(compare=False, repr=False)
    bits: int

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    def elements(self) -> list[int]:
        return members(self.bits)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __le__(self, other: SubgroupSet) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: SubgroupSet) -> bool:
        return self.bits != other.bits and self <= other

    def sort_key(self):
        return (self.order, self.elements())

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element order then index."""
        g = self.group
        ranked = sorted(self.elements(), key=lambda x: (-element_order(g, x), x))
        span, gens = 1 << g.identity, []
        for x in ranked:
            if span == self.bits:
                break
            if not span >> x & 1:
                gens.append(x)
                span = _closure(g, gens)
        return gens

    def describe(self) -> str:
        g = self.group
        gens = ", ".join(g.label(x) for x in self.generators())
        return f"|H|={self.order} <{gens}>"


def _same_ambient(h: SubgroupSet, k: SubgroupSet) -> None:
    if h.group is not k.group and (h.group.name, h.group.order) != (k.group.name, k.group.order):
        raise AmbientMismatch(f"subgroups of {h.group.name} and {k.group.name} cannot be combined")


def _closure(g: GroupTable, seed) -> int:
    """Bitset of the subgroup generated by ``seed``."""
    mul = g.mul
    gens = [x for x in dict.fromkeys(seed) if x != g.identity]
    found = 1 << g.identity
    frontier = [g.identity]
    while frontier:
        nxt = []
        for a in frontier:
            row = mul[a]
            for s in gens:
                y = row[s]
                if not found >> y & 1:
                    found |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return found


def generated_subgroup(g: GroupTable, seed) -> SubgroupSet:
    seed = list(seed)
    for x in seed:
        if not 0 <= x < g.order:
            raise IndexError(f"element index {x} out of range for order {g.order}")
    return SubgroupSet(g, _closure(g, seed))


def _join(mul, h_elems: list[int], h_bits: int, gens: tuple[int, ...], identity: int):
    """Grow H to <H, gens> by adjoining whole right cosets H*y.

    Every coset representative is multiplied by every generator; the set
    stays a union of right cosets and ends closed under right multiplication.
    """
    bits = h_bits
    elems = list(h_elems)
    reps = [identity]
    i = 0
    while i < len(reps):
        row = mul[reps[i]]
        i += 1
        for s in gens:
            y = row[s]
            if not bits >> y & 1:
                coset = [mul[h][y] for h in h_elems]
                for c in coset:
                    bits |= 1 << c
                elems.extend(coset)
                reps.append(y)
    return bits, elems


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n and n % p:
        p += 1
    if n % p:
        p = n
    while n % p == 0:
        n //= p
    return n == 1


@dataclass
class SubgroupLattice:
    group: GroupTable
    subgroups: list[SubgroupSet]
    maximal: list[bool]
    _index: dict[int, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {s.bits: i for i, s in enumerate(self.subgroups)}

    def __len__(self):
        return len(self.subgroups)

    def index(self, h: SubgroupSet) -> int:
        try:
            return self._index[h.bits]
        except KeyError:
            raise ComaxError(f"subgroup {h.elements()} is not in the lattice of {self.group.name}") from None

    def __contains__(self, h: SubgroupSet) -> bool:
        return h.bits in self._index

    @property
    def trivial(self) -> SubgroupSet:
        return self.subgroups[0]

    @property
    def whole(self) -> SubgroupSet:
        return self.subgroups[-1]

    def proper_nontrivial(self) -> list[SubgroupSet]:
        return self.subgroups[1:-1] if len(self.subgroups) > 1 else []

    def maximal_subgroups(self) -> list[SubgroupSet]:
        return [s for s, m in zip(self.subgroups, self.maximal) if m]

    def frattini(self) -> SubgroupSet:
        bits = self.whole.bits
        for m in self.maximal_subgroups():
            bits &= m.bits
        return SubgroupSet(self.group, bits)


def _maximal_flags(subgroups: list[SubgroupSet], full: int) -> list[bool]:
    # descending order: any proper H lies in some maximal M with |M| > |H|
    flags = [False] * len(subgroups)
    found: list[int] = []
    for i in range(len(subgroups) - 1, -1, -1):
        b = subgroups[i].bits
        if b == full:
            continue
        if not any(b & ~m == 0 for m in found):
            found.append(b)
            flags[i] = True
    return flags


def _make_lattice(g: GroupTable, all_bits) -> SubgroupLattice:
    subs = sorted((SubgroupSet(g, b) for b in set(all_bits)), key=SubgroupSet.sort_key)
    full = (1 << g.order) - 1
    return SubgroupLattice(g, subs, _maximal_flags(subs, full))


def all_subgroups(
    g: GroupTable,
    order_cap: int = DEFAULT_ORDER_CAP,
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP,
) -> SubgroupLattice:
    """Enumerate every subgroup of ``g``.

    Seeds with the cyclic subgroups, then extends each known subgroup H by
    each cyclic subgroup of prime-power order not inside H, until nothing
    new appears.  Every subgroup K > 1 is <M, y> for a maximal subgroup M of
    K and some prime-power-order y in K \\ M, so the fixpoint is complete.
    """
    if g.order > order_cap:
        raise ResourceLimit(f"{g.name}: order {g.order} exceeds order cap {order_cap}", order_cap)
    mul, e = g.mul, g.identity

    cyclic: dict[int, int] = {}
    for x in range(g.order):
        b = _closure(g, [x])
        cyclic.setdefault(b, x)
    extenders = [
        (b, x) for b, x in sorted(cyclic.items(), key=lambda t: t[1])
        if _is_prime_power(b.bit_count())
    ]

    # bits -> (elements, generators)
    known: dict[int, tuple[list[int], tuple[int, ...]]] = {1 << e: ([e], ())}
    queue = [1 << e]
    for b in sorted(cyclic, key=lambda b: cyclic[b]):
        if b not in known:
            known[b] = (members(b), (cyclic[b],))
            queue.append(b)

    head = 0
    while head < len(queue):
        h_bits = queue[head]
        head += 1
        h_elems, h_gens = known[h_bits]
        for c_bits, y in extenders:
            if c_bits & ~h_bits == 0:
                continue
            gens = h_gens + (y,)
            k_bits, k_elems = _join(mul, h_elems, h_bits, gens, e)
            if k_bits not in known:
                if len(known) >= subgroup_cap:
                    raise ResourceLimit(
                        f"{g.name}: more than {subgroup_cap} subgroups (subgroup cap)", subgroup_cap
                    )
                known[k_bits] = (k_elems, gens)
                queue.append(k_bits)
    return _make_lattice(g, known)


def intersect(h: SubgroupSet, k: SubgroupSet) -> SubgroupSet:
    _same_ambient(h, k)
    return SubgroupSet(h.group, h.bits & k.bits)


def product_size(h: SubgroupSet, k: SubgroupSet) -> int:
    _same_ambient(h, k)
    return h.order * k.order // (h.bits & k.bits).bit_count()


def setwise_product(h: SubgroupSet, k: SubgroupSet) -> int:
    """Bitset of {a*b : a in h, b in k}; a set, not necessarily a subgroup."""
    _same_ambient(h, k)
    mul = h.group.mul
    out = 0
    k_elems = k.elements()
    for a in h.elements():
        row = mul[a]
        for b in k_elems:
            out |= 1 << row[b]
    return out


def is_comaximal(g: GroupTable, h: SubgroupSet, k: SubgroupSet) -> bool:
    _same_ambient(h, k)
    if h.group is not g and (h.group.name, h.group.order) != (g.name, g.order):
        raise AmbientMismatch(f"subgroups of {h.group.name} tested against {g.name}")
    return h.order * k.order == g.order * (h.bits & k.bits).bit_count()


def is_maximal(lat: SubgroupLattice, h: SubgroupSet) -> bool:
    return lat.maximal[lat.index(h)]


# -- cache ------------------------------------------------------------------

def lattice_to_json(lat: SubgroupLattice) -> str:
    doc = {
        "spec": lat.group.name,
        "order": lat.group.order,
        "subgroups": [s.elements() for s in lat.subgroups],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def lattice_from_json(g: GroupTable, text: str) -> SubgroupLattice:
    doc = json.loads(text)
    if doc.get("spec") != g.name or doc.get("order") != g.order:
        raise ComaxError(f"cache entry for {doc.get('spec')!r} does not match {g.name}")
    return _make_lattice(g, [bits_of(s) for s in doc["subgroups"]])


def _cache_filename(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_") + ".json"


class LatticeCache:
    """Directory of lattice JSON documents keyed by canonical spec name."""

    def __init__(self, path):
        self.path = Path(path)

    def file_for(self, name: str) -> Path:
        return self.path / _cache_filename(name)

    def load(self, g: GroupTable) -> SubgroupLattice | None:
        f = self.file_for(g.name)
        if not f.exists():
            return None
        try:
            return lattice_from_json(g, f.read_text())
        except (ValueError, KeyError, ComaxError):
            return None

    def store(self, lat: SubgroupLattice) -> Path:
        self.path.mkdir(parents=True, exist_ok=True)
        target = self.file_for(lat.group.name)
        fd, tmp = tempfile.mkstemp(dir=self.path, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(lattice_to_json(lat))
            os.replace(tmp, target)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return target

    def get_or_compute(self, g: GroupTable, **caps) -> SubgroupLattice:
        lat = self.load(g)
        if lat is not None:
            # a cached entry must not let a run exceed caps a cold run would hit
            order_cap = caps.get("order_cap", DEFAULT_ORDER_CAP)
            subgroup_cap = caps.get("subgroup_cap", DEFAULT_SUBGROUP_CAP)
            if g.order > order_cap:
                raise ResourceLimit(f"{g.name}: order {g.order} exceeds order cap {order_cap}", order_cap)
            if len(lat) > subgroup_cap:
                raise ResourceLimit(
                    f"{g.name}: more than {subgroup_cap} subgroups (subgroup cap)", subgroup_cap
                )
        else:
            lat = all_subgroups(g, **caps)
            self.store(lat)
        return lat

    def entries(self) -> list[Path]:
        if not self.path.is_dir():
            return []
        return sorted(p for p in self.path.glob("*.json") if not p.name.startswith(".tmp-"))

    def stat(self) -> tuple[int, int]:
        files = self.entries()
        return len(files), sum(p.stat().st_size for p in files)

    def clear(self) -> int:
        files = self.entries()
        for p in files:
            p.unlink()
        return len(files)
