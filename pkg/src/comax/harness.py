"""Classification predictors and verification sweeps.

Each ``predict_*`` function encodes the group-side condition of one family
of classification results and returns the class membership it claims for
the co-maximal subgroup graph.  :func:`run_sweep` realizes groups, computes
the actual verdicts and records agreement or disagreement.  A predictor
that does not cover an input returns ``None``; the record is then
"uncovered", never a failure.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Optional, Sequence

from . import spec as dsl
from .classes import CLASS_NAMES, classify
from .comaxgraph import build_comax_graph, q_adjacency_predicate, q_descriptors
from .errors import ComaxError, OutOfScope
from .groups import GroupTable, element_order
from .lattice import (
    DEFAULT_ORDER_CAP,
    DEFAULT_SUBGROUP_CAP,
    LatticeCache,
    SubgroupLattice,
    all_subgroups,
    is_comaximal,
)
from .numtheory import (
    factorize,
    is_odd_prime_power,
    is_prime,
    is_prime_power,
    partitions,
)

DIHEDRAL_CLASSES = ("cluster", "triangle_free", "claw_free", "cograph", "chordal")
DICYCLIC_CLASSES = DIHEDRAL_CLASSES
ABELIAN_CLASSES = ("triangle_free", "cograph", "chordal", "threshold", "split")
NILPOTENT_CLASSES = ("cluster", "triangle_free", "claw_free", "cograph", "chordal", "split", "threshold")


# -- group-side predicates ------------------------------------------------------

def is_epo_group(g: GroupTable) -> bool:
    """Every non-identity element has prime order."""
    return all(is_prime(element_order(g, x)) for x in range(g.order) if x != g.identity)


def is_eppo_group(g: GroupTable, elements=None) -> bool:
    """Every element has prime-power order (the identity counts)."""
    xs = range(g.order) if elements is None else elements
    return all(x == g.identity or is_prime_power(element_order(g, x)) for x in xs)


def predict_dihedral(cls: str, n: int) -> bool:
    if n < 3:
        raise OutOfScope(f"D{n}: dihedral results need n >= 3")
    if cls == "cluster":
        return False
    if cls in ("triangle_free", "cograph"):
        return is_odd_prime_power(n)
    if cls == "claw_free":
        return n == 4
    if cls == "chordal":
        return n == 4 or is_odd_prime_power(n)
    raise OutOfScope(f"no dihedral result for class {cls!r}")


def predict_dicyclic(cls: str, m: int) -> bool:
    """Dicyclic results read with Dic_m of order 4m."""
    if m < 3:
        raise OutOfScope(f"Dic{m}: dicyclic results need m >= 3")
    if cls in ("triangle_free", "cograph", "chordal"):
        return is_prime_power(m)
    if cls in ("cluster", "claw_free"):
        return False
    raise OutOfScope(f"no dicyclic result for class {cls!r}")


# -- nilpotent normal form --------------------------------------------------

@dataclass(frozen=True)
class SylowPart:
    """One Sylow subgroup of a nilpotent spec.

    ``kind`` is "abelian" (with ``partition`` the exponents of its cyclic
    factors), "quaternion" or "dihedral" (with ``exponent`` = log_p of the
    order), or "other" for nonabelian p-groups the DSL builds some other way.
    """

    kind: str
    exponent: int
    partition: tuple[int, ...] = ()

    @property
    def cyclic(self) -> bool:
        return self.kind == "abelian" and len(self.partition) <= 1

    @property
    def abelian(self) -> bool:
        return self.kind == "abelian"


def _cyclic_parts(n: int) -> dict[int, list]:
    return {p: [SylowPart("abelian", e, (e,))] for p, e in factorize(n).items()}


def _term_parts(term) -> dict[int, list]:
    if isinstance(term, dsl.Cyclic):
        return _cyclic_parts(term.n)
    if isinstance(term, dsl.GenQuaternion):
        return {2: [SylowPart("quaternion", term.k)]}
    if isinstance(term, dsl.Dicyclic):
        if term.m & (term.m - 1) == 0:
            return {2: [SylowPart("quaternion", term.m.bit_length() + 1)]}
        raise OutOfScope(f"Dic{term.m} is not nilpotent")
    if isinstance(term, dsl.Dihedral):
        if term.n & (term.n - 1) == 0:
            return {2: [SylowPart("dihedral", term.n.bit_length())]}
        raise OutOfScope(f"D{term.n} is not nilpotent")
    if isinstance(term, dsl.Semidirect):
        if term.k % term.n == 1 % term.n:
            out = _cyclic_parts(term.n)
            for p, parts in _cyclic_parts(term.m).items():
                out.setdefault(p, []).extend(parts)
            return out
        primes = factorize(term.n * term.m)
        if len(primes) == 1:
            (p, e), = primes.items()
            return {p: [SylowPart("other", e)]}
        raise OutOfScope(f"{dsl.render(term)}: cannot place a nontrivial semidirect product in nilpotent form")
    if isinstance(term, dsl.Alternating):
        if term.n <= 2:
            return {}
        if term.n == 3:
            return _cyclic_parts(3)
        raise OutOfScope(f"A{term.n} is not nilpotent")
    if isinstance(term, dsl.Symmetric):
        if term.n == 1:
            return {}
        if term.n == 2:
            return _cyclic_parts(2)
        raise OutOfScope(f"S{term.n} is not nilpotent")
    raise OutOfScope(f"unsupported spec {term!r}")


def sylow_profile(spec) -> dict[int, SylowPart]:
    """Split a nilpotent spec into its Sylow subgroups, prime ascending."""
    if isinstance(spec, str):
        spec = dsl.parse_spec(spec)
    terms = spec.factors if isinstance(spec, dsl.DirectProduct) else (spec,)
    merged: dict[int, list] = {}
    for t in terms:
        for p, parts in _term_parts(t).items():
            merged.setdefault(p, []).extend(parts)
    out = {}
    for p in sorted(merged):
        parts = [q for q in merged[p] if q.exponent > 0]
        if not parts:
            continue
        if all(q.abelian for q in parts):
            part = tuple(sorted((e for q in parts for e in q.partition), reverse=True))
            out[p] = SylowPart("abelian", sum(part), part)
        elif len(parts) == 1:
            out[p] = parts[0]
        else:
            out[p] = SylowPart("other", sum(q.exponent for q in parts))
    return out


def _two_generated_prime_exponent(part: SylowPart) -> Optional[bool]:
    if part.abelian:
        return part.partition in ((1,), (1, 1))
    if part.kind in ("quaternion", "dihedral"):
        return False
    return None


def predict_nilpotent(cls: str, spec) -> Optional[bool]:
    """Class membership claimed for a nilpotent group given as a spec.

    Returns None where no result covers the input (for instance split
    graphs of nonabelian groups, or chordality of nonabelian p-groups).
    """
    parts = sylow_profile(spec)
    sylows = list(parts.values())
    k = len(sylows)
    cyclic = all(s.cyclic for s in sylows)
    abelian = all(s.abelian for s in sylows)
    exps = [s.exponent for s in sylows]
    if k == 0:
        return True
    if cls == "cluster":
        if k == 1:
            s = sylows[0]
            if s.cyclic or s.partition == (1, 1):
                return True
            if s.kind == "quaternion":
                return s.exponent == 3
            if s.kind == "other":
                return None
            return False
        return k == 2 and cyclic and exps == [1, 1]
    if cls == "triangle_free":
        return cyclic and k <= 2
    if cls == "claw_free":
        if k == 1:
            s = sylows[0]
            return s.cyclic or s.partition == (1, 1) or (s.kind == "quaternion" and s.exponent == 3)
        return k == 2 and cyclic and min(exps) == 1
    if cls == "cograph":
        if k == 1:
            s = sylows[0]
            if s.abelian:
                return len(s.partition) <= 2
            return None
        return k == 2 and cyclic
    if cls == "chordal":
        if k == 1:
            s = sylows[0]
            if not s.abelian:
                return None
            p = s.partition
            return len(p) <= 1 or (len(p) == 2 and p[1] == 1) or p == (1, 1, 1)
        if k == 2:
            verdict = False
            for big, small in ((sylows[0], sylows[1]), (sylows[1], sylows[0])):
                if not (small.cyclic and small.exponent == 1):
                    continue
                if big.cyclic:
                    return True
                ok = _two_generated_prime_exponent(big)
                if ok:
                    return True
                if ok is None:
                    verdict = None
            return verdict
        return k == 3 and cyclic and exps == [1, 1, 1]
    if cls == "threshold":
        if k == 1:
            s = sylows[0]
            if s.cyclic or s.partition == (1, 1):
                return True
            # quaternion group of order 2^n with n a prime power >= 3
            return s.kind == "quaternion" and is_prime_power(s.exponent) and s.exponent >= 3
        return k == 2 and cyclic and min(exps) == 1
    if cls == "split":
        if not abelian:
            return None
        if k == 1:
            p = sylows[0].partition
            return len(p) <= 1 or (len(p) == 2 and p[1] == 1) or p == (1, 1, 1)
        if k == 2:
            if cyclic and min(exps) == 1:
                return True
            return sorted(s.partition for s in sylows) == [(1,), (1, 1)]
        return False
    raise OutOfScope(f"no nilpotent result for class {cls!r}")


def predict_order_pq(cls: str, g: GroupTable) -> bool:
    f = factorize(g.order)
    if sorted(f.values()) != [1, 1]:
        raise OutOfScope(f"{g.name}: order {g.order} is not a product of two distinct primes")
    if cls != "cograph":
        raise OutOfScope(f"no order-pq result for class {cls!r}")
    return True


def _unique_subgroup_of_order(lat: SubgroupLattice, order: int) -> bool:
    return sum(1 for s in lat.subgroups if s.order == order) == 1


def predict_order_p2q(cls: str, g: GroupTable, lat: SubgroupLattice) -> bool:
    """Cograph claim for groups of order p^2 q.

    True for C_{p^2} ⋊ C_q and C_q ⋊ C_{p^2} (direct products included),
    for A_4, and for groups whose nontrivial proper subgroups are all EPPO.
    """
    if cls != "cograph":
        raise OutOfScope(f"no order-p^2q result for class {cls!r}")
    f = factorize(g.order)
    squares = [p for p, e in f.items() if e == 2]
    if len(f) != 2 or len(squares) != 1 or sorted(f.values()) != [1, 2]:
        raise OutOfScope(f"{g.name}: order {g.order} is not p^2 q")
    p = squares[0]
    q = next(r for r in f if r != p)
    sylow_p_cyclic = any(element_order(g, x) == p * p for x in range(g.order))
    p_normal = _unique_subgroup_of_order(lat, p * p)
    q_normal = _unique_subgroup_of_order(lat, q)
    if sylow_p_cyclic and (p_normal or q_normal):
        return True
    if g.order == 12 and not sylow_p_cyclic and p_normal and not q_normal and not g.is_abelian():
        return True  # A_4
    return all(is_eppo_group(g, s.elements()) for s in lat.proper_nontrivial())


# -- abelian instance generator --------------------------------------------------

def _gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def _conjugate(part: Sequence[int]) -> list[int]:
    return [sum(1 for x in part if x > i) for i in range(part[0] if part else 0)]


def abelian_p_subgroup_count(partition: Sequence[int], p: int) -> int:
    """Number of subgroups of the abelian p-group of the given type.

    Sums, over every type mu contained in lambda, the count
    prod_i p^(mu'_(i+1) (lambda'_i - mu'_i)) [lambda'_i - mu'_(i+1) choose mu'_i - mu'_(i+1)]_p.
    """
    lam = sorted(partition, reverse=True)
    lc = _conjugate(lam)
    total = 0

    def sub_types(i, bound):
        if i == len(lam):
            yield ()
            return
        for v in range(min(bound, lam[i]), -1, -1):
            for rest in sub_types(i + 1, v):
                yield (v,) + rest

    for mu in sub_types(0, lam[0] if lam else 0):
        mc = _conjugate([x for x in mu if x > 0])
        mc += [0] * (len(lc) + 1 - len(mc))
        count = 1
        for i in range(len(lc)):
            count *= p ** (mc[i + 1] * (lc[i] - mc[i]))
            count *= _gaussian_binomial(lc[i] - mc[i + 1], mc[i] - mc[i + 1], p)
        total += count
    return total


def _abelian_spec(choice: dict[int, tuple[int, ...]]):
    factors = tuple(dsl.Cyclic(p ** e) for p in sorted(choice) for e in choice[p])
    return factors[0] if len(factors) == 1 else dsl.DirectProduct(factors)


def abelian_subgroup_count(spec) -> int:
    prof = sylow_profile(spec)
    count = 1
    for p, part in prof.items():
        if not part.abelian:
            raise OutOfScope("subgroup count formula needs an abelian spec")
        count *= abelian_p_subgroup_count(part.partition, p)
    return count


def enumerate_abelian(order_cap: int, subgroup_cap: int = DEFAULT_SUBGROUP_CAP, start: int = 2) -> list:
    """All abelian groups of order start..order_cap up to isomorphism."""
    if order_cap > 128:
        raise OutOfScope(f"abelian enumeration is capped at order 128, got {order_cap}")
    out = []
    for n in range(max(start, 1), order_cap + 1):
        f = factorize(n) if n > 1 else {}
        primes = sorted(f)
        for combo in product(*(list(partitions(f[p])) for p in primes)):
            choice = dict(zip(primes, combo))
            sp = _abelian_spec(choice) if choice else dsl.Cyclic(1)
            if abelian_subgroup_count(sp) <= subgroup_cap:
                out.append(sp)
    return out


# -- records and sweeps -------------------------------------------------------

@dataclass
class VerificationRecord:
    family: str
    parameter: int
    spec: str
    class_name: str
    predicted: Optional[bool]
    computed: Optional[bool]
    status: str
    witness: Optional[str] = None
    detail: Optional[str] = None

    @property
    def match(self) -> bool:
        return self.predicted is not None and self.predicted == self.computed


def _status(predicted, computed) -> str:
    if computed is None:
        return "error"
    if predicted is None:
        return "uncovered"
    return "match" if predicted == computed else "mismatch"


@dataclass
class FamilySweep:
    """``family`` is dihedral, dicyclic, gen_quaternion, cyclic, abelian or catalog.

    ``params`` are integers for the parametrized families and spec strings
    for catalogs.  ``predictor`` picks the predictor set for catalogs:
    "nilpotent", "order_pq" or "order_p2q".
    """

    family: str
    params: list
    classes: tuple = ()
    predictor: str = "nilpotent"
    label: Optional[str] = None


@dataclass
class SweepConfig:
    order_cap: int = DEFAULT_ORDER_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP
    cache_dir: Optional[str] = None
    jobs: int = 1


def _jobs_for(sweep: FamilySweep) -> list[tuple]:
    family = sweep.label or sweep.family
    jobs = []
    for pos, param in enumerate(sweep.params):
        if sweep.family == "dihedral":
            text, key, pred = f"D{param}", param, "dihedral"
        elif sweep.family == "dicyclic":
            text, key, pred = f"Dic{param}", param, "dicyclic"
        elif sweep.family == "gen_quaternion":
            text, key, pred = f"Q{2 ** param}", param, "nilpotent"
        elif sweep.family == "cyclic":
            text, key, pred = f"C{param}", param, "nilpotent"
        elif sweep.family == "abelian":
            sp = dsl.parse_spec(param) if isinstance(param, str) else param
            text = dsl.render(sp)
            key, pred = _spec_order(sp), "nilpotent"
        elif sweep.family == "catalog":
            text, key, pred = param, pos, sweep.predictor
        else:
            raise OutOfScope(f"unknown family {sweep.family!r}")
        jobs.append((family, key, text, pred, param))
    return jobs


def _spec_order(sp) -> int:
    if isinstance(sp, dsl.DirectProduct):
        out = 1
        for f in sp.factors:
            out *= _spec_order(f)
        return out
    if isinstance(sp, dsl.Cyclic):
        return sp.n
    return len(dsl.realize(sp))


def _predict(pred: str, cls: str, param, text: str, g, lat) -> Optional[bool]:
    try:
        if pred == "dihedral":
            return predict_dihedral(cls, param)
        if pred == "dicyclic":
            return predict_dicyclic(cls, param)
        if pred == "nilpotent":
            return predict_nilpotent(cls, text)
        if pred == "order_pq":
            return predict_order_pq(cls, g)
        if pred == "order_p2q":
            return predict_order_p2q(cls, g, lat)
    except OutOfScope:
        return None
    raise OutOfScope(f"unknown predictor {pred!r}")


def _lattice(g: GroupTable, cfg: SweepConfig) -> SubgroupLattice:
    caps = dict(order_cap=cfg.order_cap, subgroup_cap=cfg.subgroup_cap)
    if cfg.cache_dir:
        return LatticeCache(cfg.cache_dir).get_or_compute(g, **caps)
    return all_subgroups(g, **caps)


def _run_job(args) -> list[VerificationRecord]:
    (family, key, text, pred, param), classes, cfg = args
    try:
        g = dsl.realize(text, cap=max(cfg.order_cap, 1))
        lat = _lattice(g, cfg)
        graph = build_comax_graph(g, lat)
        report = classify(graph.as_simple(), classes)
    except ComaxError as exc:
        return [
            VerificationRecord(family, key, text, c, None, None, "error", detail=str(exc))
            for c in classes
        ]
    out = []
    for c in classes:
        predicted = _predict(pred, c, param, text, g, lat)
        computed = report.verdicts[c]
        w = report.witnesses.get(c)
        if w is not None:
            labels = [graph.vertices[v].describe() for v in w.mapping]
            wtext = f"{w.pattern}: " + " ~ ".join(labels)
        else:
            wtext = None
        status = _status(predicted, computed)
        detail = None
        if status == "mismatch" and wtext is None:
            detail = f"graph is {c.replace('_', '-')} but the prediction says it is not"
        out.append(VerificationRecord(family, key, text, c, predicted, computed, status, wtext, detail))
    return out


def suite_specs(name: str, max_n=None, max_order=None, max_q=None) -> list[str]:
    """Distinct spec strings a suite realizes, in sweep order."""
    name = SUITE_ALIASES.get(name, name)
    if name == "all":
        out = []
        for sub in SUITES[:-1]:
            out.extend(suite_specs(sub, max_n, max_order, max_q))
        return list(dict.fromkeys(out))
    if name == "quaternion":
        return [f"Q{2 ** n}" for n in range(3, (max_q or 6) + 1)]
    out = []
    for sw in suite_sweeps(name, max_n, max_order, max_q):
        out.extend(job[2] for job in _jobs_for(sw))
    return list(dict.fromkeys(out))


def _class_rank(name: str) -> int:
    return CLASS_NAMES.index(name) if name in CLASS_NAMES else len(CLASS_NAMES)


def run_sweep(sweep: FamilySweep, config: Optional[SweepConfig] = None) -> list[VerificationRecord]:
    cfg = config or SweepConfig()
    classes = tuple(sorted(sweep.classes or NILPOTENT_CLASSES, key=_class_rank))
    jobs = [(job, classes, cfg) for job in _jobs_for(sweep)]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_run_job, jobs))
    else:
        chunks = [_run_job(j) for j in jobs]
    records = []
    for seq, chunk in enumerate(chunks):
        records.extend((r.family, r.parameter, seq, _class_rank(r.class_name), r) for r in chunk)
    records.sort(key=lambda t: t[:4])
    return [t[-1] for t in records]


def check_quaternion_adjacency(n_values) -> list[VerificationRecord]:
    """Compare the closed-form quaternion adjacency rule with brute force."""
    out = []
    for n in n_values:
        pairs = q_descriptors(n)
        g = pairs[0][1].group
        mismatches = []
        total = 0
        for i, (a, ha) in enumerate(pairs):
            for b, hb in pairs[i + 1:]:
                total += 1
                if q_adjacency_predicate(n, a, b) != is_comaximal(g, ha, hb):
                    mismatches.append(f"{a} vs {b}")
        computed = not mismatches
        out.append(VerificationRecord(
            "quaternion", n, g.name, "q_adjacency", True, computed, _status(True, computed),
            witness="; ".join(mismatches[:5]) or None,
            detail=f"{len(mismatches)} mismatches over {total} pairs",
        ))
    return out


# -- named suites ---------------------------------------------------------------

ORDER_PQ_CATALOG = ["C6", "S3", "C15", "C21", "SD(7,3,2)"]
ORDER_12_CATALOG = ["C12", "C2xC2xC3", "D6", "A4", "Dic3"]
ORDER_20_CATALOG = ["C20", "C2xC2xC5", "D10", "Dic5", "SD(5,4,2)"]
ORDER_P2Q_EXTRA = ["C18", "C3xC6", "D9", "C3xS3", "C28", "C2xC14", "D14", "Dic7"]
NILPOTENT_CATALOG = [
    "Q8", "Q16", "Q32", "Q64", "D4", "D8", "D16",
    "Q8xC3", "Q8xC5", "D4xC3", "Q16xC3", "C2xQ8", "C2xD4", "Q8xC3xC5",
]

# older name of the quaternion suite, still accepted on the command line
SUITE_ALIASES = {"prop11": "quaternion"}
SUITES = ("dihedral", "dicyclic", "quaternion", "abelian", "nilpotent-catalog", "order-pq", "order-p2q", "all")


def suite_sweeps(name: str, max_n: Optional[int] = None, max_order: Optional[int] = None,
                 max_q: Optional[int] = None) -> list[FamilySweep]:
    if name == "dihedral":
        return [FamilySweep("dihedral", list(range(3, (max_n or 40) + 1)), DIHEDRAL_CLASSES)]
    if name == "dicyclic":
        return [FamilySweep("dicyclic", list(range(3, (max_n or 20) + 1)), DICYCLIC_CLASSES)]
    if name == "abelian":
        specs = [dsl.render(s) for s in enumerate_abelian(max_order or 64)]
        return [FamilySweep("abelian", specs, ABELIAN_CLASSES)]
    if name == "nilpotent-catalog":
        return [FamilySweep("catalog", NILPOTENT_CATALOG, NILPOTENT_CLASSES, "nilpotent", "nilpotent")]
    if name == "order-pq":
        return [FamilySweep("catalog", ORDER_PQ_CATALOG, ("cograph",), "order_pq", "order-pq")]
    if name == "order-p2q":
        return [
            FamilySweep("catalog", ORDER_12_CATALOG, ("cograph",), "order_p2q", "order-12"),
            FamilySweep("catalog", ORDER_20_CATALOG, ("cograph",), "order_p2q", "order-20"),
            FamilySweep("catalog", ORDER_P2Q_EXTRA, ("cograph",), "order_p2q", "order-p2q-extra"),
        ]
    raise OutOfScope(f"unknown suite {name!r}")


def run_suite(name: str, config: Optional[SweepConfig] = None, max_n: Optional[int] = None,
              max_order: Optional[int] = None, max_q: Optional[int] = None) -> list[VerificationRecord]:
    name = SUITE_ALIASES.get(name, name)
    if name == "all":
        out = []
        for sub in SUITES[:-1]:
            out.extend(run_suite(sub, config, max_n, max_order, max_q))
        return out
    if name == "quaternion":
        return check_quaternion_adjacency(range(3, (max_q or 6) + 1))
    out = []
    for sw in suite_sweeps(name, max_n, max_order, max_q):
        out.extend(run_sweep(sw, config))
    return out


def summarize(records: list[VerificationRecord]) -> dict[str, int]:
    counts = {"total": len(records), "matched": 0, "mismatched": 0, "uncovered": 0, "errored": 0}
    key = {"match": "matched", "mismatch": "mismatched", "uncovered": "uncovered", "error": "errored"}
    for r in records:
        counts[key[r.status]] += 1
    return counts


def report_json(records: list[VerificationRecord], suite: str = "") -> str:
    doc = {
        "suite": suite,
        "records": [asdict(r) for r in records],
        "summary": summarize(records),
    }
    return json.dumps(doc, indent=1) + "\n"


def _fmt(v: Optional[bool]) -> str:
    return "-" if v is None else ("yes" if v else "no")


def report_text(records: list[VerificationRecord], suite: str = "") -> str:
    rows = [("family", "param", "group", "class", "predicted", "computed", "status")]
    for r in records:
        rows.append((r.family, str(r.parameter), r.spec, r.class_name,
                     _fmt(r.predicted), _fmt(r.computed), r.status))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    if suite:
        lines.append(f"suite: {suite}")
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    for r in records:
        if r.status in ("mismatch", "error"):
            note = r.witness or r.detail or ""
            lines.append(f"! {r.status} {r.spec} {r.class_name}: {note}")
    s = summarize(records)
    lines.append(
        f"total={s['total']} matched={s['matched']} mismatched={s['mismatched']} "
        f"uncovered={s['uncovered']} errored={s['errored']}"
    )
    return "\n".join(lines) + "\n"


def default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0)) or 1
    except AttributeError:
        return os.cpu_count() or 1
