import json
import random
from itertools import combinations

import pytest

from comax.errors import AmbientMismatch, ComaxError, ResourceLimit
from comax.groups import make_cyclic, make_dicyclic, make_dihedral
from comax.harness import abelian_p_subgroup_count, sylow_profile
from comax.lattice import (
    LatticeCache,
    SubgroupSet,
    all_subgroups,
    bits_of,
    generated_subgroup,
    intersect,
    is_comaximal,
    is_maximal,
    lattice_from_json,
    lattice_to_json,
    product_size,
    setwise_product,
)
from comax.numtheory import divisors
from comax.spec import realize
from oracles import is_subgroup_by_axioms, subgroups_by_adjoining

SMALL = ["C1", "C12", "C2xC2xC2", "Q8", "D4", "A4", "Dic3", "S4", "C4xC4", "C2xC2xC4", "D10",
         "SD(7,3,2)", "SD(5,4,2)", "Q16", "C3xC3xC2", "D4xC2", "Q8xC2", "C2xC2xC2xC2", "A5"]


@pytest.mark.parametrize("spec", SMALL)
def test_enumeration_matches_element_by_element_oracle(spec):
    g = realize(spec)
    lat = all_subgroups(g)
    got = {frozenset(s.elements()) for s in lat.subgroups}
    assert got == subgroups_by_adjoining(g)
    assert len(lat.subgroups) == len(got)


@pytest.mark.parametrize("spec", SMALL)
def test_lattice_invariants(spec):
    g = realize(spec)
    lat = all_subgroups(g)
    assert lat.trivial.order == 1 and lat.whole.order == g.order
    keys = [s.sort_key() for s in lat.subgroups]
    assert keys == sorted(keys)
    for s, flag in zip(lat.subgroups, lat.maximal):
        assert is_subgroup_by_axioms(g, set(s.elements()))
        assert g.order % s.order == 0
        above = [t for t in lat.subgroups if s < t and t.order < g.order]
        assert flag == (s.order < g.order and not above)


def test_counts_from_the_examples():
    assert [s.order for s in all_subgroups(make_cyclic(12)).subgroups] == [1, 2, 3, 4, 6, 12]
    orders = [s.order for s in all_subgroups(realize("C2xC2xC2")).subgroups]
    assert [orders.count(k) for k in (1, 2, 4, 8)] == [1, 7, 7, 1]
    q8 = all_subgroups(realize("Q8"))
    assert [s.order for s in q8.subgroups] == [1, 2, 4, 4, 4, 8]


@pytest.mark.parametrize("n", range(3, 25))
def test_dihedral_count_is_tau_plus_sigma(n):
    assert len(all_subgroups(make_dihedral(n))) == len(divisors(n)) + sum(divisors(n))


@pytest.mark.parametrize("m", range(2, 16))
def test_dicyclic_count(m):
    # cyclic subgroups of <x> plus <x^d, x^i y> for d | m, i < d
    assert len(all_subgroups(make_dicyclic(m))) == len(divisors(2 * m)) + sum(divisors(m))


@pytest.mark.parametrize("spec", ["C2xC2xC2xC2", "C4xC4", "C2xC4xC8", "C3xC9", "C3xC3xC3",
                                  "C2xC2xC2xC2xC2xC2", "C5xC5", "C2xC2xC4xC3xC3"])
def test_abelian_count_matches_subgroup_formula(spec):
    expect = 1
    for p, part in sylow_profile(spec).items():
        expect *= abelian_p_subgroup_count(part.partition, p)
    assert len(all_subgroups(realize(spec))) == expect


def test_generated_subgroup_examples():
    c6 = make_cyclic(6)
    assert generated_subgroup(c6, [2]).elements() == [0, 2, 4]
    d4 = make_dihedral(4)
    h = generated_subgroup(d4, [2, 4])
    assert h.elements() == [0, 2, 4, 6]
    assert generated_subgroup(d4, []).elements() == [0]
    with pytest.raises(IndexError):
        generated_subgroup(c6, [6])


def _q8_parts():
    g = realize("Q8")
    lat = all_subgroups(g)
    minus_one, i, j, k = lat.subgroups[1:5]
    return g, lat, minus_one, i, j, k


def test_intersection_and_product_examples():
    c6 = make_cyclic(6)
    two, three = generated_subgroup(c6, [2]), generated_subgroup(c6, [3])
    assert intersect(two, three).order == 1
    assert intersect(two, two) == two
    assert product_size(two, three) == 6
    assert setwise_product(two, three) == (1 << 6) - 1
    assert is_comaximal(c6, two, three)
    g, lat, minus_one, i, j, _ = _q8_parts()
    assert intersect(i, j) == minus_one
    assert product_size(i, j) == 8 and product_size(i, i) == 4
    assert is_comaximal(g, i, j) and not is_comaximal(g, minus_one, i)
    assert setwise_product(lat.trivial, j) == j.bits
    c4 = make_cyclic(4)
    h = generated_subgroup(c4, [2])
    assert not is_comaximal(c4, h, h)


@pytest.mark.parametrize("spec", ["D6", "Dic3", "A4"])
def test_setwise_product_size_on_random_pairs(spec):
    g = realize(spec)
    subs = all_subgroups(g).subgroups
    rng = random.Random(spec)
    for _ in range(1000):
        h, k = rng.choice(subs), rng.choice(subs)
        brute = {g.mul[a][b] for a in h.elements() for b in k.elements()}
        assert setwise_product(h, k).bit_count() == len(brute) == product_size(h, k)


def test_maximality_examples():
    c12 = all_subgroups(make_cyclic(12))
    by_order = {s.order: s for s in c12.subgroups}
    assert is_maximal(c12, by_order[6]) and not is_maximal(c12, by_order[2])
    g, lat, minus_one, i, j, k = _q8_parts()
    assert all(is_maximal(lat, h) for h in (i, j, k))
    assert lat.frattini() == minus_one
    assert is_maximal(all_subgroups(make_cyclic(5)), all_subgroups(make_cyclic(5)).trivial)
    assert not is_maximal(all_subgroups(make_cyclic(4)), all_subgroups(make_cyclic(4)).trivial)


def test_ambient_mismatch():
    a, b = make_cyclic(6), make_cyclic(8)
    with pytest.raises(AmbientMismatch):
        intersect(generated_subgroup(a, [1]), generated_subgroup(b, [1]))
    with pytest.raises(AmbientMismatch):
        is_comaximal(b, generated_subgroup(a, [1]), generated_subgroup(a, [2]))


def test_caps():
    with pytest.raises(ResourceLimit):
        all_subgroups(make_cyclic(300))
    with pytest.raises(ResourceLimit) as info:
        all_subgroups(realize("C2xC2xC2xC2"), subgroup_cap=10)
    assert info.value.cap == 10


def test_subgroup_describe_uses_generators():
    d4 = make_dihedral(4)
    h = generated_subgroup(d4, [2, 4])
    assert h.describe() == "|H|=4 <r^2, s>"
    assert SubgroupSet(d4, 1).describe() == "|H|=1 <>"


def test_json_round_trip_and_cache(tmp_path):
    g = realize("D6")
    lat = all_subgroups(g)
    text = lattice_to_json(lat)
    doc = json.loads(text)
    assert doc["spec"] == "D6" and len(doc["subgroups"]) == len(lat)
    again = lattice_from_json(g, text)
    assert [s.bits for s in again.subgroups] == [s.bits for s in lat.subgroups]
    assert again.maximal == lat.maximal
    with pytest.raises(ComaxError):
        lattice_from_json(realize("D5"), text)

    cache = LatticeCache(tmp_path / "c")
    assert cache.stat() == (0, 0)
    first = cache.get_or_compute(g)
    path = cache.file_for("D6")
    before = path.read_bytes()
    second = cache.get_or_compute(g)
    assert path.read_bytes() == before
    assert [s.bits for s in first.subgroups] == [s.bits for s in second.subgroups]
    cache.get_or_compute(realize("SD(7,3,2)"))
    n, size = cache.stat()
    assert n == 2 and size > 0
    assert not list((tmp_path / "c").glob(".tmp-*"))
    assert cache.clear() == 2 and cache.stat() == (0, 0)


def test_corrupt_cache_entry_is_recomputed(tmp_path):
    g = realize("C6")
    cache = LatticeCache(tmp_path)
    cache.file_for("C6").write_text("{not json")
    assert len(cache.get_or_compute(g)) == 4


def test_bits_helpers():
    assert bits_of([0, 3]) == 0b1001
    assert SubgroupSet(make_cyclic(4), bits_of([0, 2])).elements() == [0, 2]
