import cmath
from collections import Counter
from itertools import product

import numpy as np
import pytest

from comax.errors import InvalidParameter, ResourceLimit
from comax.groups import (
    GroupTable,
    direct_product,
    element_order,
    from_permutations,
    make_alternating,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_gen_quaternion,
    make_semidirect,
    make_symmetric,
    order_census,
    parse_cycles,
    validate,
)


def _perm_census(gens, degree):
    """Element-order census of the permutation group generated by ``gens``."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt

    def order(p):
        k, q = 1, p
        while q != ident:
            q = tuple(p[q[i]] for i in range(degree))
            k += 1
        return k

    return dict(Counter(order(p) for p in seen))


def _matrix_census(gens):
    """Census of a finite matrix group, closing under products numerically."""
    def key(m):
        return tuple(np.round(m, 8).ravel().tolist())

    ident = np.eye(2, dtype=complex)
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                k = key(b)
                if k not in seen:
                    seen[k] = b
                    nxt.append(b)
        frontier = nxt

    def order(m):
        k, p = 1, m
        while key(p) != key(ident):
            p = p @ m
            k += 1
        return k

    return dict(Counter(order(m) for m in seen.values()))


def test_cyclic_examples():
    assert make_cyclic(1).order == 1
    c6 = make_cyclic(6)
    assert c6.mul[2][5] == 1 and c6.inv[2] == 4
    c4 = make_cyclic(4)
    assert element_order(c4, 1) == 4 and element_order(c4, 2) == 2


def test_dihedral_relation_and_orders():
    d4 = make_dihedral(4)
    r, s = 1, 4
    assert d4.order == 8
    assert d4.mul[d4.mul[s][r]][s] == d4.power(r, 3)
    d3 = make_dihedral(3)
    assert all(element_order(d3, 3 + i) == 2 for i in range(3))
    assert element_order(make_dihedral(6), 1) == 6
    assert element_order(d4, s) == 2


@pytest.mark.parametrize("n", range(3, 13))
def test_dihedral_census_matches_polygon_symmetries(n):
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((-i) % n for i in range(n))
    assert order_census(make_dihedral(n)) == _perm_census([rot, refl], n)


@pytest.mark.parametrize("m", range(2, 10))
def test_dicyclic_census_matches_matrix_group(m):
    z = cmath.exp(1j * cmath.pi / m)
    x = np.array([[z, 0], [0, 1 / z]])
    y = np.array([[0, -1], [1, 0]], dtype=complex)
    assert order_census(make_dicyclic(m)) == _matrix_census([x, y])


def test_dicyclic_examples():
    q = make_dicyclic(2)
    assert q.order == 8 and order_census(q)[2] == 1
    assert order_census(make_dicyclic(3)) == {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}
    assert make_dicyclic(4).order == 16


def test_gen_quaternion():
    assert order_census(make_gen_quaternion(3)) == order_census(make_dicyclic(2))
    q16 = make_gen_quaternion(4)
    assert q16.order == 16 and order_census(q16)[2] == 1
    assert make_gen_quaternion(5).order == 32
    assert make_gen_quaternion(5).name == "Q32"


def test_semidirect_examples():
    s3 = make_semidirect(3, 2, 2)
    assert s3.order == 6 and not s3.is_abelian()
    assert order_census(s3) == order_census(make_symmetric(3))
    dic3 = make_semidirect(3, 4, 2)
    assert order_census(dic3) == order_census(make_dicyclic(3))
    c20 = make_semidirect(5, 4, 1)
    assert c20.is_abelian() and max(order_census(c20)) == 20


@pytest.mark.parametrize("args,fragment", [((6, 2, 2), "gcd"), ((7, 2, 2), "mod"), ((0, 2, 1), "positive")])
def test_semidirect_rejects_bad_parameters(args, fragment):
    with pytest.raises(InvalidParameter, match=fragment):
        make_semidirect(*args)


def test_permutation_closure():
    assert from_permutations([parse_cycles("(0 1 2)")]).order == 3
    a4 = from_permutations([parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)", 4)])
    assert a4.order == 12
    assert from_permutations([]).order == 1
    assert make_alternating(4).order == 12 and make_symmetric(4).order == 24
    assert order_census(make_alternating(4)) == {1: 1, 2: 3, 3: 8}


def test_permutation_errors():
    with pytest.raises(ResourceLimit):
        make_symmetric(7, cap=1000)
    with pytest.raises(InvalidParameter):
        from_permutations([(0, 0, 1)])


def test_direct_product():
    c6 = direct_product(make_cyclic(2), make_cyclic(3))
    assert 6 in order_census(c6)
    assert 4 not in order_census(direct_product(make_cyclic(2), make_cyclic(2)))
    g = direct_product(make_cyclic(2), direct_product(make_cyclic(2), make_cyclic(3)))
    assert g.order == 12 and g.is_abelian() and max(order_census(g)) == 6
    with pytest.raises(ResourceLimit):
        direct_product(make_cyclic(40), make_cyclic(40), cap=1000)


def test_direct_product_census_is_lcm_convolution():
    from math import lcm

    g, h = make_dihedral(4), make_cyclic(6)
    expect = Counter()
    for (a, x), (b, y) in product(order_census(g).items(), order_census(h).items()):
        expect[lcm(a, b)] += x * y
    assert order_census(direct_product(g, h)) == dict(expect)


def test_element_order_range():
    with pytest.raises(IndexError):
        element_order(make_cyclic(3), 3)


@pytest.mark.parametrize("g", [make_dihedral(5), make_semidirect(7, 3, 2), make_dicyclic(5), make_alternating(4)],
                         ids=lambda g: g.name)
def test_validate_accepts_groups(g):
    assert validate(g).ok


def _corrupt(g: GroupTable, x, y, value) -> GroupTable:
    rows = [list(r) for r in g.mul]
    rows[x][y] = value
    return GroupTable(g.order, tuple(map(tuple, rows)), g.identity, g.inv, g.name + "*")


def test_validate_reports_associativity_witness():
    g = make_cyclic(5)
    bad = _corrupt(g, 1, 1, 3)
    rep = validate(bad)
    assert "associativity" in rep.failed_axioms()
    x, y, z = next(f.witness for f in rep.failures if f.axiom == "associativity")
    m = bad.mul
    assert m[m[x][y]][z] != m[x][m[y][z]]


def test_validate_reports_identity_inverse_and_range():
    g = make_cyclic(4)
    assert "identity" in validate(_corrupt(g, 0, 1, 2)).failed_axioms()
    assert "inverse" in validate(_corrupt(g, 1, 3, 1)).failed_axioms()
    assert validate(_corrupt(g, 2, 2, 9)).failed_axioms() == {"range"}


def test_labels_are_words_in_generators():
    d4 = make_dihedral(4)
    assert d4.label(d4.identity) == "1"
    assert d4.label(4) == "s"
    assert d4.label(d4.mul[d4.power(1, 3)][4]) == "r^3 s"
