import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comax.errors import ResourceLimit, SpecSemanticError, SpecSyntaxError
from comax.groups import order_census
from comax.spec import (
    Alternating,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GenQuaternion,
    Semidirect,
    Symmetric,
    parse_spec,
    realize,
    render,
)


def test_parse_examples():
    assert parse_spec("D6") == Dihedral(6)
    assert parse_spec("C2 x C2 x C3") == DirectProduct((Cyclic(2), Cyclic(2), Cyclic(3)))
    assert parse_spec("SD(3,4,2)") == Semidirect(3, 4, 2)
    assert parse_spec("Q8") == GenQuaternion(3)
    assert parse_spec("Dic5") == Dicyclic(5)
    assert parse_spec("  A4 ") == Alternating(4)
    assert parse_spec("S3") == Symmetric(3)


def test_render_is_compact():
    assert render(parse_spec("C2 x C2 x C3")) == "C2xC2xC3"
    assert render(GenQuaternion(4)) == "Q16"
    assert render(Semidirect(7, 3, 2)) == "SD(7,3,2)"


@pytest.mark.parametrize("text,offset", [("C", 1), ("C2x", 3), ("Cx2", 1), ("C2 y", 3), ("", 0), ("SD(3,4", 6), ("Z5", 0)])
def test_syntax_errors_carry_offset(text, offset):
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


@pytest.mark.parametrize("text", ["C0", "D2", "Dic1", "Q12", "Q4", "SD(6,2,2)", "SD(7,2,2)", "A0"])
def test_semantic_errors(text):
    with pytest.raises(SpecSemanticError):
        parse_spec(text)


def test_semantic_error_offset_points_at_bad_factor():
    with pytest.raises(SpecSemanticError) as info:
        parse_spec("C2 x D2")
    assert info.value.offset == 5


def test_realize_examples():
    assert realize(Dihedral(4)).order == 8
    g = realize(DirectProduct((Cyclic(2), Cyclic(6))))
    assert g.order == 12 and g.is_abelian()
    assert order_census(realize(GenQuaternion(3))) == {1: 1, 2: 1, 4: 6}
    assert realize("C2 x C3").name == "C2xC3"


def test_realize_cap():
    with pytest.raises(ResourceLimit):
        realize("C20 x C20", cap=256)


def test_product_generators_are_named_per_factor():
    g = realize("C2xC2xC3")
    assert sorted(g.generator_labels.values()) == ["g1", "g2", "g3"]


_small = st.integers(min_value=1, max_value=40)
_term = st.one_of(
    _small.map(Cyclic),
    st.integers(3, 30).map(Dihedral),
    st.integers(2, 20).map(Dicyclic),
    st.integers(3, 8).map(GenQuaternion),
    st.integers(1, 6).map(Alternating),
    st.integers(1, 6).map(Symmetric),
    st.sampled_from([Semidirect(3, 2, 2), Semidirect(7, 3, 2), Semidirect(5, 4, 2), Semidirect(5, 4, 3)]),
)
_spec = st.one_of(_term, st.lists(_term, min_size=2, max_size=4).map(lambda fs: DirectProduct(tuple(fs))))


@settings(max_examples=300, deadline=None)
@given(_spec)
def test_render_parse_round_trip(spec):
    assert parse_spec(render(spec)) == spec


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="CDQASicx()0123456789, ", max_size=14))
def test_parser_never_crashes_unexpectedly(text):
    try:
        spec = parse_spec(text)
    except (SpecSyntaxError, SpecSemanticError):
        return
    assert parse_spec(render(spec)) == spec
