"""Parthood catalog: defining conditions, carriers, order analysis."""

from __future__ import annotations

import pytest
from hypothesis import given, settings

from roughwork.cera import CeraModel, MixedElement
from roughwork.crad import CradModel
from roughwork.granular import from_space
from roughwork.parthood import (
    CarrierCapExceededError,
    ParthoodKind,
    analyze,
    carrier_elements,
    holds,
    relation_matrix,
)
from test_approx import spaces

PREORDER_KINDS = (
    ParthoodKind.VERY_CAUTIOUS,
    ParthoodKind.POSSIBILIST,
    ParthoodKind.G_SIMPLE,
    ParthoodKind.ROUGHLY_CONSISTENT,
)


@pytest.fixture(scope="module")
def cera_model(example_space) -> CeraModel:
    return CeraModel(example_space)


@pytest.fixture(scope="module")
def crad_model(cera_model) -> CradModel:
    return CradModel(cera_model)


def test_kind_names_round_trip():
    for kind in ParthoodKind:
        assert ParthoodKind.from_name(kind.value) is kind
    with pytest.raises(ValueError):
        ParthoodKind.from_name("sideways")


def test_bound_kind_examples(example_space):
    u = example_space.universe
    s = example_space
    assert holds(ParthoodKind.CAUTIOUS, s, u.parse("b"), u.parse("e"))
    assert holds(ParthoodKind.ULTRA_CAUTIOUS, s, u.parse("q"), u.parse("q"))
    assert not holds(ParthoodKind.LATERAL, s, u.parse("abc"), u.parse("abc"))
    assert holds(ParthoodKind.LATERAL, s, u.parse("a"), u.parse("b"))
    assert holds(ParthoodKind.BILATERAL, s, u.parse("ae"), u.parse("bf"))
    assert not holds(ParthoodKind.ULTRA_CAUTIOUS, s, u.parse("a"), u.parse("bc"))
    assert holds(ParthoodKind.LATERAL_PLUS_PLUS, s, u.parse("q"), u.parse("efq"))


def test_granule_kind_examples(example_space):
    model = from_space(example_space)
    u = model.universe
    assert holds(ParthoodKind.G_SIMPLE, model, u.parse("abce"), u.parse("abcq"))
    assert not holds(ParthoodKind.G_SIMPLE, model, u.parse("abcq"), u.parse("abc"))
    # no granule fits inside a, so the guard is vacuous
    assert holds(ParthoodKind.G_SIMPLE, model, u.parse("a"), u.parse("q"))


def test_mixed_kind_examples(cera_model):
    u = cera_model.space.universe
    b = MixedElement.type1(u.parse("b"))
    cls_f = cera_model.class_of(u.parse("f"))
    assert not holds(ParthoodKind.ADDITIVE, cera_model, b, cls_f)
    assert holds(ParthoodKind.ADDITIVE, cera_model, b, MixedElement.type1(u.parse("ab")))
    assert holds(ParthoodKind.COMMON, cera_model, b, MixedElement.type1(u.parse("ab")))
    assert holds(ParthoodKind.ROUGHLY_CONSISTENT, cera_model, b, cls_f) is False
    assert holds(
        ParthoodKind.ROUGHLY_CONSISTENT,
        cera_model,
        MixedElement.type1(u.parse("a")),
        cera_model.class_of(u.parse("abcq")),
    )


def test_additive_and_common_collapse_to_inclusion_on_subsets(cera_model):
    u = cera_model.space.universe
    for a in u.subsets():
        for b in u.subsets():
            ea, eb = MixedElement.type1(a), MixedElement.type1(b)
            expected = a.is_subset_of(b)
            assert holds(ParthoodKind.ADDITIVE, cera_model, ea, eb) == expected
            assert holds(ParthoodKind.COMMON, cera_model, ea, eb) == expected


def test_roughly_consistent_splits_into_bound_kinds(example_space, cera_model):
    u = example_space.universe
    for a in u.subsets():
        for b in u.subsets():
            ea, eb = MixedElement.type1(a), MixedElement.type1(b)
            both = holds(
                ParthoodKind.VERY_CAUTIOUS, example_space, a, b
            ) and holds(ParthoodKind.POSSIBILIST, example_space, a, b)
            assert holds(ParthoodKind.ROUGHLY_CONSISTENT, cera_model, ea, eb) == both


def test_natural_kind_dispatches_to_pair_model(crad_model):
    u = crad_model.cera.space.universe
    p = crad_model.first_pair(u.parse("a"))
    q = crad_model.first_pair(u.parse("ab"))
    assert holds(ParthoodKind.NATURAL_CRAD, crad_model, p, q)
    assert not holds(ParthoodKind.NATURAL_CRAD, crad_model, q, crad_model.first_pair(u.parse("q")))


def test_carrier_mismatches_raise(example_space, cera_model, crad_model):
    u = example_space.universe
    a, b = u.parse("a"), u.parse("b")
    with pytest.raises(TypeError):
        holds(ParthoodKind.G_SIMPLE, example_space, a, b)
    with pytest.raises(TypeError):
        holds(ParthoodKind.VERY_CAUTIOUS, cera_model, a, b)
    with pytest.raises(TypeError):
        holds(ParthoodKind.ADDITIVE, example_space, a, b)
    with pytest.raises(TypeError):
        holds(ParthoodKind.ADDITIVE, cera_model, a, b)
    with pytest.raises(TypeError):
        holds(ParthoodKind.NATURAL_CRAD, cera_model, a, b)
    with pytest.raises(TypeError):
        carrier_elements(ParthoodKind.NATURAL_CRAD, example_space)


def test_matrix_shape_and_empty_row(example_space):
    elements, rows = relation_matrix(ParthoodKind.VERY_CAUTIOUS, example_space)
    assert len(elements) == 64 and all(len(r) == 64 for r in rows)
    assert all(rows[0])
    assert elements[0].is_empty


def test_matrix_cap(example_space):
    with pytest.raises(CarrierCapExceededError):
        relation_matrix(ParthoodKind.CAUTIOUS, example_space, cap=10)


def test_analyze_very_cautious(example_space):
    u = example_space.universe
    report = analyze(ParthoodKind.VERY_CAUTIOUS, example_space)
    assert report.flags() == {
        "reflexive": True,
        "transitive": True,
        "antisymmetric": False,
    }
    a, b = report.antisymmetric.witness
    assert a != b
    assert holds(ParthoodKind.VERY_CAUTIOUS, example_space, a, b)
    assert holds(ParthoodKind.VERY_CAUTIOUS, example_space, b, a)


def test_analyze_lateral_not_reflexive(example_space):
    u = example_space.universe
    report = analyze(ParthoodKind.LATERAL, example_space)
    assert not report.reflexive.passed
    (witness,) = report.reflexive.witness
    assert witness == u.parse("abc")
    assert not holds(ParthoodKind.LATERAL, example_space, witness, witness)


def test_analyze_g_simple(example_space):
    report = analyze(ParthoodKind.G_SIMPLE, from_space(example_space))
    assert report.reflexive.passed and report.transitive.passed
    assert not report.antisymmetric.passed


def test_analyze_natural_crad(crad_model):
    report = analyze(ParthoodKind.NATURAL_CRAD, crad_model)
    assert report.reflexive.passed and report.transitive.passed
    assert not report.antisymmetric.passed


def test_transitivity_witness_re_evaluates(example_space):
    report = analyze(ParthoodKind.LATERAL_PLUS, example_space)
    if not report.transitive.passed:
        a, b, c = report.transitive.witness
        assert holds(ParthoodKind.LATERAL_PLUS, example_space, a, b)
        assert holds(ParthoodKind.LATERAL_PLUS, example_space, b, c)
        assert not holds(ParthoodKind.LATERAL_PLUS, example_space, a, c)


@settings(max_examples=15, deadline=None)
@given(spaces(max_atoms=4))
def test_preorder_kinds_on_random_spaces(space):
    cera = CeraModel(space)
    gran = from_space(space)
    for kind in PREORDER_KINDS:
        if kind is ParthoodKind.G_SIMPLE:
            model = gran
        elif kind is ParthoodKind.ROUGHLY_CONSISTENT:
            model = cera
        else:
            model = space
        report = analyze(kind, model)
        assert report.reflexive.passed, kind
        assert report.transitive.passed, kind
