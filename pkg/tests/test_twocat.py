import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twomorita.catalog import disjoint_objects, idempotent_functor, square_to_idempotent
from twomorita.errors import SubtractionUnderflow, TypeMismatch, UnknownObject
from twomorita.projfun import QuiverAlgebra, build_projfun_2cat
from twomorita.twocat import (
    Indecomposable1Mor,
    MorSum,
    TwoCatPresentation,
    all_sums,
    compose_sums,
    indecomposables_between,
    is_weakly_idempotent,
    validate_presentation,
)

P72 = square_to_idempotent()


def s(**terms):
    return P72.sum("i", "i", terms)


def test_catalog_presentations_validate():
    for P in (P72, idempotent_functor(), disjoint_objects()):
        assert validate_presentation(P).ok


def test_zero_defaults_are_legal():
    # only F o F is tabulated; K o F, F o K, K o K default to zero
    assert P72.composite("K", "F").is_zero
    assert P72.composite("F", "K").is_zero
    assert P72.composite("K", "K").is_zero


def test_broken_identity_law_is_reported():
    P = TwoCatPresentation(
        ["i"],
        [Indecomposable1Mor("1_i", "i", "i", True), Indecomposable1Mor("F", "i", "i")],
        {("1_i", "F"): {"F": 2}},
    )
    assert "identity-law" in validate_presentation(P).kinds()


def test_structural_violations_are_reported():
    P = TwoCatPresentation(
        ["i", "j"],
        [
            Indecomposable1Mor("1_i", "i", "i", True),
            Indecomposable1Mor("F", "i", "j"),
            Indecomposable1Mor("F", "i", "i"),
            Indecomposable1Mor("G", "i", "x"),
        ],
        {("F", "F"): {"F": 1}},
    )
    kinds = validate_presentation(P).kinds()
    assert {"duplicate-id", "unknown-object", "missing-identity"} <= kinds


def test_associativity_violation_is_reported():
    P = TwoCatPresentation(
        ["i"],
        [Indecomposable1Mor("1_i", "i", "i", True), Indecomposable1Mor("F", "i", "i"),
         Indecomposable1Mor("K", "i", "i")],
        {("F", "F"): {"K": 1}, ("F", "K"): {"F": 1}},
    )
    assert "associativity" in validate_presentation(P).kinds()


def test_compose_examples():
    assert compose_sums(P72, P72.identity_sum("i"), s(F=3)) == s(F=3)
    assert compose_sums(P72, s(F=1), s(F=1)) == s(F=1, K=1)
    assert compose_sums(P72, s(F=1, K=1), s(F=1, K=1)) == s(F=1, K=1)
    assert compose_sums(P72, s(), s(F=2)).is_zero


def test_compose_type_mismatch():
    P = disjoint_objects()
    with pytest.raises(TypeMismatch):
        compose_sums(P, P.identity_sum("i"), P.identity_sum("j"))
    with pytest.raises(TypeMismatch):
        P.sum("i", "j", {"1_i": 1})


def test_weak_idempotency_examples():
    assert is_weakly_idempotent(P72, P72.identity_sum("i"))
    assert not is_weakly_idempotent(P72, s(F=1))
    assert is_weakly_idempotent(P72, s(F=1, K=1))
    assert not is_weakly_idempotent(P72, s())


def test_indecomposables_between_examples():
    assert [m.id for m in indecomposables_between(P72, "i", "i")] == ["1_i", "F", "K"]
    assert indecomposables_between(disjoint_objects(), "i", "j") == []
    CC = build_projfun_2cat(QuiverAlgebra(["1", "2"], []))
    assert [m.id for m in indecomposables_between(CC, "1", "2")] == ["P[2,1]"]
    with pytest.raises(UnknownObject):
        indecomposables_between(P72, "i", "nope")


def test_unique_nonidentity_weak_idempotent_up_to_total_three():
    hits = [f for f in all_sums(P72, "i", "i", 3) if not f.is_zero and is_weakly_idempotent(P72, f)]
    assert [f.as_dict() for f in hits if f["1_i"] == 0] == [{"F": 1, "K": 1}]


def test_morsum_arithmetic():
    assert str(s(F=1, K=2)) == "F + 2K"
    assert str(s()) == "0"
    assert s(F=2, K=1) - s(F=1) == s(F=1, K=1)
    with pytest.raises(SubtractionUnderflow):
        s(F=1) - s(K=1)
    assert MorSum("i", "i", {"F": 0}).is_zero


def test_presentation_json_round_trip():
    for P in (P72, idempotent_functor(), disjoint_objects()):
        text = P.dumps()
        Q = TwoCatPresentation.from_json(json.loads(text))
        assert Q == P
        assert Q.dumps() == text


sums72 = st.dictionaries(st.sampled_from(["1_i", "F", "K"]), st.integers(0, 3), max_size=3).map(
    lambda d: P72.sum("i", "i", d))


@settings(max_examples=200)
@given(sums72, sums72, sums72)
def test_compose_bilinear_and_associative(f, g, h):
    assert compose_sums(P72, f + g, h) == compose_sums(P72, f, h) + compose_sums(P72, g, h)
    assert compose_sums(P72, h, f + g) == compose_sums(P72, h, f) + compose_sums(P72, h, g)
    assert compose_sums(P72, compose_sums(P72, f, g), h) == compose_sums(P72, f, compose_sums(P72, g, h))


@given(sums72)
def test_weak_idempotents_closed_under_squaring(f):
    if is_weakly_idempotent(P72, f):
        assert is_weakly_idempotent(P72, compose_sums(P72, f, f))
