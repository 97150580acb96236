"""Small hand-written presentations used as fixtures and in the docs."""

from __future__ import annotations

from .twocat import Indecomposable1Mor, TwoCatPresentation


def square_to_idempotent() -> TwoCatPresentation:
    """One object ``i`` with indecomposables 1_i, F, K.

    F o F = F + K and every other product of F, K vanishes, so F is not
    idempotent but F + K is.
    """
    return TwoCatPresentation(
        ["i"],
        [
            Indecomposable1Mor("1_i", "i", "i", True),
            Indecomposable1Mor("F", "i", "i"),
            Indecomposable1Mor("K", "i", "i"),
        ],
        {("F", "F"): {"F": 1, "K": 1}},
    )


def idempotent_functor() -> TwoCatPresentation:
    """One object ``i`` with indecomposables 1_i, F and F o F = F."""
    return TwoCatPresentation(
        ["i"],
        [Indecomposable1Mor("1_i", "i", "i", True), Indecomposable1Mor("F", "i", "i")],
        {("F", "F"): {"F": 1}},
    )


def disjoint_objects() -> TwoCatPresentation:
    """Two objects with nothing between them."""
    return TwoCatPresentation(
        ["i", "j"],
        [Indecomposable1Mor("1_i", "i", "i", True), Indecomposable1Mor("1_j", "j", "j", True)],
    )
