"""Projective 2-representations, retract idempotents and the essential subcategory.

Every indecomposable projective 2-representation is the image of
``E = G o G`` acting on a principal 2-representation, where ``G`` is an
indecomposable endomorphism with ``G o G = G + Q`` and ``Q`` annihilated by
``G`` and by itself. :func:`classify_projectives` lists all such ``G``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .endodecomp import EndoMatrix, is_idempotent_endo
from .errors import DescriptorInvalid
from .twocat import (
    MorSum,
    TwoCatPresentation,
    compose_sums,
    indecomposables_between,
    is_weakly_idempotent,
)


@dataclass(frozen=True)
class ProjectiveDescriptor:
    object: str
    G: str
    Q: MorSum
    E: MorSum

    def to_json(self) -> dict:
        return {"object": self.object, "G": self.G, "Q": self.Q.to_json(), "E": self.E.to_json()}


def descriptor_for(P: TwoCatPresentation, G: str) -> ProjectiveDescriptor | None:
    """The descriptor generated by ``G``, or None if ``G`` does not qualify."""
    m = P.get(G)
    if m.src != m.tgt:
        return None
    g = P.single(G)
    E = compose_sums(P, g, g)
    if E[G] != 1:
        return None
    Q = E - g
    if not (compose_sums(P, g, Q).is_zero and compose_sums(P, Q, g).is_zero and compose_sums(P, Q, Q).is_zero):
        return None
    if not is_weakly_idempotent(P, E):
        return None
    return ProjectiveDescriptor(m.src, G, Q, E)


def check_descriptor(P: TwoCatPresentation, d: ProjectiveDescriptor) -> list[str]:
    """Problems with ``d`` as a descriptor for ``P`` (empty if valid)."""
    problems = []
    m = P.get(d.G)
    if (m.src, m.tgt) != (d.object, d.object):
        problems.append(f"{d.G} is not an endomorphism of {d.object}")
        return problems
    g = P.single(d.G)
    if compose_sums(P, g, g) != g + d.Q:
        problems.append(f"{d.G} o {d.G} != {d.G} + Q")
    if d.Q[d.G]:
        problems.append(f"Q contains {d.G}")
    for name, value in (
        ("G o Q", compose_sums(P, g, d.Q)),
        ("Q o G", compose_sums(P, d.Q, g)),
        ("Q o Q", compose_sums(P, d.Q, d.Q)),
    ):
        if not value.is_zero:
            problems.append(f"{name} = {value}")
    if d.E != compose_sums(P, g, g):
        problems.append("E != G o G")
    if not is_weakly_idempotent(P, d.E):
        problems.append("E o E != E")
    return problems


def classify_projectives(P: TwoCatPresentation) -> list[ProjectiveDescriptor]:
    out = []
    for obj in P.objects:
        for m in indecomposables_between(P, obj, obj):
            d = descriptor_for(P, m.id)
            if d is not None:
                out.append(d)
    return out


def retract_idempotent(P: TwoCatPresentation, d: ProjectiveDescriptor) -> EndoMatrix:
    problems = check_descriptor(P, d)
    if problems:
        raise DescriptorInvalid("; ".join(problems))
    phi = EndoMatrix(P, [d.object], [[d.E]])
    if not is_idempotent_endo(phi):
        raise DescriptorInvalid(f"[{d.E}] is not idempotent")
    return phi


@dataclass
class LocalEndoTable:
    """Products inside ``E o C(i,i) o E``, expanded into indecomposables of ``P``.

    ``sandwich[F] = E o F o E`` and ``products[(F, F')]`` is the composite of
    ``sandwich[F]`` after ``sandwich[F']``.
    """

    descriptor: ProjectiveDescriptor
    sandwich: dict[str, MorSum]
    products: dict[tuple[str, str], MorSum]


def local_endo_products(P: TwoCatPresentation, d: ProjectiveDescriptor) -> LocalEndoTable:
    ids = [m.id for m in indecomposables_between(P, d.object, d.object)]
    sandwich = {F: compose_sums(P, d.E, compose_sums(P, P.single(F), d.E)) for F in ids}
    products = {(F, F2): compose_sums(P, sandwich[F], sandwich[F2]) for F in ids for F2 in ids}
    return LocalEndoTable(d, sandwich, products)


def preorder(P: TwoCatPresentation) -> dict[tuple[str, str], tuple[str, str] | None]:
    """``i <= j`` with a witness pair.

    Maps ``(i, j)`` to ``(phi, psi)`` with ``phi: j -> i``, ``psi: i -> j`` and
    ``phi o psi = 1_i``, or to None when no such pair exists. Searching
    indecomposable pairs suffices: 1_i is indecomposable, so in any sums with
    ``phi o psi = 1_i`` exactly one pair of summands contributes and it
    already composes to 1_i.
    """
    rel: dict[tuple[str, str], tuple[str, str] | None] = {}
    for i in P.objects:
        one = P.identity_sum(i)
        for j in P.objects:
            witness = None
            for phi in indecomposables_between(P, j, i):
                for psi in indecomposables_between(P, i, j):
                    if compose_sums(P, P.single(phi.id), P.single(psi.id)) == one:
                        witness = (phi.id, psi.id)
                        break
                if witness:
                    break
            rel[(i, j)] = witness
    return rel


def below(rel, i: str, j: str) -> bool:
    return rel[(i, j)] is not None


def essential_objects(P: TwoCatPresentation) -> list[str]:
    """One representative (lexicographically least) of each maximal class."""
    rel = preorder(P)
    objs = list(P.objects)
    classes: list[list[str]] = []
    for i in objs:
        for cls in classes:
            j = cls[0]
            if below(rel, i, j) and below(rel, j, i):
                cls.append(i)
                break
        else:
            classes.append([i])
    reps = []
    for cls in classes:
        i = cls[0]
        maximal = all(below(rel, j, i) for j in objs if below(rel, i, j))
        if maximal:
            reps.append(min(cls))
    return sorted(reps)


def mutual_witness_pairs(P: TwoCatPresentation, descriptors: list[ProjectiveDescriptor]) -> list[tuple[int, int, str, str]]:
    """Descriptor pairs that might define equivalent retracts.

    Reports ``(a, b, phi, psi)`` when, with ``E``/``E'`` the idempotents of
    descriptors ``a``/``b``, the sandwiches ``X = E phi E'`` and
    ``Y = E' psi E`` satisfy ``X o Y = E`` and ``Y o X = E'``. This is only a
    necessary condition for equivalence and is reported as advisory.
    """
    pairs = []
    for a, d1 in enumerate(descriptors):
        for b in range(a + 1, len(descriptors)):
            d2 = descriptors[b]
            i, j = d1.object, d2.object
            hit = None
            for phi in indecomposables_between(P, j, i):
                X = compose_sums(P, d1.E, compose_sums(P, P.single(phi.id), d2.E))
                if X.is_zero:
                    continue
                for psi in indecomposables_between(P, i, j):
                    Y = compose_sums(P, d2.E, compose_sums(P, P.single(psi.id), d1.E))
                    if compose_sums(P, X, Y) == d1.E and compose_sums(P, Y, X) == d2.E:
                        hit = (phi.id, psi.id)
                        break
                if hit:
                    break
            if hit:
                pairs.append((a, b, *hit))
    return pairs
