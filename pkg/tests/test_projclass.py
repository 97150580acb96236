import itertools

import pytest

from twomorita.catalog import disjoint_objects, idempotent_functor, square_to_idempotent
from twomorita.endodecomp import EndoMatrix, gamma_theta_pi, is_idempotent_endo
from twomorita.errors import DescriptorInvalid
from twomorita.projclass import (
    ProjectiveDescriptor,
    check_descriptor,
    classify_projectives,
    descriptor_for,
    essential_objects,
    local_endo_products,
    mutual_witness_pairs,
    preorder,
    retract_idempotent,
)
from twomorita.projfun import Arrow, QuiverAlgebra, build_projfun_2cat
from twomorita.soergel import build_soergel_2cat, named_type
from twomorita.twocat import TwoCatPresentation, compose_sums, indecomposables_between

P72 = square_to_idempotent()
P71 = idempotent_functor()

CC = build_projfun_2cat(QuiverAlgebra(["1", "2"], []))
PATH_C = build_projfun_2cat(QuiverAlgebra(["1", "2", "3"], [Arrow("a", "1", "2")]))


def summary(P):
    return [(d.object, d.G, d.Q.as_dict()) for d in classify_projectives(P)]


def test_classification_examples():
    assert summary(P72) == [("i", "1_i", {}), ("i", "F", {"K": 1})]
    assert summary(P71) == [("i", "1_i", {}), ("i", "F", {})]
    assert summary(build_soergel_2cat(named_type("A2"))) == [("i", "B_e", {})]


def test_classification_agrees_with_brute_force():
    for P in (P72, P71, CC, PATH_C):
        brute = []
        for obj in P.objects:
            for m in indecomposables_between(P, obj, obj):
                g = P.single(m.id)
                sq = compose_sums(P, g, g)
                if sq[m.id] != 1:
                    continue
                Q = sq - g
                zero = all(compose_sums(P, x, y).is_zero for x, y in ((g, Q), (Q, g), (Q, Q)))
                if zero and compose_sums(P, sq, sq) == sq:
                    brute.append(m.id)
        ds = classify_projectives(P)
        assert [d.G for d in ds] == brute
        assert all(check_descriptor(P, d) == [] for d in ds)


def test_retract_idempotents():
    d = descriptor_for(P72, "F")
    phi = retract_idempotent(P72, d)
    assert phi == EndoMatrix(P72, ["i"], [[{"F": 1, "K": 1}]])
    assert retract_idempotent(P72, descriptor_for(P72, "1_i")) == EndoMatrix.identity(P72, ["i"])
    assert retract_idempotent(P71, descriptor_for(P71, "F")) == EndoMatrix(P71, ["i"], [[{"F": 1}]])


@pytest.mark.parametrize("P", [P72, P71, CC, PATH_C])
def test_retract_decomposes_as_g_plus_q(P):
    for d in classify_projectives(P):
        phi = retract_idempotent(P, d)
        assert is_idempotent_endo(phi)
        dec = gamma_theta_pi(phi)
        assert dec.gamma == EndoMatrix(P, [d.object], [[{d.G: 1}]])
        assert dec.theta == EndoMatrix(P, [d.object], [[d.Q]])
        assert dec.pi.is_zero


def test_invalid_descriptor_rejected():
    bad = ProjectiveDescriptor("i", "K", P72.sum("i", "i", {}), P72.sum("i", "i", {}))
    assert check_descriptor(P72, bad)
    with pytest.raises(DescriptorInvalid):
        retract_idempotent(P72, bad)


def test_local_endo_products():
    table = local_endo_products(P72, descriptor_for(P72, "1_i"))
    for (a, b), res in table.products.items():
        assert res == P72.composite(a, b)
    table = local_endo_products(P72, descriptor_for(P72, "F"))
    assert table.sandwich["F"].as_dict() == {"F": 1, "K": 1}
    assert table.sandwich["K"].is_zero
    assert table.sandwich["1_i"].as_dict() == {"F": 1, "K": 1}
    table = local_endo_products(P71, descriptor_for(P71, "F"))
    assert table.sandwich["F"].as_dict() == {"F": 1}
    assert table.sandwich["1_i"].as_dict() == {"F": 1}


def test_preorder_examples():
    for P in (P72, P71, CC, PATH_C):
        rel = preorder(P)
        assert all(rel[(i, i)] for i in P.objects)
    rel = preorder(CC)
    assert rel[("1", "2")] and rel[("2", "1")]
    # objects: "1" is the path algebra 1->2, "2" is the extra copy of the field
    rel = preorder(PATH_C)
    assert rel[("2", "1")] is not None
    assert rel[("1", "2")] is None


def test_preorder_witnesses_compose_and_chain():
    for P in (CC, PATH_C, disjoint_objects()):
        rel = preorder(P)
        for (i, j), w in rel.items():
            if w:
                phi, psi = w
                assert P.composite(phi, psi) == P.identity_sum(i)
        for i, j, k in itertools.product(P.objects, repeat=3):
            if rel[(i, j)] and rel[(j, k)]:
                assert rel[(i, k)]


def test_essential_examples():
    assert essential_objects(P72) == ["i"]
    assert essential_objects(CC) == ["1"]
    assert essential_objects(disjoint_objects()) == ["i", "j"]
    assert essential_objects(PATH_C) == ["1"]


def _relabel(P: TwoCatPresentation, names: dict[str, str]) -> TwoCatPresentation:
    data = P.to_json()
    data["objects"] = [names[o] for o in data["objects"]]
    data["identities"] = {names[o]: m for o, m in data["identities"].items()}
    for m in data["onemorphisms"]:
        m["src"], m["tgt"] = names[m["src"]], names[m["tgt"]]
    return TwoCatPresentation.from_json(data)


def test_essential_invariant_under_relabeling():
    for P in (CC, PATH_C, disjoint_objects()):
        objs = list(P.objects)
        for perm in itertools.permutations(objs):
            names = dict(zip(objs, perm))
            Q = _relabel(P, names)
            ess = essential_objects(Q)
            # same number of classes, and each representative maps back to an essential class
            assert len(ess) == len(essential_objects(P))
            back = {v: k for k, v in names.items()}
            rel = preorder(P)
            for e in ess:
                assert any(rel[(back[e], x)] and rel[(x, back[e])] for x in essential_objects(P))


def test_mutual_witness_advisory():
    ds = classify_projectives(CC)
    assert mutual_witness_pairs(CC, ds) == [(0, 1, "P[1,2]", "P[2,1]")]
    assert mutual_witness_pairs(P72, classify_projectives(P72)) == []
