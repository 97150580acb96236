import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import idempotents
from twomorita.errors import (
    DimensionMismatch,
    IntegerOverflow,
    NotIdempotent,
    TooLarge,
)
from twomorita.nnimat import (
    MAX_ENTRY,
    FlorBlockForm,
    NNIMatrix,
    flor_normal_form,
    flor_oracle,
    is_idempotent_matrix,
    nni_multiply,
    verify_flor,
)

M77 = NNIMatrix.from_rows([[0, 1, 1], [0, 1, 1], [0, 0, 0]])


def test_multiply_examples():
    I3 = NNIMatrix.identity(3)
    assert nni_multiply(I3, I3) == I3
    E = NNIMatrix.from_rows([[0, 1], [0, 1]])
    assert nni_multiply(E, E) == E
    assert nni_multiply(NNIMatrix.from_rows([[1, 1]]), NNIMatrix.from_rows([[1], [1]])).to_json() == [[2]]


def test_multiply_errors():
    with pytest.raises(DimensionMismatch):
        nni_multiply(NNIMatrix.identity(2), NNIMatrix.identity(3))
    big = NNIMatrix.from_rows([[MAX_ENTRY, MAX_ENTRY]])
    with pytest.raises(IntegerOverflow):
        nni_multiply(big, NNIMatrix.from_rows([[1], [1]]))
    with pytest.raises(IntegerOverflow):
        NNIMatrix.from_rows([[MAX_ENTRY + 1]])
    with pytest.raises(ValueError):
        NNIMatrix.from_rows([[-1]])


def test_idempotency_examples():
    assert is_idempotent_matrix(NNIMatrix.zero(4))
    assert is_idempotent_matrix(M77)
    assert not is_idempotent_matrix(NNIMatrix.from_rows([[2]]))
    with pytest.raises(DimensionMismatch):
        is_idempotent_matrix(NNIMatrix.from_rows([[1, 0]]))


def test_flor_examples():
    f = flor_normal_form(NNIMatrix.from_rows([[1]]))
    assert (f.perm, f.sizes) == ((0,), (0, 1, 0))
    assert flor_normal_form(NNIMatrix.zero(3)).sizes == (0, 0, 3)
    f = flor_normal_form(M77)
    assert f.perm == (0, 1, 2) and f.sizes == (1, 1, 1)
    assert f.blockA.to_json() == [[1]] and f.blockB.to_json() == [[1]]
    assert flor_oracle(M77).sizes == (1, 1, 1)


def test_flor_rejects_non_idempotent():
    M = NNIMatrix.from_rows([[0, 2], [0, 0]])
    with pytest.raises(NotIdempotent):
        flor_normal_form(M)
    with pytest.raises(NotIdempotent):
        flor_oracle(M)
    with pytest.raises(TooLarge):
        flor_oracle(NNIMatrix.zero(8))


def test_form_json_round_trip():
    f = flor_normal_form(M77)
    data = f.to_json()
    assert set(data) == {"perm", "a", "b", "c", "A", "B"}
    assert FlorBlockForm.from_json(data) == f


def test_verify_rejects_bad_witness():
    f = flor_normal_form(M77)
    bad = FlorBlockForm((1, 0, 2), f.a, f.b, f.c, f.blockA, f.blockB)
    assert verify_flor(M77, f)
    assert not verify_flor(M77, bad)


@settings(max_examples=200, deadline=None)
@given(idempotents())
def test_flor_form_verifies_and_matches_oracle(M):
    assert is_idempotent_matrix(M)
    f = flor_normal_form(M)
    assert verify_flor(M, f)
    assert M.permuted(f.perm) == f.block_matrix()
    assert f.b == M.trace()
    assert flor_oracle(M).sizes == f.sizes


@settings(max_examples=100, deadline=None)
@given(idempotents(max_n=7, max_entry=3))
def test_diagonal_of_idempotent_is_zero_one(M):
    assert all(M[i, i] in (0, 1) for i in range(M.rows))


@given(st.lists(st.lists(st.integers(0, 5), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(st.integers(0, 5), min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(st.integers(0, 5), min_size=3, max_size=3), min_size=3, max_size=3))
def test_multiply_associative(a, b, c):
    A, B, C = (NNIMatrix.from_rows(x) for x in (a, b, c))
    assert nni_multiply(nni_multiply(A, B), C) == nni_multiply(A, nni_multiply(B, C))


def test_json_round_trip():
    assert NNIMatrix.from_json(M77.to_json()) == M77
    with pytest.raises(ValueError):
        NNIMatrix.from_json({"rows": 1})
