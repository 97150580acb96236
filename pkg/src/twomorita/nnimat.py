"""Exact non-negative integer matrices and the Flor block form of idempotents.

Every idempotent matrix ``M`` over the non-negative integers can be conjugated
by a permutation into the block shape::

    [ 0_a  A    A*B ]
    [ 0    1_b  B   ]
    [ 0    0    0_c ]

:func:`flor_normal_form` finds such a permutation directly from the zero
pattern of ``M``; :func:`flor_oracle` finds one by exhaustive search and is
kept only as an independent check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    IntegerOverflow,
    MalformedDiagonal,
    NotIdempotent,
    NoWitness,
    TooLarge,
    VerificationFailed,
)

# Entries are machine-word sized; anything above this is an overflow.
MAX_ENTRY = 2**63 - 1

ORACLE_MAX_N = 7


def _check_entry(x: int) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be integers, got {x!r}")
    if x < 0:
        raise ValueError(f"matrix entries must be non-negative, got {x}")
    if x > MAX_ENTRY:
        raise IntegerOverflow(f"entry {x} exceeds {MAX_ENTRY}")
    return x


@dataclass(frozen=True)
class NNIMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows:
            raise DimensionMismatch(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise DimensionMismatch(f"expected {self.cols} columns, got {len(row)}")
            for x in row:
                _check_entry(x)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> NNIMatrix:
        """Build from nested sequences. ``cols`` is only needed for 0-row matrices."""
        entries = tuple(tuple(r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> NNIMatrix:
        m = n if m is None else m
        return cls(n, m, tuple((0,) * m for _ in range(n)))

    @classmethod
    def identity(cls, n: int) -> NNIMatrix:
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: NNIMatrix) -> NNIMatrix:
        return nni_multiply(self, other)

    def trace(self) -> int:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum(self.entries[i][i] for i in range(self.rows))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> NNIMatrix:
        return NNIMatrix(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def permuted(self, perm: Sequence[int]) -> NNIMatrix:
        """Return ``S^-1 M S`` where position ``k`` of the result holds index ``perm[k]``."""
        if not self.is_square or sorted(perm) != list(range(self.rows)):
            raise DimensionMismatch("permutation does not match matrix size")
        return self.submatrix(perm, perm)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    @classmethod
    def from_json(cls, data) -> NNIMatrix:
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("matrix JSON must be an array of arrays")
        return cls.from_rows(data)

    def __str__(self) -> str:
        if not self.entries:
            return "[]"
        width = max(len(str(x)) for r in self.entries for x in r) if self.cols else 1
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.entries)


def nni_multiply(M: NNIMatrix, N: NNIMatrix) -> NNIMatrix:
    if M.cols != N.rows:
        raise DimensionMismatch(f"cannot multiply {M.rows}x{M.cols} by {N.rows}x{N.cols}")
    cols_N = [N.column(j) for j in range(N.cols)]
    out = []
    for row in M.entries:
        new_row = []
        for col in cols_N:
            s = sum(a * b for a, b in zip(row, col))
            if s > MAX_ENTRY:
                raise IntegerOverflow(f"product entry {s} exceeds {MAX_ENTRY}")
            new_row.append(s)
        out.append(tuple(new_row))
    return NNIMatrix(M.rows, N.cols, tuple(out))


def is_idempotent_matrix(M: NNIMatrix) -> bool:
    if not M.is_square:
        raise DimensionMismatch("idempotency of a non-square matrix")
    return nni_multiply(M, M) == M


@dataclass(frozen=True)
class FlorBlockForm:
    """Witness that ``M.permuted(perm)`` has the idempotent block shape.

    ``blockA`` is a x b and ``blockB`` is b x c. The top-right block of the
    conjugated matrix is ``blockA @ blockB``.
    """

    perm: tuple[int, ...]
    a: int
    b: int
    c: int
    blockA: NNIMatrix
    blockB: NNIMatrix

    @property
    def n(self) -> int:
        return self.a + self.b + self.c

    @property
    def sizes(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def block_matrix(self) -> NNIMatrix:
        """The conjugated matrix rebuilt from the blocks."""
        return assemble_blocks(self.a, self.b, self.c, self.blockA, self.blockB)

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "A": self.blockA.to_json(),
            "B": self.blockB.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> FlorBlockForm:
        a, b, c = data["a"], data["b"], data["c"]
        return cls(
            tuple(data["perm"]),
            a,
            b,
            c,
            NNIMatrix.from_rows(data["A"], cols=b),
            NNIMatrix.from_rows(data["B"], cols=c),
        )


def assemble_blocks(a: int, b: int, c: int, A: NNIMatrix, B: NNIMatrix) -> NNIMatrix:
    if (A.rows, A.cols) != (a, b) or (B.rows, B.cols) != (b, c):
        raise DimensionMismatch("block sizes do not match (a, b, c)")
    AB = nni_multiply(A, B)
    n = a + b + c
    rows = []
    for i in range(n):
        row = [0] * n
        if i < a:
            for j in range(b):
                row[a + j] = A[i, j]
            for j in range(c):
                row[a + b + j] = AB[i, j]
        elif i < a + b:
            row[i] = 1
            for j in range(c):
                row[a + b + j] = B[i - a, j]
        rows.append(tuple(row))
    return NNIMatrix(n, n, tuple(rows))


def _blocks_hold(M: NNIMatrix, perm: Sequence[int], a: int, b: int, c: int) -> FlorBlockForm | None:
    """Check the block equations for one candidate; return the form or None."""
    n = a + b + c
    P = M.permuted(perm)
    A = P.submatrix(range(a), range(a, a + b))
    B = P.submatrix(range(a, a + b), range(a + b, n))
    form = FlorBlockForm(tuple(perm), a, b, c, A, B)
    if P != form.block_matrix():
        return None
    return form


def flor_normal_form(M: NNIMatrix) -> FlorBlockForm:
    """Conjugate an idempotent matrix into the Flor block form.

    Indices with diagonal entry 1 form the middle class. Of the rest, those
    with a zero column go first and those with a zero row go last; an index
    with both a zero row and a zero column goes last. Within a class the
    original order is kept. The block equations are re-verified before
    returning.
    """
    if not M.is_square:
        raise DimensionMismatch("Flor form of a non-square matrix")
    if not is_idempotent_matrix(M):
        raise NotIdempotent("M @ M != M")
    n = M.rows
    first, middle, last = [], [], []
    for i in range(n):
        d = M[i, i]
        if d == 1:
            middle.append(i)
        elif d != 0:
            raise MalformedDiagonal(f"diagonal entry M[{i}][{i}] = {d}")
        elif not any(M.entries[i]):
            last.append(i)
        elif not any(M.column(i)):
            first.append(i)
        else:
            raise VerificationFailed(f"index {i} has zero diagonal but nonzero row and column")
    perm = first + middle + last
    form = _blocks_hold(M, perm, len(first), len(middle), len(last))
    if form is None:
        raise VerificationFailed("block equations fail for the computed permutation")
    return form


def flor_oracle(M: NNIMatrix) -> FlorBlockForm:
    """Exhaustive search for a Flor witness.

    Splits are tried in order of increasing ``a`` then increasing ``b``, and
    permutations in lexicographic order, so the first witness has the largest
    possible ``c``, matching the tie-break of :func:`flor_normal_form`.
    """
    if not M.is_square:
        raise DimensionMismatch("Flor form of a non-square matrix")
    n = M.rows
    if n > ORACLE_MAX_N:
        raise TooLarge(f"oracle limited to n <= {ORACLE_MAX_N}, got {n}")
    if not is_idempotent_matrix(M):
        raise NotIdempotent("M @ M != M")
    for a in range(n + 1):
        for b in range(n - a + 1):
            c = n - a - b
            for perm in itertools.permutations(range(n)):
                form = _blocks_hold(M, perm, a, b, c)
                if form is not None:
                    return form
    raise NoWitness("no permutation and split satisfy the block equations")


def verify_flor(M: NNIMatrix, form: FlorBlockForm) -> bool:
    """True iff ``form`` is a valid block-form witness for ``M``."""
    if form.n != M.rows or not M.is_square:
        return False
    if sorted(form.perm) != list(range(M.rows)):
        return False
    try:
        return M.permuted(form.perm) == form.block_matrix()
    except DimensionMismatch:
        return False


def matrices(n: int, values: Iterable[int]) -> Iterable[NNIMatrix]:
    """All n x n matrices with entries drawn from ``values``."""
    values = tuple(values)
    for flat in itertools.product(values, repeat=n * n):
        yield NNIMatrix(n, n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))
