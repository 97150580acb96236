"""Finite crystallographic Coxeter groups in the integer geometric representation."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..errors import CapExceeded, NonCrystallographic, ParseError

DEFAULT_CAP = 1152

# m(s,t) -> (a_st, a_ts); the -1 sits on the s<t side
_CARTAN = {2: (0, 0), 3: (-1, -1), 4: (-1, -2), 6: (-1, -3)}

Matrix = tuple[tuple[int, ...], ...]


def _matmul(X: Matrix, Y: Matrix) -> Matrix:
    n = len(X)
    return tuple(tuple(sum(X[i][k] * Y[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def check_coxeter_matrix(m: Sequence[Sequence[int]]) -> None:
    n = len(m)
    if n == 0:
        raise ParseError("a Coxeter matrix needs at least one generator")
    for i, row in enumerate(m):
        if len(row) != n:
            raise ParseError("Coxeter matrix is not square")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise NonCrystallographic(f"m[{i}][{j}] = {x!r} is not an integer label")
            if i == j:
                if x != 1:
                    raise ParseError(f"diagonal entry m[{i}][{i}] must be 1")
            elif x != m[j][i]:
                raise ParseError(f"Coxeter matrix is not symmetric at ({i},{j})")
            elif x not in _CARTAN:
                raise NonCrystallographic(f"m[{i}][{j}] = {x} is not in {{2,3,4,6}}")


def cartan_matrix(m: Sequence[Sequence[int]]) -> Matrix:
    n = len(m)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            a[i][j], a[j][i] = _CARTAN[m[i][j]]
    return tuple(tuple(r) for r in a)


def generator_matrices(m: Sequence[Sequence[int]]) -> list[Matrix]:
    """``s_i(alpha_j) = alpha_j - a_ij alpha_i`` in the simple-root basis (columns)."""
    a = cartan_matrix(m)
    n = len(m)
    mats = []
    for i in range(n):
        rows = [list(r) for r in _identity(n)]
        for j in range(n):
            rows[i][j] -= a[i][j]
        mats.append(tuple(tuple(r) for r in rows))
    return mats


@dataclass
class CoxeterSystem:
    """Elements are indices into ``matrices``; index 0 is the identity.

    ``right[w][s]`` is the index of ``w s`` and ``left[s][w]`` that of ``s w``.
    ``below[w]`` is a bitset of the Bruhat interval ``[e, w]``.
    """

    generators: tuple[str, ...]
    coxeter_matrix: tuple[tuple[int, ...], ...]
    cap: int
    matrices: list[Matrix]
    length: list[int]
    right: list[list[int]]
    left: list[list[int]]
    words: list[tuple[int, ...]]
    inverse: list[int]
    reflections: list[int]
    below: list[int]
    index: dict[Matrix, int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.matrices)

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def longest(self) -> int:
        return max(range(self.order), key=lambda w: self.length[w])

    def elements_by_length(self) -> list[int]:
        return sorted(range(self.order), key=lambda w: (self.length[w], self.words[w]))

    def leq(self, x: int, w: int) -> bool:
        return bool(self.below[w] >> x & 1)

    def interval(self, w: int) -> list[int]:
        return [x for x in range(self.order) if self.below[w] >> x & 1]

    def multiply(self, x: int, y: int) -> int:
        for s in self.words[y]:
            x = self.right[x][s]
        return x

    def name(self, w: int) -> str:
        """Lexicographically least reduced word, or ``e``."""
        if not self.words[w]:
            return "e"
        sep = "" if all(len(g) == 1 for g in self.generators) else "."
        return sep.join(self.generators[s] for s in self.words[w])

    def element(self, name: str) -> int:
        for w in range(self.order):
            if self.name(w) == name:
                return w
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "m": [list(r) for r in self.coxeter_matrix]}


def build_coxeter(matrix: Sequence[Sequence[int]], generators: Sequence[str] | None = None,
                  cap: int = DEFAULT_CAP) -> CoxeterSystem:
    check_coxeter_matrix(matrix)
    n = len(matrix)
    gens = tuple(generators) if generators is not None else tuple(f"s{i + 1}" for i in range(n))
    if len(gens) != n or len(set(gens)) != n:
        raise ParseError("generator names must be distinct and match the matrix size")
    S = generator_matrices(matrix)
    for i in range(n):
        for j in range(n):
            P = _matmul(S[i], S[j])
            acc = _identity(n)
            for _ in range(matrix[i][j]):
                acc = _matmul(acc, P)
            if acc != _identity(n):
                raise NonCrystallographic(f"(s{i + 1} s{j + 1})^{matrix[i][j]} != 1 in the integer representation")

    one = _identity(n)
    index = {one: 0}
    mats = [one]
    length = [0]
    queue = deque([0])
    while queue:
        w = queue.popleft()
        for s in range(n):
            M = _matmul(mats[w], S[s])
            if M not in index:
                if len(mats) >= cap:
                    raise CapExceeded(f"group order exceeds the cap {cap}")
                index[M] = len(mats)
                mats.append(M)
                length.append(length[w] + 1)
                queue.append(index[M])
    N = len(mats)
    right = [[index[_matmul(mats[w], S[s])] for s in range(n)] for w in range(N)]
    left_t = [[index[_matmul(S[s], mats[w])] for s in range(n)] for w in range(N)]
    left = [[left_t[w][s] for w in range(N)] for s in range(n)]
    for w in range(N):
        for s in range(n):
            if abs(length[right[w][s]] - length[w]) != 1 or abs(length[left[s][w]] - length[w]) != 1:
                raise NonCrystallographic("length function violates l(ws) = l(w) +- 1")

    order = sorted(range(N), key=lambda w: length[w])
    words: list[tuple[int, ...]] = [()] * N
    for w in order[1:]:
        s = min(t for t in range(n) if length[left[t][w]] < length[w])
        words[w] = (s,) + words[left[s][w]]

    inverse = [0] * N
    for w in range(N):
        x = 0
        for s in reversed(words[w]):
            x = right[x][s]
        inverse[w] = x

    refl = {index[_matmul(_matmul(mats[w], S[s]), mats[inverse[w]])] for w in range(N) for s in range(n)}
    reflections = sorted(refl, key=lambda t: (length[t], words[t]))

    def mul(x, y):
        for s in words[y]:
            x = right[x][s]
        return x

    below = [0] * N
    for w in order:
        bits = 1 << w
        for t in reflections:
            tw = mul(t, w)
            if length[tw] < length[w]:
                bits |= below[tw]
        below[w] = bits

    return CoxeterSystem(gens, tuple(tuple(r) for r in matrix), cap, mats, length, right, left,
                         words, inverse, reflections, below, index)


def coxeter_from_json(data: Mapping, cap: int = DEFAULT_CAP) -> CoxeterSystem:
    try:
        gens = [str(g) for g in data["generators"]]
        m = [list(r) for r in data["m"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed Coxeter input: {exc!r}") from None
    return build_coxeter(m, gens, cap)


def load_coxeter(text: str, cap: int = DEFAULT_CAP) -> CoxeterSystem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return coxeter_from_json(data, cap)


TYPES = {
    "A1": ([[1]], ("s",)),
    "A2": ([[1, 3], [3, 1]], ("s", "t")),
    "B2": ([[1, 4], [4, 1]], ("s", "t")),
    "G2": ([[1, 6], [6, 1]], ("s", "t")),
    "A3": ([[1, 3, 2], [3, 1, 3], [2, 3, 1]], ("r", "s", "t")),
}


def named_type(name: str, cap: int = DEFAULT_CAP) -> CoxeterSystem:
    m, gens = TYPES[name]
    return build_coxeter(m, gens, cap)
