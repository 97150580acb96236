"""Exact Laurent polynomials in one variable ``v`` with integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable ``{exponent: coefficient}`` map with zero coefficients removed."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self._c = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: terms like ``3v^-2``, ``-v``, ``4``."""
        text = text.replace(" ", "")
        if text == "0":
            return cls()
        acc = {}
        for tok in text.replace("-", "+-").replace("^+-", "^-").split("+"):
            if not tok:
                continue
            if "v" not in tok:
                acc[0] = acc.get(0, 0) + int(tok)
                continue
            coef, _, power = tok.partition("v")
            c = -1 if coef == "-" else 1 if coef == "" else int(coef)
            e = int(power[1:]) if power.startswith("^") else 1
            acc[e] = acc.get(e, 0) + c
        return cls(acc)

    def items(self):
        return self._c.items()

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        acc = dict(self._c)
        for e, c in other._c.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._c.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def bar(self) -> LaurentPoly:
        """``v -> v^-1``."""
        return LaurentPoly({-e: c for e, c in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def is_symmetric(self) -> bool:
        return self == self.bar()

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self._c.values())

    def in_v_Z_v(self) -> bool:
        """Whether every exponent is positive."""
        return all(e > 0 for e in self._c)

    def non_positive_part(self) -> LaurentPoly:
        return LaurentPoly({e: c for e, c in self._c.items() if e <= 0})

    def __repr__(self) -> str:
        return f"LaurentPoly({self._c})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items(), reverse=True):
            if e == 0:
                mono = str(abs(c))
            else:
                v = "v" if e == 1 else f"v^{e}"
                mono = v if abs(c) == 1 else f"{abs(c)}{v}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
