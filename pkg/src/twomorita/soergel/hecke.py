"""Hecke algebra arithmetic and the Kazhdan-Lusztig basis.

Normalization: ``H_s^2 = (v^-1 - v) H_s + 1`` and ``b_s = H_s + v``; the
canonical basis is ``b_w = sum_{x <= w} h_{x,w} H_x`` with ``h_{w,w} = 1`` and
``h_{x,w}`` in ``v Z[v]`` for ``x < w``. Hecke elements are dicts from element
index to :class:`LaurentPoly` with no zero values.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import BarInvarianceViolated, ConversionResidue, PositivityViolated
from .coxeter import CoxeterSystem
from .laurent import ONE, V, V_INV, ZERO, LaurentPoly

HeckeElt = dict[int, LaurentPoly]

_QUAD = V_INV - V  # v^-1 - v


def _add_into(acc: HeckeElt, w: int, c: LaurentPoly) -> None:
    new = acc.get(w, ZERO) + c
    if new:
        acc[w] = new
    else:
        acc.pop(w, None)


def add(a: HeckeElt, b: HeckeElt, scale: LaurentPoly = ONE) -> HeckeElt:
    out = dict(a)
    for w, c in b.items():
        _add_into(out, w, c * scale)
    return out


def left_mul_s(W: CoxeterSystem, s: int, h: HeckeElt) -> HeckeElt:
    """``H_s * h``."""
    out: HeckeElt = {}
    for x, c in h.items():
        sx = W.left[s][x]
        _add_into(out, sx, c)
        if W.length[sx] < W.length[x]:
            _add_into(out, x, c * _QUAD)
    return out


def right_mul_s(W: CoxeterSystem, h: HeckeElt, s: int) -> HeckeElt:
    """``h * H_s``."""
    out: HeckeElt = {}
    for x, c in h.items():
        xs = W.right[x][s]
        _add_into(out, xs, c)
        if W.length[xs] < W.length[x]:
            _add_into(out, x, c * _QUAD)
    return out


def standard(w: int) -> HeckeElt:
    return {w: ONE}


def bar_standard_table(W: CoxeterSystem) -> list[HeckeElt]:
    """``bar(H_x)`` for every ``x``, built as a product of ``H_s^-1 = H_s + (v - v^-1)``."""
    table: list[HeckeElt] = [{}] * W.order
    table[0] = standard(0)
    for x in W.elements_by_length()[1:]:
        *head, s = W.words[x]
        prev = W.right[x][s]
        h = table[prev]
        table[x] = add(right_mul_s(W, h, s), h, V - V_INV)
    return table


def bar(W: CoxeterSystem, h: HeckeElt, table: list[HeckeElt] | None = None) -> HeckeElt:
    table = table if table is not None else bar_standard_table(W)
    out: HeckeElt = {}
    for x, c in h.items():
        out = add(out, table[x], c.bar())
    return out


def _bar_invariant_part(p: LaurentPoly) -> LaurentPoly:
    """The unique bar-invariant ``q`` with ``p - q`` in ``v Z[v]``."""
    acc = {}
    for e, c in p.items():
        if e < 0:
            acc[e] = acc.get(e, 0) + c
            acc[-e] = acc.get(-e, 0) + c
        elif e == 0:
            acc[0] = acc.get(0, 0) + c
    return LaurentPoly(acc)


@dataclass
class KLTable:
    W: CoxeterSystem
    basis: list[HeckeElt]  # basis[w] = b_w in the standard basis

    def h(self, x: int, w: int) -> LaurentPoly:
        return self.basis[w].get(x, ZERO)

    def entries(self):
        """``((x, w), h_{x,w})`` for ``x <= w``, ordered by ``w`` then ``x``."""
        W = self.W
        for w in W.elements_by_length():
            for x in W.elements_by_length():
                if W.leq(x, w):
                    yield (x, w), self.h(x, w)

    def to_json(self) -> dict:
        W = self.W
        return {
            "group_order": W.order,
            "h": [{"x": W.name(x), "w": W.name(w), "h": str(p)} for (x, w), p in self.entries()],
        }


def check_kl_invariants(table: KLTable) -> None:
    W = table.W
    bars = bar_standard_table(W)
    for w in range(W.order):
        b = table.basis[w]
        if b.get(w) != ONE:
            raise PositivityViolated(f"h_{{w,w}} != 1 for w = {W.name(w)}")
        for x, p in b.items():
            if not W.leq(x, w):
                raise PositivityViolated(f"b_{W.name(w)} has support outside the Bruhat interval")
            if x != w and not (p.in_v_Z_v() and p.has_nonnegative_coefficients()):
                raise PositivityViolated(f"h_{{{W.name(x)},{W.name(w)}}} = {p} not in v Z>=0[v]")
        if bar(W, b, bars) != b:
            raise BarInvarianceViolated(f"b_{W.name(w)} is not bar-invariant")


def kl_table(W: CoxeterSystem, check: bool = True) -> KLTable:
    """Build ``b_w = b_s b_{sw} - sum (bar-invariant) b_z`` by increasing length."""
    basis: list[HeckeElt] = [{}] * W.order
    basis[0] = standard(0)
    by_len = W.elements_by_length()
    for w in by_len[1:]:
        s = W.words[w][0]
        rest = basis[W.left[s][w]]
        h = add(left_mul_s(W, s, rest), rest, V)
        for z in sorted(h, key=lambda z: (-W.length[z], W.words[z])):
            if z == w or z not in h:
                continue
            q = _bar_invariant_part(h[z])
            if q:
                h = add(h, basis[z], -q)
        basis[w] = h
    table = KLTable(W, basis)
    if check:
        check_kl_invariants(table)
    return table


def to_kl_basis(table: KLTable, h: HeckeElt) -> dict[int, LaurentPoly]:
    """Greedy top-down conversion from the standard basis to the canonical basis."""
    W = table.W
    h = dict(h)
    out: dict[int, LaurentPoly] = {}
    for z in sorted(W.elements_by_length(), key=lambda z: -W.length[z]):
        c = h.get(z)
        if c:
            out[z] = c
            h = add(h, table.basis[z], -c)
    if h:
        raise ConversionResidue(f"nonzero remainder {h}")
    return out


class StructureConstants:
    """Memoised ``b_x b_y = sum_z c^z_{x,y} b_z``.

    For each ``y`` the products ``H_u b_y`` are built once by left
    multiplication along reduced words.
    """

    def __init__(self, table: KLTable):
        self.table = table
        self._hb: dict[int, list[HeckeElt]] = {}
        self._c: dict[tuple[int, int], dict[int, LaurentPoly]] = {}

    def _h_times_b(self, y: int) -> list[HeckeElt]:
        if y not in self._hb:
            W = self.table.W
            rows: list[HeckeElt] = [{}] * W.order
            rows[0] = dict(self.table.basis[y])
            for u in W.elements_by_length()[1:]:
                s = W.words[u][0]
                rows[u] = left_mul_s(W, s, rows[W.left[s][u]])
            self._hb[y] = rows
        return self._hb[y]

    def product(self, x: int, y: int) -> HeckeElt:
        rows = self._h_times_b(y)
        out: HeckeElt = {}
        for u, c in self.table.basis[x].items():
            out = add(out, rows[u], c)
        return out

    def __call__(self, x: int, y: int) -> dict[int, LaurentPoly]:
        key = (x, y)
        if key not in self._c:
            self._c[key] = to_kl_basis(self.table, self.product(x, y))
        return self._c[key]


def kl_structure_constants(W: CoxeterSystem, x: int, y: int, table: KLTable | None = None) -> dict[int, LaurentPoly]:
    table = table if table is not None else kl_table(W)
    return StructureConstants(table)(x, y)
