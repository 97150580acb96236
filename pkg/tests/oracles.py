"""Independent reference computations used to cross-check the library.

Nothing here calls the code under test except to read group structure
(lengths, multiplication tables) where noted.
"""

from __future__ import annotations

import itertools


# Coxeter groups --------------------------------------------------------------


def symmetric_group_lengths(n: int) -> list[int]:
    """Inversion counts of all permutations of ``n`` letters (type A_{n-1})."""
    out = []
    for p in itertools.permutations(range(n)):
        out.append(sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j]))
    return sorted(out)


def dihedral_lengths(m: int) -> list[int]:
    """Lengths in the dihedral group of order 2m: 1, 2, 2, ..., 2, 1."""
    return sorted([0, m] + [k for k in range(1, m) for _ in range(2)])


def subword_bruhat(W) -> set[tuple[int, int]]:
    """``x <= w`` iff ``x`` is a product of a subword of a reduced word of ``w``."""
    rel = set()
    for w in range(W.order):
        word = W.words[w]
        for mask in range(1 << len(word)):
            x = 0
            for pos, s in enumerate(word):
                if mask >> pos & 1:
                    x = W.right[x][s]
            rel.add((x, w))
    return rel


# Kazhdan-Lusztig polynomials (classical normalization) ---------------------


def _padd(a: dict, b: dict, scale: int = 1, shift: int = 0) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e + shift] = out.get(e + shift, 0) + scale * c
        if out[e + shift] == 0:
            del out[e + shift]
    return out


def classical_kl(W, leq) -> dict[tuple[int, int], dict[int, int]]:
    """``P_{x,w}(q)`` as ``{power: coeff}`` by the original recursion.

    For ``s w < w`` and ``v = s w``::

        P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
                  - sum_{z < v, s z < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}

    with ``c = 1`` if ``s x < x`` else 0, and ``mu`` the coefficient of
    ``q^{(l(v)-l(z)-1)/2}`` in ``P_{z,v}``.
    """
    L = W.length
    order = sorted(range(W.order), key=lambda w: L[w])
    P: dict[tuple[int, int], dict[int, int]] = {}

    def get(x, w):
        return P.get((x, w), {})

    def mu(z, v):
        d = L[v] - L[z] - 1
        if d < 0 or d % 2:
            return 0
        return get(z, v).get(d // 2, 0)

    for w in order:
        if w == 0:
            P[(0, 0)] = {0: 1}
            continue
        s = next(t for t in range(W.rank) if L[W.left[t][w]] < L[w])
        v = W.left[s][w]
        for x in order:
            if not leq(x, w):
                continue
            sx = W.left[s][x]
            c = 1 if L[sx] < L[x] else 0
            poly = _padd({}, get(sx, v), shift=1 - c)
            poly = _padd(poly, get(x, v), shift=c)
            for z in order:
                if L[W.left[s][z]] < L[z] and leq(x, z) and z != v and leq(z, v):
                    m = mu(z, v)
                    if m:
                        poly = _padd(poly, get(x, z), scale=-m, shift=(L[w] - L[z]) // 2)
            P[(x, w)] = poly
    return P


def h_from_classical(P: dict[int, int], lw: int, lx: int) -> dict[int, int]:
    """``h_{x,w} = v^{l(w)-l(x)} P_{x,w}(v^-2)``."""
    return {lw - lx - 2 * e: c for e, c in P.items()}


# Hecke algebra products by right multiplication ------------------------------


def hecke_product(W, a: dict, b: dict) -> dict:
    """``a * b`` in the standard basis, multiplying ``a`` on the right by the
    reduced words of the terms of ``b``. Polynomials are ``{exp: coeff}``."""
    out: dict = {}
    for y, cy in b.items():
        cur = {x: dict(c) for x, c in a.items()}
        for s in W.words[y]:
            nxt: dict = {}
            for x, c in cur.items():
                xs = W.right[x][s]
                nxt[xs] = _padd(nxt.get(xs, {}), c)
                if W.length[xs] < W.length[x]:
                    nxt[x] = _padd(nxt.get(x, {}), c, shift=-1)
                    nxt[x] = _padd(nxt[x], c, scale=-1, shift=1)
            cur = {x: c for x, c in nxt.items() if c}
        for x, c in cur.items():
            prod: dict = {}
            for e1, c1 in c.items():
                for e2, c2 in cy.items():
                    prod[e1 + e2] = prod.get(e1 + e2, 0) + c1 * c2
            out[x] = _padd(out.get(x, {}), prod)
    return {x: c for x, c in out.items() if c}
