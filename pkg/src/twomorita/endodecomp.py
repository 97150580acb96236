"""Endomorphisms of direct sums of principal 2-representations.

An endomorphism of ``P_{i_1} + ... + P_{i_k}`` is right multiplication by a
k x k matrix of 1-morphisms. ``entries[r][s]`` runs from ``i_s`` to ``i_r``;
a tuple ``(F_r)`` with ``F_r`` leaving ``i_r`` is sent to the tuple whose
s-th component is ``sum_r F_r o entries[r][s]``.

:func:`endo_compose` ``(phi, psi)`` is "phi first, then psi" and is the plain
matrix product ``phi . psi`` with entrywise composition. With that
convention ``M(phi) @ M(psi) == M(endo_compose(phi, psi))``.

The identities checked in :func:`verify_idempotent_identities` are written
in functional order, so ``XY`` there means "Y first, then X", i.e.
``endo_compose(Y, X)``. :func:`fprod` does that translation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    InternalDisagreement,
    MultiplicityViolated,
    NotIdempotent,
    SubtractionUnderflow,
    SummandMismatch,
    TypeMismatch,
    UniquenessViolated,
)
from .nnimat import NNIMatrix, flor_normal_form
from .twocat import MorSum, TwoCatPresentation, all_sums, compose_sums, indecomposables_from


class EndoMatrix:
    def __init__(self, presentation: TwoCatPresentation, summands: Sequence[str], entries):
        self.presentation = presentation
        self.summands: tuple[str, ...] = tuple(summands)
        k = len(self.summands)
        rows = []
        if len(entries) != k:
            raise SummandMismatch(f"expected {k} rows, got {len(entries)}")
        for r, row in enumerate(entries):
            if len(row) != k:
                raise SummandMismatch(f"row {r} has {len(row)} entries, expected {k}")
            out = []
            for s, e in enumerate(row):
                src, tgt = self.summands[s], self.summands[r]
                if isinstance(e, MorSum):
                    if (e.src, e.tgt) != (src, tgt):
                        raise TypeMismatch(f"entry [{r}][{s}] is {e.src}->{e.tgt}, expected {src}->{tgt}")
                    presentation.sum(src, tgt, e.terms)
                else:
                    e = presentation.sum(src, tgt, e)
                out.append(e)
            rows.append(tuple(out))
        self.entries: tuple[tuple[MorSum, ...], ...] = tuple(rows)

    @property
    def k(self) -> int:
        return len(self.summands)

    def __getitem__(self, rs: tuple[int, int]) -> MorSum:
        r, s = rs
        return self.entries[r][s]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoMatrix):
            return NotImplemented
        return (
            self.presentation is other.presentation
            and self.summands == other.summands
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.summands, self.entries))

    def __add__(self, other: EndoMatrix) -> EndoMatrix:
        self._check_compatible(other)
        return self._map2(other, lambda x, y: x + y)

    def __sub__(self, other: EndoMatrix) -> EndoMatrix:
        self._check_compatible(other)
        return self._map2(other, lambda x, y: x - y)

    def _map2(self, other, fn) -> EndoMatrix:
        k = self.k
        return EndoMatrix(
            self.presentation,
            self.summands,
            [[fn(self.entries[r][s], other.entries[r][s]) for s in range(k)] for r in range(k)],
        )

    def _check_compatible(self, other: EndoMatrix) -> None:
        if self.presentation is not other.presentation or self.summands != other.summands:
            raise SummandMismatch("endomorphisms of different direct sums")

    def contains(self, other: EndoMatrix) -> bool:
        self._check_compatible(other)
        return all(
            self.entries[r][s].contains(other.entries[r][s]) for r in range(self.k) for s in range(self.k)
        )

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.entries for e in row)

    @classmethod
    def zero(cls, P: TwoCatPresentation, summands: Sequence[str]) -> EndoMatrix:
        return cls(P, summands, [[MorSum.zero(s, r) for s in summands] for r in summands])

    @classmethod
    def identity(cls, P: TwoCatPresentation, summands: Sequence[str]) -> EndoMatrix:
        return cls(
            P,
            summands,
            [
                [P.identity_sum(r) if a == b else MorSum.zero(s, r) for b, s in enumerate(summands)]
                for a, r in enumerate(summands)
            ],
        )

    def to_json(self) -> dict:
        return {
            "summands": list(self.summands),
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, P: TwoCatPresentation, data: Mapping) -> EndoMatrix:
        return cls(P, data["summands"], [[dict(e) for e in row] for row in data["entries"]])

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"EndoMatrix({list(self.summands)}, [{body}])"

    def pretty(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + " | ".join(c.ljust(width) for c in row) + " ]" for row in cells)


def endo_compose(phi: EndoMatrix, psi: EndoMatrix) -> EndoMatrix:
    """``phi`` first, then ``psi``."""
    phi._check_compatible(psi)
    P, k = phi.presentation, phi.k
    out = []
    for r in range(k):
        row = []
        for t in range(k):
            acc = MorSum.zero(phi.summands[t], phi.summands[r])
            for s in range(k):
                acc = acc + compose_sums(P, phi.entries[r][s], psi.entries[s][t])
            row.append(acc)
        out.append(row)
    return EndoMatrix(P, phi.summands, out)


def fprod(*factors: EndoMatrix) -> EndoMatrix:
    """Functional-order product: ``fprod(X, Y, Z)`` applies Z, then Y, then X."""
    result = factors[-1]
    for f in reversed(factors[:-1]):
        result = endo_compose(result, f)
    return result


def matrix_index(phi: EndoMatrix) -> list[tuple[int, str]]:
    """Row/column labels of the multiplicity matrix: (block, 1-morphism id)."""
    P = phi.presentation
    return [(r, m.id) for r, obj in enumerate(phi.summands) for m in indecomposables_from(P, obj)]


def multiplicity_matrix(phi: EndoMatrix) -> NNIMatrix:
    P = phi.presentation
    index = matrix_index(phi)
    pos = {lab: n for n, lab in enumerate(index)}
    size = len(index)
    rows = [[0] * size for _ in range(size)]
    for n, (r, F) in enumerate(index):
        for s in range(phi.k):
            image = compose_sums(P, P.single(F), phi.entries[r][s])
            for G, mult in image:
                rows[n][pos[(s, G)]] += mult
    return NNIMatrix(size, size, tuple(tuple(r) for r in rows))


def is_idempotent_endo(phi: EndoMatrix) -> bool:
    by_entries = endo_compose(phi, phi) == phi
    M = multiplicity_matrix(phi)
    by_matrix = M @ M == M
    if by_entries != by_matrix:
        raise InternalDisagreement(
            f"entrywise idempotency {by_entries} but multiplicity-matrix idempotency {by_matrix}"
        )
    return by_entries


@dataclass(frozen=True)
class Witness:
    """Data attached to one nonzero diagonal entry of the multiplicity matrix."""

    F: str
    G: str
    Q: MorSum
    block: int


@dataclass
class GammaThetaPi:
    gamma: EndoMatrix
    theta: EndoMatrix
    pi: EndoMatrix
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def nontrivial(self) -> bool:
        return not (self.theta.is_zero and self.pi.is_zero)


def _diag_endo(phi: EndoMatrix, diag: dict[int, MorSum]) -> EndoMatrix:
    k = phi.k
    return EndoMatrix(
        phi.presentation,
        phi.summands,
        [
            [diag.get(r, MorSum.zero(phi.summands[r], phi.summands[r])) if r == s
             else MorSum.zero(phi.summands[s], phi.summands[r]) for s in range(k)]
            for r in range(k)
        ],
    )


def gamma_theta_pi(phi: EndoMatrix) -> GammaThetaPi:
    """Split an idempotent endomorphism into its diagonal, square-defect and nilpotent parts."""
    if phi.is_zero:
        raise NotIdempotent("the zero endomorphism has no decomposition")
    if not is_idempotent_endo(phi):
        raise NotIdempotent("phi o phi != phi")
    P = phi.presentation
    M = multiplicity_matrix(phi)
    index = matrix_index(phi)

    witnesses = []
    gamma_diag: dict[int, dict[str, int]] = {}
    for n, (r, F) in enumerate(index):
        if M[n, n] == 0:
            continue
        if M[n, n] != 1:
            raise MultiplicityViolated(f"diagonal entry for {F} in block {r} is {M[n, n]}")
        hits = []
        for G, mult in phi.entries[r][r]:
            m = compose_sums(P, P.single(F), P.single(G))[F]
            if m:
                hits.append((G, mult, m))
        if len(hits) != 1 or hits[0][1] != 1:
            raise UniquenessViolated(f"{F} in block {r}: summands sending it to itself: {hits}")
        G, _, m = hits[0]
        if m != 1:
            raise MultiplicityViolated(f"{F} appears {m} times in {F} o {G}")
        GG = compose_sums(P, P.single(G), P.single(G))
        try:
            Q = GG - P.single(G)
        except SubtractionUnderflow:
            raise MultiplicityViolated(f"{G} is not a summand of {G} o {G}") from None
        witnesses.append(Witness(F, G, Q, r))
        gamma_diag.setdefault(r, {})[G] = 1

    gamma = _diag_endo(phi, {r: P.sum(phi.summands[r], phi.summands[r], d) for r, d in gamma_diag.items()})
    gamma_sq = endo_compose(gamma, gamma)
    if not gamma_sq.contains(gamma):
        raise SubtractionUnderflow("gamma is not contained in gamma^2")
    theta = gamma_sq - gamma
    if not phi.contains(gamma + theta):
        raise SubtractionUnderflow("gamma + theta is not contained in phi")
    pi = phi - gamma - theta
    return GammaThetaPi(gamma, theta, pi, witnesses)


@dataclass
class IdentityReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def lines(self) -> list[str]:
        return [f"{'PASS' if ok else 'FAIL'} {name}" + (f"  ({d})" if d and not ok else "")
                for name, ok, d in self.checks]


IDENTITY_NAMES = (
    "G_i Q_i = Q_i G_i = 0 and phi(Q_i) = 0",
    "G_i G_j = 0 for distinct G_i, G_j in one block",
    "phi theta = 0",
    "gamma pi gamma = theta pi = gamma pi^2 = pi^2 gamma = 0",
    "pi = gamma pi + pi gamma + pi^2",
    "pi^3 = 0",
    "pi^2 = pi gamma pi",
    "(gamma + theta)^2 = gamma + theta",
    "(gamma + theta + pi gamma)^2 = gamma + theta + pi gamma",
    "(gamma + theta + pi gamma)(gamma + theta) = gamma + theta + pi gamma",
    "(gamma + theta)(gamma + theta + pi gamma) = gamma + theta",
    "phi (gamma + theta + pi gamma) = gamma + theta + pi gamma",
    "(gamma + theta + pi gamma) phi = phi",
)


def verify_idempotent_identities(phi: EndoMatrix, decomposition: GammaThetaPi | None = None) -> IdentityReport:
    """Check every identity satisfied by the pieces of an idempotent endomorphism.

    Products are in functional order (see :func:`fprod`). Each identity is an
    exact equality of matrices of multisets.
    """
    d = decomposition or gamma_theta_pi(phi)
    P = phi.presentation
    gam, the, pi = d.gamma, d.theta, d.pi
    zero = EndoMatrix.zero(P, phi.summands)
    report = IdentityReport()
    names = iter(IDENTITY_NAMES)

    bad = []
    for w in d.witnesses:
        G = P.single(w.G)
        if not compose_sums(P, G, w.Q).is_zero:
            bad.append(f"{w.G} o Q != 0")
        if not compose_sums(P, w.Q, G).is_zero:
            bad.append(f"Q o {w.G} != 0")
        if any(not compose_sums(P, w.Q, phi.entries[w.block][s]).is_zero for s in range(phi.k)):
            bad.append(f"phi(Q) != 0 for {w.G} in block {w.block}")
    report.record(next(names), not bad, "; ".join(bad))

    # Only G's from the same diagonal block must annihilate each other:
    # diag(F, 1) is idempotent whenever F is, yet F o 1 = F.
    bad = []
    per_block: dict[int, set[str]] = {}
    for w in d.witnesses:
        per_block.setdefault(w.block, set()).add(w.G)
    for r, gs in sorted(per_block.items()):
        for Gi in sorted(gs):
            for Gj in sorted(gs):
                if Gi != Gj and not compose_sums(P, P.single(Gi), P.single(Gj)).is_zero:
                    bad.append(f"{Gi} o {Gj} != 0 in block {r}")
    report.record(next(names), not bad, "; ".join(bad))

    report.record(next(names), fprod(phi, the) == zero)

    parts = {
        "gamma pi gamma": fprod(gam, pi, gam),
        "theta pi": fprod(the, pi),
        "gamma pi^2": fprod(gam, pi, pi),
        "pi^2 gamma": fprod(pi, pi, gam),
    }
    nonzero = [k for k, v in parts.items() if v != zero]
    report.record(next(names), not nonzero, ", ".join(nonzero))

    pi2 = fprod(pi, pi)
    gpi, pig = fprod(gam, pi), fprod(pi, gam)
    report.record(next(names), pi == gpi + pig + pi2)
    report.record(next(names), fprod(pi, pi, pi) == zero)
    report.record(next(names), pi2 == fprod(pi, gam, pi))

    gt = gam + the
    gtp = gt + pig
    report.record(next(names), fprod(gt, gt) == gt)
    report.record(next(names), fprod(gtp, gtp) == gtp)
    report.record(next(names), fprod(gtp, gt) == gtp)
    report.record(next(names), fprod(gt, gtp) == gt)
    report.record(next(names), fprod(phi, gtp) == gtp)
    report.record(next(names), fprod(gtp, phi) == phi)
    return report


def random_endomatrix(
    P: TwoCatPresentation,
    summands: Sequence[str],
    rng: random.Random,
    max_total: int = 3,
    zero_weight: float = 0.5,
) -> EndoMatrix:
    """Random EndoMatrix; each entry is zero with probability ``zero_weight``,
    otherwise uniform among nonzero sums of total multiplicity <= ``max_total``."""
    pools: dict[tuple[str, str], list[MorSum]] = {}
    rows = []
    for tgt in summands:
        row = []
        for src in summands:
            pool = pools.get((src, tgt))
            if pool is None:
                pool = [s for s in all_sums(P, src, tgt, max_total) if not s.is_zero]
                pools[(src, tgt)] = pool
            if not pool or rng.random() < zero_weight:
                row.append(MorSum.zero(src, tgt))
            else:
                row.append(rng.choice(pool))
        rows.append(row)
    return EndoMatrix(P, summands, rows)


def search_idempotents(
    P: TwoCatPresentation,
    trials: int,
    rng: random.Random,
    max_k: int = 3,
    max_total: int = 3,
) -> list[EndoMatrix]:
    """Random search for distinct nonzero idempotent EndoMatrices, in discovery order."""
    found: dict[EndoMatrix, None] = {}
    objects = list(P.objects)
    for _ in range(trials):
        k = rng.randint(1, max_k)
        summands = [rng.choice(objects) for _ in range(k)]
        phi = random_endomatrix(P, summands, rng, max_total, zero_weight=rng.choice((0.3, 0.5, 0.7)))
        if not phi.is_zero and is_idempotent_endo(phi):
            found.setdefault(phi, None)
    return list(found)


def flor_of_endo(phi: EndoMatrix):
    """Flor block form of the multiplicity matrix of an idempotent endomorphism."""
    return flor_normal_form(multiplicity_matrix(phi))


def enumerate_idempotents(P: TwoCatPresentation, summands: Sequence[str], max_total: int = 2) -> list[EndoMatrix]:
    """Every nonzero idempotent EndoMatrix on ``summands`` whose entries have
    total multiplicity <= ``max_total``, in enumeration order."""
    k = len(summands)
    pools = [
        [list(all_sums(P, summands[s], summands[r], max_total)) for s in range(k)]
        for r in range(k)
    ]
    cells = [pools[r][s] for r in range(k) for s in range(k)]
    out = []
    for choice in itertools.product(*cells):
        rows = [list(choice[r * k:(r + 1) * k]) for r in range(k)]
        phi = EndoMatrix(P, summands, rows)
        if not phi.is_zero and is_idempotent_endo(phi):
            out.append(phi)
    return out
