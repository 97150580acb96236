"""Decategorified finitary 2-categories.

A presentation lists objects, indecomposable 1-morphisms and, for every
composable pair ``(left, right)`` of indecomposables, the multiplicities of
the indecomposable summands of ``left o right``. Composition is written
right-to-left: ``right`` acts first, so ``src(left) == tgt(right)`` and the
composite runs from ``src(right)`` to ``tgt(left)``.

Isomorphism of 1-morphisms is multiset equality of their decompositions.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    InvalidPresentation,
    SubtractionUnderflow,
    TypeMismatch,
    UnknownMorphism,
    UnknownObject,
)


@dataclass(frozen=True)
class Indecomposable1Mor:
    id: str
    src: str
    tgt: str
    is_identity: bool = False


@dataclass(frozen=True)
class MorSum:
    """A formal direct sum of indecomposable 1-morphisms from ``src`` to ``tgt``.

    ``terms`` is kept sorted with positive multiplicities only; the empty sum
    is the zero 1-morphism.
    """

    src: str
    tgt: str
    terms: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        raw = self.terms.items() if isinstance(self.terms, Mapping) else self.terms
        acc: dict[str, int] = {}
        for name, mult in raw:
            if isinstance(mult, bool) or not isinstance(mult, int):
                raise TypeError(f"multiplicity of {name!r} must be an integer")
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for {name!r}")
            acc[name] = acc.get(name, 0) + mult
        object.__setattr__(self, "terms", tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def zero(cls, src: str, tgt: str) -> MorSum:
        return cls(src, tgt, ())

    def __getitem__(self, name: str) -> int:
        for k, v in self.terms:
            if k == name:
                return v
        return 0

    def __iter__(self) -> Iterator[tuple[str, int]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def as_dict(self) -> dict[str, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total(self) -> int:
        return sum(v for _, v in self.terms)

    def _same_type(self, other: MorSum) -> None:
        if (self.src, self.tgt) != (other.src, other.tgt):
            raise TypeMismatch(
                f"sums of different types: {self.src}->{self.tgt} vs {other.src}->{other.tgt}"
            )

    def __add__(self, other: MorSum) -> MorSum:
        self._same_type(other)
        acc = self.as_dict()
        for k, v in other.terms:
            acc[k] = acc.get(k, 0) + v
        return MorSum(self.src, self.tgt, acc)

    def __sub__(self, other: MorSum) -> MorSum:
        """Multiset difference; raises instead of clamping."""
        self._same_type(other)
        acc = self.as_dict()
        for k, v in other.terms:
            have = acc.get(k, 0)
            if have < v:
                raise SubtractionUnderflow(f"cannot remove {v} x {k} from {self}")
            acc[k] = have - v
        return MorSum(self.src, self.tgt, acc)

    def scaled(self, n: int) -> MorSum:
        return MorSum(self.src, self.tgt, {k: v * n for k, v in self.terms})

    def contains(self, other: MorSum) -> bool:
        self._same_type(other)
        return all(self[k] >= v for k, v in other.terms)

    def to_json(self) -> dict[str, int]:
        return dict(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(k if v == 1 else f"{v}{k}" for k, v in self.terms)


@dataclass
class ValidationReport:
    violations: list[tuple[str, str]] = field(default_factory=list)

    def add(self, kind: str, detail: str) -> None:
        self.violations.append((kind, detail))

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def kinds(self) -> set[str]:
        return {k for k, _ in self.violations}

    def lines(self) -> list[str]:
        return [f"{k}: {d}" for k, d in self.violations]


class TwoCatPresentation:
    """Objects, indecomposable 1-morphisms and a composition multiplicity table.

    The constructor is permissive: it records whatever it is given so that
    :func:`validate_presentation` can report every problem at once. Missing
    identity-law entries are synthesized; explicit entries are never
    overwritten.
    """

    def __init__(
        self,
        objects: Sequence[str],
        onemors: Sequence[Indecomposable1Mor],
        comp: Mapping[tuple[str, str], Mapping[str, int]] | None = None,
    ):
        self.objects: tuple[str, ...] = tuple(objects)
        self.onemors: tuple[Indecomposable1Mor, ...] = tuple(onemors)
        self.mor: dict[str, Indecomposable1Mor] = {}
        for m in self.onemors:
            self.mor.setdefault(m.id, m)
        self.identities: dict[str, str] = {}
        for m in self.onemors:
            if m.is_identity:
                self.identities.setdefault(m.src, m.id)
        self.explicit: dict[tuple[str, str], dict[str, int]] = {
            (l, r): {k: v for k, v in dict(res).items() if v} for (l, r), res in (comp or {}).items()
        }
        self.comp: dict[tuple[str, str], dict[str, int]] = dict(self.explicit)
        for m in self.onemors:
            if m.id not in self.mor or self.mor[m.id] is not m:
                continue
            left_ident = self.identities.get(m.tgt)
            if left_ident is not None:
                self.comp.setdefault((left_ident, m.id), {m.id: 1})
            right_ident = self.identities.get(m.src)
            if right_ident is not None:
                self.comp.setdefault((m.id, right_ident), {m.id: 1})

    def __repr__(self) -> str:
        return f"TwoCatPresentation(objects={list(self.objects)}, onemors={[m.id for m in self.onemors]})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwoCatPresentation):
            return NotImplemented
        return (
            self.objects == other.objects
            and sorted(self.onemors, key=lambda m: m.id) == sorted(other.onemors, key=lambda m: m.id)
            and self.comp == other.comp
        )

    def identity(self, obj: str) -> str:
        if obj not in self.objects:
            raise UnknownObject(obj)
        try:
            return self.identities[obj]
        except KeyError:
            raise InvalidPresentation(f"object {obj!r} has no identity 1-morphism") from None

    def get(self, mor_id: str) -> Indecomposable1Mor:
        try:
            return self.mor[mor_id]
        except KeyError:
            raise UnknownMorphism(mor_id) from None

    def composite(self, left: str, right: str) -> MorSum:
        """``left o right`` for two indecomposables (zero if absent from the table)."""
        L, R = self.get(left), self.get(right)
        if L.src != R.tgt:
            raise TypeMismatch(f"{left} o {right}: src({left})={L.src} but tgt({right})={R.tgt}")
        return MorSum(R.src, L.tgt, self.comp.get((left, right), {}))

    def sum(self, src: str, tgt: str, terms: Mapping[str, int] | Iterable[tuple[str, int]] = ()) -> MorSum:
        """Build a type-checked :class:`MorSum`."""
        s = MorSum(src, tgt, terms)
        for k, _ in s:
            m = self.get(k)
            if (m.src, m.tgt) != (src, tgt):
                raise TypeMismatch(f"{k} is {m.src}->{m.tgt}, expected {src}->{tgt}")
        return s

    def single(self, mor_id: str, mult: int = 1) -> MorSum:
        m = self.get(mor_id)
        return MorSum(m.src, m.tgt, {mor_id: mult})

    def identity_sum(self, obj: str) -> MorSum:
        return self.single(self.identity(obj))

    def zero(self, src: str, tgt: str) -> MorSum:
        return MorSum.zero(src, tgt)

    # serialization -------------------------------------------------------

    @classmethod
    def from_json(cls, data: Mapping) -> TwoCatPresentation:
        try:
            objects = list(data["objects"])
            identities = dict(data.get("identities", {}))
            raw_mors = list(data.get("onemorphisms", []))
            raw_comp = list(data.get("composition", []))
        except (KeyError, TypeError) as exc:
            raise InvalidPresentation(f"malformed presentation: {exc}") from None
        onemors = []
        listed = set()
        for entry in raw_mors:
            mid = entry["id"]
            listed.add(mid)
            onemors.append(
                Indecomposable1Mor(mid, entry["src"], entry["tgt"], identities.get(entry["src"]) == mid)
            )
        for obj, mid in identities.items():
            if mid not in listed:
                onemors.append(Indecomposable1Mor(mid, obj, obj, True))
        comp: dict[tuple[str, str], dict[str, int]] = {}
        for entry in raw_comp:
            key = (entry["left"], entry["right"])
            if key in comp:
                raise InvalidPresentation(f"duplicate composition entry {key}")
            comp[key] = dict(entry.get("result", {}))
        return cls(objects, onemors, comp)

    def to_json(self) -> dict:
        """Canonical form: identity-law entries that match the synthesized ones are omitted."""
        composition = []
        for (l, r), res in sorted(self.explicit.items()):
            if not res:
                continue
            L, R = self.mor.get(l), self.mor.get(r)
            trivial = (L is not None and L.is_identity and res == {r: 1}) or (
                R is not None and R.is_identity and res == {l: 1}
            )
            if trivial:
                continue
            composition.append({"left": l, "right": r, "result": dict(sorted(res.items()))})
        return {
            "objects": list(self.objects),
            "identities": dict(sorted(self.identities.items())),
            "onemorphisms": [
                {"id": m.id, "src": m.src, "tgt": m.tgt} for m in self.onemors if not m.is_identity
            ],
            "composition": composition,
        }

    @classmethod
    def load(cls, path) -> TwoCatPresentation:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def dumps(self) -> str:
        return dumps(self.to_json())


def dumps(data) -> str:
    """Canonical JSON used for every file this package writes."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def compose_sums(P: TwoCatPresentation, f: MorSum, g: MorSum) -> MorSum:
    """``f o g`` extended bilinearly (``g`` acts first)."""
    if f.src != g.tgt:
        raise TypeMismatch(f"cannot compose {f.src}->{f.tgt} after {g.src}->{g.tgt}")
    table = P.comp
    acc: dict[str, int] = {}
    for F, a in f:
        for G, b in g:
            res = table.get((F, G))
            if res:
                for H, c in res.items():
                    acc[H] = acc.get(H, 0) + a * b * c
    return MorSum(g.src, f.tgt, acc)


def is_weakly_idempotent(P: TwoCatPresentation, f: MorSum) -> bool:
    if f.src != f.tgt:
        raise TypeMismatch(f"weak idempotency needs an endomorphism, got {f.src}->{f.tgt}")
    return not f.is_zero and compose_sums(P, f, f) == f


def indecomposables_between(P: TwoCatPresentation, i: str, j: str) -> list[Indecomposable1Mor]:
    """Indecomposables from ``i`` to ``j``, sorted by id."""
    for obj in (i, j):
        if obj not in P.objects:
            raise UnknownObject(obj)
    return sorted((m for m in P.mor.values() if m.src == i and m.tgt == j), key=lambda m: m.id)


def indecomposables_from(P: TwoCatPresentation, i: str) -> list[Indecomposable1Mor]:
    """Indecomposables with source ``i``, sorted by id."""
    if i not in P.objects:
        raise UnknownObject(i)
    return sorted((m for m in P.mor.values() if m.src == i), key=lambda m: m.id)


def validate_presentation(P: TwoCatPresentation) -> ValidationReport:
    report = ValidationReport()
    objs = set()
    for o in P.objects:
        if not isinstance(o, str) or not o:
            report.add("bad-object", f"object name {o!r} is not a non-empty string")
        if o in objs:
            report.add("duplicate-object", o)
        objs.add(o)

    seen: set[str] = set()
    idents_per_obj: dict[str, list[str]] = {o: [] for o in objs}
    for m in P.onemors:
        if not isinstance(m.id, str) or not m.id:
            report.add("bad-id", f"1-morphism id {m.id!r} is not a non-empty string")
        if m.id in seen:
            report.add("duplicate-id", m.id)
        seen.add(m.id)
        for end in (m.src, m.tgt):
            if end not in objs:
                report.add("unknown-object", f"{m.id} refers to {end!r}")
        if m.is_identity:
            if m.src != m.tgt:
                report.add("identity-type", f"identity {m.id} is {m.src}->{m.tgt}")
            elif m.src in idents_per_obj:
                idents_per_obj[m.src].append(m.id)
    for o in sorted(objs):
        ids = idents_per_obj[o]
        if not ids:
            report.add("missing-identity", o)
        elif len(ids) > 1:
            report.add("multiple-identities", f"{o}: {', '.join(ids)}")

    table_ok = True
    for (l, r), res in sorted(P.explicit.items()):
        L, R = P.mor.get(l), P.mor.get(r)
        if L is None or R is None:
            report.add("unknown-morphism", f"composition entry ({l}, {r})")
            table_ok = False
            continue
        if L.src != R.tgt:
            report.add("not-composable", f"({l}, {r}): src({l})={L.src}, tgt({r})={R.tgt}")
            table_ok = False
            continue
        for H, mult in res.items():
            M = P.mor.get(H)
            if M is None:
                report.add("unknown-morphism", f"{H} in result of ({l}, {r})")
                table_ok = False
            elif (M.src, M.tgt) != (R.src, L.tgt):
                report.add(
                    "result-type", f"{H} ({M.src}->{M.tgt}) in {l} o {r} ({R.src}->{L.tgt})"
                )
                table_ok = False
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
                report.add("bad-multiplicity", f"{H}: {mult!r} in ({l}, {r})")
                table_ok = False

    if not report.ok and not table_ok:
        return report
    if any(k in report.kinds() for k in ("duplicate-id", "unknown-object", "identity-type")):
        return report

    for m in sorted(P.mor.values(), key=lambda m: m.id):
        for obj, left_side in ((m.tgt, True), (m.src, False)):
            ident = P.identities.get(obj)
            if ident is None:
                continue
            got = P.composite(ident, m.id) if left_side else P.composite(m.id, ident)
            if got.as_dict() != {m.id: 1}:
                pair = f"{ident} o {m.id}" if left_side else f"{m.id} o {ident}"
                report.add("identity-law", f"{pair} = {got}, expected {m.id}")

    by_tgt: dict[str, list[str]] = {}
    for m in P.mor.values():
        by_tgt.setdefault(m.tgt, []).append(m.id)
    for F in sorted(P.mor):
        for G in sorted(by_tgt.get(P.mor[F].src, [])):
            FG = P.composite(F, G)
            for H in sorted(by_tgt.get(P.mor[G].src, [])):
                left = compose_sums(P, P.single(F), compose_sums(P, P.single(G), P.single(H)))
                right = compose_sums(P, FG, P.single(H))
                if left != right:
                    report.add("associativity", f"({F}, {G}, {H}): {left} != {right}")
    return report


def all_sums(P: TwoCatPresentation, src: str, tgt: str, max_total: int) -> Iterator[MorSum]:
    """Every MorSum from ``src`` to ``tgt`` with total multiplicity at most ``max_total``."""
    ids = [m.id for m in indecomposables_between(P, src, tgt)]
    for total in range(max_total + 1):
        for combo in itertools.combinations_with_replacement(ids, total):
            acc: dict[str, int] = {}
            for k in combo:
                acc[k] = acc.get(k, 0) + 1
            yield MorSum(src, tgt, acc)
