"""The decategorified Soergel 2-category of a finite Coxeter system."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NegativeStructureConstant
from ..projclass import classify_projectives
from ..twocat import Indecomposable1Mor, TwoCatPresentation, compose_sums, is_weakly_idempotent
from .coxeter import CoxeterSystem
from .hecke import KLTable, StructureConstants, kl_table

OBJECT = "i"


def onemor_id(W: CoxeterSystem, w: int) -> str:
    return f"B_{W.name(w)}"


def build_soergel_2cat(W: CoxeterSystem, table: KLTable | None = None) -> TwoCatPresentation:
    """One object; ``B_x o B_y = sum_z c^z_{x,y}(1) B_z``."""
    table = table if table is not None else kl_table(W)
    sc = StructureConstants(table)
    elems = W.elements_by_length()
    onemors = [Indecomposable1Mor(onemor_id(W, w), OBJECT, OBJECT, w == 0) for w in elems]
    comp: dict[tuple[str, str], dict[str, int]] = {}
    for x in elems:
        for y in elems:
            terms = {}
            for z, c in sc(x, y).items():
                if not c.has_nonnegative_coefficients() or not c.is_symmetric():
                    raise NegativeStructureConstant(
                        f"c^{W.name(z)}_{{{W.name(x)},{W.name(y)}}} = {c} is not a non-negative symmetric polynomial")
                terms[onemor_id(W, z)] = c.at_one()
            comp[(onemor_id(W, x), onemor_id(W, y))] = terms
    return TwoCatPresentation([OBJECT], onemors, comp)


@dataclass
class IdempotentScan:
    order: int
    projective_generators: list[str]
    weakly_idempotent: list[str]

    @property
    def ok(self) -> bool:
        return self.projective_generators == ["B_e"] and self.weakly_idempotent == ["B_e"]


def scan_soergel_idempotents(W: CoxeterSystem, P: TwoCatPresentation | None = None) -> IdempotentScan:
    P = P if P is not None else build_soergel_2cat(W)
    gens = [d.G for d in classify_projectives(P)]
    weak = [m.id for m in P.onemors if is_weakly_idempotent(P, P.single(m.id))]
    return IdempotentScan(W.order, gens, sorted(weak))


def verify_soergel_idempotents(W: CoxeterSystem, P: TwoCatPresentation | None = None) -> bool:
    """True iff the identity is the only weakly idempotent indecomposable."""
    return scan_soergel_idempotents(W, P).ok


def self_multiplicities(W: CoxeterSystem, P: TwoCatPresentation) -> dict[str, int]:
    """Multiplicity of ``B_w`` in ``B_w o B_w`` for every ``w``."""
    out = {}
    for w in W.elements_by_length():
        b = P.single(onemor_id(W, w))
        out[onemor_id(W, w)] = compose_sums(P, b, b)[onemor_id(W, w)]
    return out
