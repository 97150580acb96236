"""Regenerate fixtures/ through the package serializers (canonical JSON)."""

from pathlib import Path

from twomorita.catalog import disjoint_objects, idempotent_functor, square_to_idempotent
from twomorita.endodecomp import EndoMatrix, is_idempotent_endo
from twomorita.projfun import Arrow, QuiverAlgebra
from twomorita.soergel.coxeter import TYPES, build_coxeter
from twomorita.twocat import dumps

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def quivers() -> dict[str, QuiverAlgebra]:
    field = QuiverAlgebra(["1"], [])
    dual = QuiverAlgebra(["1"], [Arrow("x", "1", "1")], [["x", "x"]])
    path = QuiverAlgebra(["1", "2"], [Arrow("a", "1", "2")])
    return {
        "C": field,
        "CplusC": QuiverAlgebra(["1", "2"], []),
        "cx2": dual,
        "cx2_plus_c": QuiverAlgebra(["1", "2"], [Arrow("x", "1", "1")], [["x", "x"]]),
        "cx2_plus_2c": QuiverAlgebra(["1", "2", "3"], [Arrow("x", "1", "1")], [["x", "x"]]),
        "path12": path,
        "path12_plus_c": QuiverAlgebra(["1", "2", "3"], [Arrow("a", "1", "2")]),
        "path123_rad2": QuiverAlgebra(
            ["1", "2", "3"], [Arrow("a", "1", "2"), Arrow("b", "2", "3")], [["a", "b"]]
        ),
    }


def endos():
    P72, P71 = square_to_idempotent(), idempotent_functor()
    fk = {"F": 1, "K": 1}
    return {
        "ex72_endo": EndoMatrix(P72, ["i", "i"], [[fk, fk], [{}, {}]]),
        "ex72_endo_offdiag": EndoMatrix(P72, ["i", "i"], [[{"1_i": 1}, {"K": 1}], [{}, {}]]),
        "ex71_endo": EndoMatrix(P71, ["i", "i"], [[{"F": 1}, {"F": 1}], [{}, {}]]),
    }


def main() -> None:
    OUT.mkdir(exist_ok=True)
    files = {
        "flor_77.json": [[0, 1, 1], [0, 1, 1], [0, 0, 0]],
        "ex72.json": square_to_idempotent().to_json(),
        "ex71.json": idempotent_functor().to_json(),
        "two_objects.json": disjoint_objects().to_json(),
    }
    for name, A in quivers().items():
        files[f"{name}.json"] = A.to_json()
    for name, phi in endos().items():
        assert is_idempotent_endo(phi), name
        files[f"{name}.json"] = phi.to_json()
    for name, (m, gens) in TYPES.items():
        files[f"{name}.json"] = build_coxeter(m, gens).to_json()
    for name, data in sorted(files.items()):
        (OUT / name).write_text(dumps(data), encoding="utf-8")
        print(name)


if __name__ == "__main__":
    main()
