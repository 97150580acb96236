"""Command-line interface.

Every command returns a :class:`CommandResult`; :func:`main` prints the report
and exits with its code (0 success, 1 domain error, 2 usage error). Reports
contain no timestamps and iterate in sorted or input order only.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from .endodecomp import (
    EndoMatrix,
    gamma_theta_pi,
    is_idempotent_endo,
    multiplicity_matrix,
    search_idempotents,
    verify_idempotent_identities,
)
from .errors import InvalidPresentation, NotIdempotent, ParseError, TwoMoritaError
from .nnimat import NNIMatrix, flor_normal_form, verify_flor
from .projclass import classify_projectives, essential_objects, mutual_witness_pairs, preorder
from .projfun import build_projfun_2cat, dim_one_pair, load_quiver, morita_bfs_equivalent, morita_normal_form
from .soergel import DEFAULT_CAP, build_soergel_2cat, kl_table, load_coxeter, scan_soergel_idempotents
from .twocat import TwoCatPresentation, dumps, validate_presentation


@dataclass
class CommandResult:
    exit_code: int
    report: str
    output_file: str | None = None


class UsageError(Exception):
    def __init__(self, message: str, status: int = 2):
        super().__init__(message)
        self.status = status


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")

    def exit(self, status=0, message=None):
        # --help prints through argparse itself and exits 0
        raise UsageError(message or "", status)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _json(path: str):
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def _presentation(path: str, check: bool = True) -> TwoCatPresentation:
    data = _json(path)
    try:
        P = TwoCatPresentation.from_json(data)
    except (KeyError, TypeError, AttributeError) as exc:
        raise InvalidPresentation(f"{path}: malformed presentation: {exc!r}") from None
    if check:
        report = validate_presentation(P)
        if not report.ok:
            raise InvalidPresentation(f"{path}: " + "; ".join(report.lines()[:5]))
    return P


def _render(data: dict, fmt: str, text_lines: list[str]) -> str:
    if fmt == "json":
        return dumps(data)
    return "\n".join(text_lines) + "\n"


# commands ------------------------------------------------------------------


def cmd_validate(args) -> tuple[dict, list[str]]:
    P = _presentation(args.presentation, check=False)
    report = validate_presentation(P)
    data = {"valid": report.ok, "violations": [{"kind": k, "detail": d} for k, d in report.violations]}
    lines = ["valid" if report.ok else "invalid"] + report.lines()
    return data, lines


def cmd_flor(args):
    try:
        M = NNIMatrix.from_json(_json(args.matrix))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    form = flor_normal_form(M)
    ok = verify_flor(M, form)
    data = {"input": M.to_json(), "form": form.to_json(), "verified": ok}
    lines = [
        f"block sizes: a={form.a} b={form.b} c={form.c}",
        f"permutation: {list(form.perm)}",
        "A =", str(form.blockA) if form.a and form.b else "[]",
        "B =", str(form.blockB) if form.b and form.c else "[]",
        "permuted matrix:", str(form.block_matrix()),
        f"block equations verified: {'yes' if ok else 'no'}",
    ]
    return data, lines


def cmd_decompose(args):
    P = _presentation(args.presentation)
    try:
        phi = EndoMatrix.from_json(P, _json(args.endo))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed endomorphism: {exc!r}") from None
    if not is_idempotent_endo(phi):
        raise NotIdempotent("the endomorphism is not idempotent")
    dec = gamma_theta_pi(phi)
    checks = verify_idempotent_identities(phi, dec)
    M = multiplicity_matrix(phi)
    form = flor_normal_form(M)
    data = {
        "multiplicity_matrix": M.to_json(),
        "flor": form.to_json(),
        "gamma": dec.gamma.to_json(),
        "theta": dec.theta.to_json(),
        "pi": dec.pi.to_json(),
        "witnesses": [{"F": w.F, "G": w.G, "Q": w.Q.to_json(), "block": w.block} for w in dec.witnesses],
        "checks": [{"name": n, "ok": ok} for n, ok, _ in checks.checks],
        "all_checks_pass": checks.ok,
    }
    lines = ["multiplicity matrix:", str(M), f"flor block sizes: a={form.a} b={form.b} c={form.c}"]
    for name, part in (("Gamma", dec.gamma), ("Theta", dec.theta), ("Pi", dec.pi)):
        lines += [f"{name} =", part.pretty()]
    lines += [f"witness block {w.block}: F={w.F} G={w.G} Q={w.Q}" for w in dec.witnesses]
    lines += checks.lines()
    return data, lines


def cmd_projectives(args):
    P = _presentation(args.presentation)
    ds = classify_projectives(P)
    pairs = mutual_witness_pairs(P, ds)
    data = {
        "descriptors": [d.to_json() for d in ds],
        "advisory_mutual_pairs": [{"a": a, "b": b, "phi": f, "psi": g} for a, b, f, g in pairs],
    }
    lines = [f"{len(ds)} indecomposable projective 2-representation(s)"]
    lines += [f"[{n}] object={d.object} G={d.G} Q={d.Q} E={d.E}" for n, d in enumerate(ds)]
    lines += [f"advisory: [{a}] and [{b}] admit mutual sandwiches via {f}, {g}" for a, b, f, g in pairs]
    return data, lines


def cmd_essential(args):
    P = _presentation(args.presentation)
    rel = preorder(P)
    ess = essential_objects(P)
    data = {
        "preorder": [{"i": i, "j": j, "witness": list(w) if w else None} for (i, j), w in rel.items()],
        "essential": ess,
    }
    lines = [f"{i} <= {j} via {w[0]} o {w[1]}" for (i, j), w in rel.items() if w]
    lines.append("essential objects: " + ", ".join(ess))
    return data, lines


def cmd_projfun_build(args):
    A = load_quiver(_read(args.quiver))
    P = build_projfun_2cat(A)
    return _emit_presentation(args, P, f"dim A = {A.dim}, {len(P.objects)} object(s)")


def cmd_projfun_morita(args):
    A = load_quiver(_read(args.first))
    B = load_quiver(_read(args.second))
    na, nb = morita_normal_form(A), morita_normal_form(B)
    verdict = "equivalent" if na == nb else "inequivalent"
    pairs = [dim_one_pair(A), dim_one_pair(B)]
    data = {
        "verdict": verdict,
        "normal_forms": [na.to_json(), nb.to_json()],
        "dim_one_pairs": [list(p) if p else None for p in pairs],
    }
    lines = [verdict]
    for n, (nf, p) in enumerate(zip((na, nb), pairs), 1):
        lines.append(f"normal form {n}: {json.dumps(nf.to_json(), sort_keys=True)}")
        lines.append(f"dim-1 vertex pair {n}: " + (f"dim e_{p[1]} A e_{p[0]} = 1" if p else "none"))
    if args.oracle:
        bfs = morita_bfs_equivalent(A, B)
        data["oracle_agrees"] = bfs == (na == nb)
        lines.append(f"search oracle agrees: {'yes' if data['oracle_agrees'] else 'no'}")
    return data, lines


def cmd_soergel_check(args):
    W = load_coxeter(_read(args.coxeter), cap=args.cap)
    scan = scan_soergel_idempotents(W)
    data = {
        "group_order": W.order,
        "only_identity_weakly_idempotent": scan.ok,
        "projective_generators": scan.projective_generators,
        "weakly_idempotent": scan.weakly_idempotent,
    }
    lines = [f"group order: {W.order}",
             f"weakly idempotent indecomposables: {', '.join(scan.weakly_idempotent)}",
             "identity is the only weak idempotent: " + ("yes" if scan.ok else "no")]
    return data, lines


def cmd_soergel_kl(args):
    W = load_coxeter(_read(args.coxeter), cap=args.cap)
    T = kl_table(W)
    data = T.to_json()
    lines = [f"group order: {W.order}"]
    lines += [f"h[{e['x']},{e['w']}] = {e['h']}" for e in data["h"]]
    return data, lines


def cmd_soergel_build(args):
    W = load_coxeter(_read(args.coxeter), cap=args.cap)
    P = build_soergel_2cat(W)
    return _emit_presentation(args, P, f"group order {W.order}")


def cmd_search(args):
    P = _presentation(args.presentation)
    rng = random.Random(args.seed)
    found = search_idempotents(P, args.trials, rng, max_k=args.max_k, max_total=args.max_total)
    rows, failures, nontrivial = [], 0, 0
    for phi in found:
        dec = gamma_theta_pi(phi)
        rep = verify_idempotent_identities(phi, dec)
        nontrivial += dec.nontrivial
        failures += not rep.ok
        rows.append({"endo": phi.to_json(), "nontrivial": dec.nontrivial, "failed": rep.failures()})
    data = {"seed": args.seed, "trials": args.trials, "idempotents": rows,
            "found": len(found), "nontrivial": nontrivial, "failures": failures}
    lines = [f"seed {args.seed}, {args.trials} trials",
             f"distinct nonzero idempotents: {len(found)} ({nontrivial} nontrivial)",
             f"identity check failures: {failures}"]
    for r in rows:
        if r["failed"]:
            lines.append(f"FAIL {json.dumps(r['endo'], sort_keys=True)}: {', '.join(r['failed'])}")
    return data, lines


def _emit_presentation(args, P: TwoCatPresentation, summary: str):
    report = validate_presentation(P)
    if not report.ok:
        raise InvalidPresentation("; ".join(report.lines()[:5]))
    if args.output:
        return {"wrote": args.output, "summary": summary}, [f"wrote {args.output} ({summary})"], P.dumps()
    return None, None, P.dumps()


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(add_help=False)
    top.add_argument("--format", choices=("text", "json"), default="text")
    top.add_argument("-o", "--output", help="write the result to this file")
    # repeated after the subcommand; SUPPRESS keeps a value given before it
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("-o", "--output", default=argparse.SUPPRESS)

    parser = _Parser(prog="twomorita", description="Decategorified finitary 2-category toolkit.", parents=[top])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", parents=[common], help="check a presentation")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("flor", parents=[common], help="block normal form of an idempotent matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_flor)

    p = sub.add_parser("decompose", parents=[common], help="split an idempotent endomorphism")
    p.add_argument("presentation")
    p.add_argument("endo")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("projectives", parents=[common], help="classify projective 2-representations")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_projectives)

    p = sub.add_parser("essential", parents=[common], help="retract preorder and essential objects")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_essential)

    p = sub.add_parser("search", parents=[common], help="random search for idempotent endomorphisms")
    p.add_argument("presentation")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-total", type=int, default=3)
    p.set_defaults(func=cmd_search)

    pf = sub.add_parser("projfun", help="projective functors over quiver algebras")
    pfs = pf.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = pfs.add_parser("build", parents=[common])
    p.add_argument("quiver")
    p.set_defaults(func=cmd_projfun_build)
    p = pfs.add_parser("morita", parents=[common])
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--oracle", action="store_true", help="also run the move-search oracle")
    p.set_defaults(func=cmd_projfun_morita)

    so = sub.add_parser("soergel", help="Soergel 2-categories of Coxeter systems")
    sos = so.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("check", cmd_soergel_check), ("kl", cmd_soergel_kl), ("build", cmd_soergel_build)):
        p = sos.add_parser(name, parents=[common])
        p.add_argument("coxeter")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.set_defaults(func=func)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(list(argv))
    except UsageError as exc:
        text = str(exc).rstrip("\n")
        return CommandResult(exc.status, text + "\n" if text else "")
    try:
        out = args.func(args)
    except UsageError as exc:
        return CommandResult(2, f"{exc}\n")
    except TwoMoritaError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        text = dumps(err) if args.format == "json" else f"error: {type(exc).__name__}: {exc}\n"
        return CommandResult(1, text)

    if len(out) == 3:  # presentation emitters
        data, lines, artifact = out
        if not args.output:
            return CommandResult(0, artifact)
        _write(args.output, artifact)
        return CommandResult(0, _render(data, args.format, lines), args.output)
    data, lines = out
    report = _render(data, args.format, lines)
    if args.output:
        _write(args.output, report)
        return CommandResult(0, report, args.output)
    return CommandResult(0, report)


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stderr if result.exit_code == 2 else sys.stdout
    stream.write(result.report)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
