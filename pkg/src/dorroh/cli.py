"""Command-line interface: ``dorroh <command> [file]``.

Every command reads a structure document (from a file, or stdin when the
file is ``-`` or omitted) and prints a report.  Exit codes: 0 when every
reported condition passes, 1 when one fails, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from typing import Callable, Sequence

from .catalog import describe
from .document import DocumentError, ParseError, StructureDocument, parse_document, serialize_document, validate_document
from .dorroh import check_canonical_maps, extend, extend_algebra, extend_coalgebra
from .fields import Field, FieldError, field_from_spec
from .gallery import GalleryError, gallery, gallery_description, gallery_names
from .hopf import (
    BialgebraConditionsUnmet,
    GradingError,
    InvalidAntipode,
    antipode_exists_by_convolution,
    check_bialgebra_conditions,
    radford_subalgebra,
    solve_antipode,
    split_graded_hopf,
)
from .ideals import (
    check_ideal_criteria,
    check_trivial_ext_ideal,
    classify_unitization_ideals,
    decompose_ideal,
    enumerate_ideals,
    ideal_quotient_isos,
    verify_ideal_exact_sequences,
)
from .linalg import DEFAULT_BUDGET, BudgetExceeded, Matrix, Subspace
from .report import AnalysisReport, Condition, ConsistencyError
from .structures import InvalidStructure, StructureError, validate_algebra, validate_coalgebra
from .subcoalgebras import (
    check_subcoalgebra_criteria,
    check_trivial_coext_subcoalgebra,
    classify_counitization_subcoalgebras,
    decompose_subcoalgebra,
    enumerate_subcoalgebras,
    subcoalgebra_quotient_isos,
    verify_coalgebra_exact_sequences,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class Outcome:
    command: str
    report: AnalysisReport = dc_field(default_factory=AnalysisReport)
    data: dict = dc_field(default_factory=dict)
    text: str = ""          # a document produced by the command, printed after the ledger

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.report.passed else EXIT_FAIL


# -- rendering ---------------------------------------------------------------

def _scalar(field: Field, x) -> str:
    return field.format(x)


def matrix_data(m: Matrix) -> list[list[str]]:
    return [[_scalar(m.field, x) for x in row] for row in m.rows]


def subspace_data(s: Subspace) -> list[list[str]]:
    return [[_scalar(s.field, x) for x in v] for v in s.basis]


def _sorted_conditions(rep: AnalysisReport) -> list[Condition]:
    return sorted(rep.conditions, key=lambda c: c.id)


def machine_report(out: Outcome) -> str:
    doc = {
        "command": out.command,
        "conditions": [c.to_dict() for c in _sorted_conditions(out.report)],
        "data": out.data,
        "exit": out.exit_code,
        "passed": out.report.passed,
    }
    if out.text:
        doc["document"] = out.text
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _human_value(v) -> str:
    if v == []:
        return "[]"
    if isinstance(v, list) and all(isinstance(x, str) for x in v):
        return "(" + ", ".join(x.split(" mod ")[0] for x in v) + ")"
    if isinstance(v, list) and all(isinstance(x, list) for x in v):
        return "[" + ", ".join(_human_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "  ".join(f"{k}={_human_value(v[k])}" for k in sorted(v))
    if isinstance(v, list) and all(isinstance(x, dict) for x in v):
        return "".join("\n  " + _human_value(x) for x in v)
    if isinstance(v, list):
        return json.dumps(v, sort_keys=True, ensure_ascii=False)
    return str(v)


def human_report(out: Outcome) -> str:
    lines = [f"command: {out.command}"]
    for c in _sorted_conditions(out.report):
        desc = describe(c.id)
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.id}" + (f"  ({desc})" if desc else ""))
        if c.detail:
            lines.append(f"      {c.detail}")
        for w in c.witnesses:
            lines.append("      " + ", ".join(f"{k}: {w[k]}" for k in sorted(w)))
    for k in sorted(out.data):
        lines.append(f"{k}: {_human_value(out.data[k])}".replace(": \n", ":\n"))
    if out.text:
        lines.append(out.text.rstrip("\n"))
    lines.append(f"result: {'pass' if out.report.passed else 'fail'}")
    return "\n".join(lines)


# -- commands ----------------------------------------------------------------

def _read(path: str) -> StructureDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_document(text)


def _require_pair(doc: StructureDocument) -> None:
    if doc.pair is None:
        raise UsageError("this command needs a document with a 'pair' line")


def cmd_validate(doc: StructureDocument, args) -> Outcome:
    return Outcome("validate", validate_document(doc))


def cmd_extend(doc: StructureDocument, args) -> Outcome:
    _require_pair(doc)
    base = validate_document(doc)
    if not base.passed:
        return Outcome("extend", base)
    if doc.has_algebra_data and doc.has_coalgebra_data:
        ext = extend(doc.dorroh_pair())
    elif doc.has_algebra_data:
        ext = extend_algebra(doc.pair_algebras())
    else:
        ext = extend_coalgebra(doc.pair_coalgebras())
    rep = base + check_canonical_maps(ext)
    total = StructureDocument(doc.field)
    total.add_space("T", ext.labels)
    if ext.algebra is not None:
        rep = rep + validate_algebra(ext.algebra, "T.")
        total.set_algebra("T", ext.algebra)
    if ext.coalgebra is not None:
        rep = rep + validate_coalgebra(ext.coalgebra, "T.")
        total.set_coalgebra("T", ext.coalgebra)
    return Outcome("extend", rep, {"dimension": ext.dim}, serialize_document(total))


def cmd_check_bialgebra(doc: StructureDocument, args) -> Outcome:
    _require_pair(doc)
    bc = check_bialgebra_conditions(doc.dorroh_pair())
    return Outcome("check-bialgebra", bc.report, {"is_bialgebra": bc.is_bialgebra})


def cmd_solve_antipode(doc: StructureDocument, args) -> Outcome:
    if doc.pair is None:
        return _graded(doc, "solve-antipode")
    pair = doc.dorroh_pair()
    sol = solve_antipode(pair)
    conv = antipode_exists_by_convolution(pair)
    if conv != sol.exists:
        raise ConsistencyError("pair system and convolution system disagree on the antipode")
    rep = AnalysisReport((
        Condition("antipode.exists", sol.exists),
        Condition("antipode.routes-agree", True, f"both routes: {sol.exists}"),
    )) + sol.report
    data = {"solution_space_dim": sol.solution_space_dim}
    if sol.exists:
        data["antipode_I"] = matrix_data(sol.antipode)
        rad = radford_subalgebra(pair)
        rep = rep + rad.report
        data["radford_basis"] = subspace_data(rad.subalgebra)
    return Outcome("solve-antipode", rep, data)


def _graded(doc: StructureDocument, command: str) -> Outcome:
    name = doc.single_space()
    deg = doc.degrees(name)
    if deg is None:
        raise UsageError("a single-space document needs 'deg' entries for the graded split")
    gs = split_graded_hopf(doc.bialgebra(name), deg)
    sol = gs.solution
    rep = AnalysisReport((
        Condition("antipode.exists", sol.exists),
        Condition("antipode.matches-given", gs.antipode_matches),
    )) + sol.report
    data = {"solution_space_dim": sol.solution_space_dim, "base_basis": list(gs.split.pair.base_labels),
            "ideal_basis": list(gs.split.pair.ideal_labels)}
    if sol.exists:
        data["antipode_I"] = matrix_data(sol.antipode)
        rad = radford_subalgebra(gs.split.pair)
        rep = rep + rad.report
        data["radford_basis"] = subspace_data(rad.subalgebra)
    return Outcome(command, rep, data)


def cmd_split_graded(doc: StructureDocument, args) -> Outcome:
    out = _graded(doc, "split-graded")
    pair = split_graded_hopf(doc.bialgebra(doc.single_space()), doc.degrees(doc.single_space())).split.pair
    from .gallery import _pair_document

    out.text = serialize_document(_pair_document(doc.field, pair))
    return out


def _sub(doc: StructureDocument, args) -> Subspace:
    if not args.sub:
        raise UsageError("--sub NAME is required")
    return doc.subspace(args.sub)


def cmd_analyze_ideal(doc: StructureDocument, args) -> Outcome:
    _require_pair(doc)
    pair = doc.pair_algebras()
    ext = extend_algebra(pair)
    K = _sub(doc, args)
    dec = decompose_ideal(ext, K)
    rep = check_ideal_criteria(dec, ext)
    data = {
        "B": subspace_data(dec.B), "Z": subspace_data(dec.Z), "J": subspace_data(dec.J), "L": subspace_data(dec.L),
        "phi": matrix_data(dec.phi), "is_ideal": rep["ideal.direct"].passed,
    }
    if rep["ideal.direct"].passed:
        isos = ideal_quotient_isos(dec, ext)
        rep = rep + verify_ideal_exact_sequences(dec, ext) + isos.report
        data["quotient_dims"] = list(isos.dims)
    if pair.ideal.is_zero_product() and pair.base.unit is not None:
        rep = rep + AnalysisReport(tuple(c for c in check_trivial_ext_ideal(pair, K) if c.id != "ideal.direct"))
    return Outcome("analyze-ideal", rep, data)


def cmd_analyze_subcoalgebra(doc: StructureDocument, args) -> Outcome:
    _require_pair(doc)
    pair = doc.pair_coalgebras()
    ext = extend_coalgebra(pair)
    T = _sub(doc, args)
    dec = decompose_subcoalgebra(ext, T)
    rep = check_subcoalgebra_criteria(dec, ext)
    data = {
        "D": subspace_data(dec.D), "E": subspace_data(dec.E), "Q": subspace_data(dec.Q), "R": subspace_data(dec.R),
        "eta": matrix_data(dec.eta), "is_subcoalgebra": rep["subcoal.direct"].passed,
    }
    if rep["subcoal.direct"].passed:
        isos = subcoalgebra_quotient_isos(dec, ext)
        rep = rep + verify_coalgebra_exact_sequences(dec, ext) + isos.report
        data["quotient_dims"] = list(isos.dims)
    if pair.carried.is_zero_coproduct() and pair.base.counit is not None:
        rep = rep + AnalysisReport(tuple(c for c in check_trivial_coext_subcoalgebra(pair, T) if c.id != "subcoal.direct"))
    return Outcome("analyze-subcoalgebra", rep, data)


def cmd_enumerate(doc: StructureDocument, args) -> Outcome:
    _require_pair(doc)
    if args.ideals == args.subcoalgebras:
        raise UsageError("pass exactly one of --ideals and --subcoalgebras")
    if args.ideals:
        ext = extend_algebra(doc.pair_algebras())
        found = enumerate_ideals(ext, args.budget)
        for K in found:
            check_ideal_criteria(decompose_ideal(ext, K), ext)
        what = "ideals"
    else:
        ext = extend_coalgebra(doc.pair_coalgebras())
        found = enumerate_subcoalgebras(ext, args.budget)
        for T in found:
            check_subcoalgebra_criteria(decompose_subcoalgebra(ext, T), ext)
        what = "subcoalgebras"
    ordered = sorted(found, key=lambda s: (s.dim, subspace_data(s)))
    rep = AnalysisReport((Condition("enumerate.criteria-agree", True, f"{len(found)} {what}"),))
    return Outcome(f"enumerate --{what}", rep, {"count": len(found), what: [subspace_data(s) for s in ordered]})


def _classified(items, keys: Sequence[str]) -> list[dict]:
    out = []
    for c in items:
        sub = c.K if hasattr(c, "K") else c.T
        entry = {"case": c.case, "basis": subspace_data(sub)}
        for k in keys:
            if k in c.data:
                v = c.data[k]
                entry[k] = subspace_data(v) if isinstance(v, Subspace) else [sub.field.format(x) for x in v]
        out.append(entry)
    return sorted(out, key=lambda e: (e["case"], len(e["basis"]), e["basis"]))


def _one_dim_base(doc: StructureDocument) -> None:
    _require_pair(doc)
    if len(doc.spaces[doc.pair[0]]) != 1:
        raise UsageError("the base of the pair must be one-dimensional")


def cmd_classify_unitization(doc: StructureDocument, args) -> Outcome:
    _one_dim_base(doc)
    I = doc.algebra(doc.pair[1])
    K = doc.subspace(args.sub) if args.sub else None
    items = classify_unitization_ideals(I, K, args.budget)
    rep = AnalysisReport((Condition("classify.matches-enumeration", True, f"{len(items)} ideals"),)) if K is None else AnalysisReport()
    return Outcome("classify-unitization", rep, {"ideals": _classified(items, ("L", "J", "phi"))})


def cmd_classify_counitization(doc: StructureDocument, args) -> Outcome:
    _one_dim_base(doc)
    P = doc.coalgebra(doc.pair[1])
    T = doc.subspace(args.sub) if args.sub else None
    items = classify_counitization_subcoalgebras(P, T, args.budget)
    rep = AnalysisReport((Condition("classify.matches-enumeration", True, f"{len(items)} subcoalgebras"),)) if T is None else AnalysisReport()
    return Outcome("classify-counitization", rep, {"subcoalgebras": _classified(items, ("Q", "x", "R"))})


COMMANDS: dict[str, Callable] = {
    "validate": cmd_validate,
    "extend": cmd_extend,
    "check-bialgebra": cmd_check_bialgebra,
    "solve-antipode": cmd_solve_antipode,
    "split-graded": cmd_split_graded,
    "analyze-ideal": cmd_analyze_ideal,
    "analyze-subcoalgebra": cmd_analyze_subcoalgebra,
    "enumerate": cmd_enumerate,
    "classify-unitization": cmd_classify_unitization,
    "classify-counitization": cmd_classify_counitization,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dorroh", description="Exact checks for Dorroh extensions of (co/bi/Hopf) algebras.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def common(sp):
        sp.add_argument("file", nargs="?", default="-", help="structure document (default: stdin)")
        sp.add_argument("--format", choices=("human", "machine"), default="human")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest p**(n*n) allowed for subspace enumeration")
        sp.add_argument("--sub", metavar="NAME", help="named subspace from the document")

    for name in COMMANDS:
        sp = sub.add_parser(name)
        common(sp)
        if name == "enumerate":
            sp.add_argument("--ideals", action="store_true")
            sp.add_argument("--subcoalgebras", action="store_true")
    g = sub.add_parser("gallery", help="print a built-in fixture document")
    g.add_argument("name", nargs="?")
    g.add_argument("--field", help='e.g. "Q" or "GF 3"')
    g.add_argument("--list", action="store_true", help="list fixture names")
    return p


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run one command; returns ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return (EXIT_USAGE if e.code else EXIT_PASS), "", ""
    if args.command == "gallery":
        return _gallery(args)
    try:
        doc = _read(args.file)
        out = COMMANDS[args.command](doc, args)
    except (ParseError, DocumentError, UsageError, FieldError, OSError, GalleryError) as e:
        return EXIT_USAGE, "", f"error: {e}"
    except BudgetExceeded as e:
        hint = "" if e.count < 0 else " (raise --budget to proceed)"
        return EXIT_USAGE, "", f"error: {e}{hint}"
    except (InvalidStructure, BialgebraConditionsUnmet) as e:
        out = Outcome(args.command, e.report, {"error": str(e)})
    except (InvalidAntipode, GradingError, StructureError, ValueError) as e:
        out = Outcome(args.command, AnalysisReport((Condition("input.accepted", False, str(e)),)))
    text = machine_report(out) if args.format == "machine" else human_report(out)
    return out.exit_code, text, ""


def _gallery(args) -> tuple[int, str, str]:
    if args.list or not args.name:
        return EXIT_PASS, "\n".join(f"{n}: {gallery_description(n)}" for n in gallery_names()), ""
    try:
        field = field_from_spec(args.field) if args.field else None
        doc = gallery(args.name, field)
    except (GalleryError, FieldError, ValueError) as e:
        return EXIT_USAGE, "", f"error: {e}"
    return EXIT_PASS, serialize_document(doc).rstrip("\n"), ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    if err:
        print(err, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
