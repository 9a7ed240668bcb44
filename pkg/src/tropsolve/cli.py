"""Command-line front end.

Subcommands map 1:1 to library operations and render one report each,
as text or JSON (`--json`) carrying identical data. All indices in
reports are 1-based. Exit codes: 0 = success/solvable, 1 = unsolvable or
negative verdict, 2 = input or usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import TropicalError
from .freedom import degrees_of_freedom, minimal_leading_oracle
from .matrix import TropMatrix, TropVector, parse_matrix, parse_vector
from .normalize import column_minima, normalize
from .oracle import exhaustive_solvable, principal_solution
from .rank import RankReport, colrank, rowrank
from .reduce import dof_via_reduction, reduce_system
from .scalar import TropicalScalar, format_scalar
from .solver import Solvable, solve, verify, check_equivalence

__all__ = ["Report", "run", "main"]


@dataclass(frozen=True)
class Report:
    command: str
    inputs: tuple[dict, ...]
    payload: dict
    exit_code: int


def _fmt(s: TropicalScalar) -> str:
    return format_scalar(s)


def _fmt_frac(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _read_input(name: str, path: str) -> tuple[dict, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = {"name": name, "path": path, "sha256": hashlib.sha256(raw).hexdigest()}
    return digest, raw.decode("utf-8")


def _load_matrix(name: str, path: str) -> tuple[dict, TropMatrix]:
    digest, text = _read_input(name, path)
    return digest, parse_matrix(text)


def _load_vector(name: str, path: str) -> tuple[dict, TropVector]:
    digest, text = _read_input(name, path)
    return digest, parse_vector(text)


def _ones(indices) -> list[int]:
    return [i + 1 for i in sorted(indices)]


def _grid_lines(rows: list[list[str]], boxed: set[tuple[int, int]] | None = None) -> list[str]:
    cells = [
        [f"[{v}]" if boxed and (i, j) in boxed else v for j, v in enumerate(r)]
        for i, r in enumerate(rows)
    ]
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells[0]))]
    return ["  " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]


# --- subcommand handlers ---------------------------------------------------


def _cmd_normalize(args) -> Report:
    dig_a, a = _load_matrix("A", args.matrix)
    dig_b, b = _load_vector("b", args.vector)
    res = normalize(a, b)
    y_star, argmins = column_minima(res.q)
    payload = {
        "a_tilde": [[_fmt(e) for e in r] for r in res.a_tilde.row_tuples()],
        "col_means": [_fmt_frac(f) for f in res.col_means],
        "b_tilde": [_fmt(e) for e in res.b_tilde],
        "b_mean": _fmt_frac(res.b_mean),
        "q": [[str(e) for e in r] for r in res.q],
        "column_minima": [_fmt(e) for e in y_star],
        "argmin_rows": [_ones(s) for s in argmins],
    }
    return Report("normalize", (dig_a, dig_b), payload, 0)


def _render_normalize(p: dict) -> list[str]:
    boxed = {
        (i - 1, j) for j, rows_1 in enumerate(p["argmin_rows"]) for i in rows_1
    }
    lines = ["column means: " + " ".join(p["col_means"]), "b mean: " + p["b_mean"]]
    lines.append("A~ (normalized matrix):")
    lines += _grid_lines(p["a_tilde"])
    lines.append("b~: " + " ".join(p["b_tilde"]))
    lines.append("Q (column minima boxed):")
    lines += _grid_lines(p["q"], boxed)
    lines.append("column minima: " + " ".join(p["column_minima"]))
    return lines


def _solution_strings(outcome: Solvable) -> list[str]:
    return [
        "unbounded" if j in outcome.unbounded else _fmt(e)
        for j, e in enumerate(outcome.x_star)
    ]


def _cmd_solve(args) -> Report:
    dig_a, a = _load_matrix("A", args.matrix)
    dig_b, b = _load_vector("b", args.vector)
    outcome = solve(a, b)
    solvable = isinstance(outcome, Solvable)
    payload = {
        "status": "solvable" if solvable else "unsolvable",
        "x_star": _solution_strings(outcome) if solvable else None,
        "y_star": [_fmt(e) for e in outcome.y_star] if solvable else None,
        "witness_rows": [] if solvable else _ones(outcome.witness_rows),
        "coverage": [_ones(cols) for cols in outcome.coverage],
        "forced_bottom": _ones(outcome.forced_bottom) if solvable else [],
        "unbounded": _ones(outcome.unbounded) if solvable else [],
    }
    if args.check:
        x0 = principal_solution(a, b)
        ok = verify(a, x0, b)
        agree = ok == solvable and (not solvable or x0 == outcome.x_star)
        exh = None
        if a.rows <= 4 and a.cols <= 4:
            exh = exhaustive_solvable(a, b)
            agree = agree and exh == solvable
        payload["check"] = {
            "principal_solution": [_fmt(e) for e in x0],
            "verify": ok,
            "exhaustive": exh,
            "agrees": agree,
        }
    return Report("solve", (dig_a, dig_b), payload, 0 if solvable else 1)


def _render_solve(p: dict) -> list[str]:
    lines = [f"status: {p['status']}"]
    if p["status"] == "solvable":
        lines.append("X* = (" + ", ".join(p["x_star"]) + ")")
        lines.append("Y* = (" + ", ".join(p["y_star"]) + ")")
        if p["forced_bottom"]:
            lines.append("forced to -inf: columns " + ", ".join(map(str, p["forced_bottom"])))
        if p["unbounded"]:
            lines.append("unbounded columns: " + ", ".join(map(str, p["unbounded"])))
    else:
        lines.append("witness rows (no column minimum): " + ", ".join(map(str, p["witness_rows"])))
    lines.append("coverage (column minima per row):")
    for i, cols in enumerate(p["coverage"], start=1):
        lines.append(f"  row {i}: " + (", ".join(map(str, cols)) if cols else "-"))
    if "check" in p:
        c = p["check"]
        lines.append("oracle check: " + ("agrees" if c["agrees"] else "DISAGREES"))
        lines.append("  principal solution = (" + ", ".join(c["principal_solution"]) + ")")
        lines.append(f"  verifies: {c['verify']}" + ("" if c["exhaustive"] is None else f", exhaustive: {c['exhaustive']}"))
    return lines


def _cmd_dof(args) -> Report:
    dig_a, a = _load_matrix("A", args.matrix)
    dig_b, b = _load_vector("b", args.vector)
    outcome = solve(a, b)
    if not isinstance(outcome, Solvable):
        payload = {"status": "unsolvable", "witness_rows": _ones(outcome.witness_rows)}
        return Report("dof", (dig_a, dig_b), payload, 1)
    covered = [(i, cols) for i, cols in enumerate(outcome.coverage) if cols]
    report = degrees_of_freedom(
        [cols for _, cols in covered], a.cols, row_ids=[i for i, _ in covered]
    )
    payload = {
        "status": "solvable",
        "degrees_of_freedom": report.d_f,
        "leading": [j + 1 for j in report.leading_cols],
        "free": [j + 1 for j in report.free_cols],
        "trace": [
            {"rule": s.rule, "column": s.chosen_col + 1, "removed_rows": _ones(s.removed_rows)}
            for s in report.trace
        ],
    }
    if args.exact:
        size, witness = minimal_leading_oracle([cols for _, cols in covered], a.cols)
        payload["exact"] = {"min_size": size, "witness": [j + 1 for j in witness]}
    return Report("dof", (dig_a, dig_b), payload, 0)


def _render_dof(p: dict) -> list[str]:
    if p["status"] == "unsolvable":
        return [
            "status: unsolvable (degrees of freedom undefined)",
            "witness rows: " + ", ".join(map(str, p["witness_rows"])),
        ]
    lines = [
        f"degrees of freedom: {p['degrees_of_freedom']}",
        "leading variables: " + ", ".join(f"x{j}" for j in p["leading"]),
        "free variables: " + (", ".join(f"x{j}" for j in p["free"]) if p["free"] else "-"),
        "trace:",
    ]
    for s in p["trace"]:
        lines.append(
            f"  {s['rule']}: chose column {s['column']}, removed rows "
            + (", ".join(map(str, s["removed_rows"])) if s["removed_rows"] else "-")
        )
    if "exact" in p:
        e = p["exact"]
        lines.append(
            f"exact minimum cover: {e['min_size']} columns "
            + "{" + ", ".join(map(str, e["witness"])) + "}"
        )
    return lines


def _parse_scan_order(text: str, size: int) -> list[int]:
    try:
        order = [int(tok) - 1 for tok in text.split(",")]
    except ValueError:
        raise TropicalError(f"scan order must be comma-separated integers, got {text!r}") from None
    if sorted(order) != list(range(size)):
        raise TropicalError(f"scan order must be a permutation of 1..{size}")
    return order


def _rank_payload(report: RankReport) -> dict:
    return {
        "axis": report.axis,
        "rank": report.rank,
        "independent": [i + 1 for i in report.independent],
        "dependent": [
            {
                "index": d.col + 1,
                "combination": [
                    {"index": c + 1, "coefficient": _fmt(coeff)} for c, coeff in d.combination
                ],
            }
            for d in report.dependent
        ],
        "scan_trace": [{"index": i + 1, "verdict": v} for i, v in report.scan_trace],
    }


def _cmd_rank(args, *, axis: str) -> Report:
    dig_a, a = _load_matrix("A", args.matrix)
    size = a.cols if axis == "columns" else a.rows
    order = _parse_scan_order(args.scan_order, size) if args.scan_order else None
    report = colrank(a, order) if axis == "columns" else rowrank(a, order)
    name = "colrank" if axis == "columns" else "rowrank"
    return Report(name, (dig_a,), _rank_payload(report), 0)


def _render_rank(command: str, p: dict) -> list[str]:
    unit = "column" if p["axis"] == "columns" else "row"
    lines = [
        f"{command}: {p['rank']}",
        f"independent {unit}s: " + ", ".join(map(str, p["independent"])),
        "scan trace: "
        + ", ".join(f"{unit} {t['index']} {t['verdict']}" for t in p["scan_trace"]),
    ]
    for d in p["dependent"]:
        if d["combination"]:
            combo = ", ".join(f"{unit} {c['index']} + {c['coefficient']}" for c in d["combination"])
            lines.append(f"dependent {unit} {d['index']} = max({combo})")
        else:
            lines.append(f"dependent {unit} {d['index']} = all -inf (empty combination)")
    return lines


def _cmd_reduce(args) -> Report:
    dig_a, a = _load_matrix("A", args.matrix)
    dig_b, b = _load_vector("b", args.vector)
    sys_red = reduce_system(a, b)
    outcome = solve(a, b)
    solvable = isinstance(outcome, Solvable)
    dof_reduced = dof_direct = None
    if solvable:
        dof_reduced = dof_via_reduction(a, b)
        covered = [(i, cols) for i, cols in enumerate(outcome.coverage) if cols]
        dof_direct = degrees_of_freedom(
            [cols for _, cols in covered], a.cols, row_ids=[i for i, _ in covered]
        ).d_f
    payload = {
        "status": "solvable" if solvable else "unsolvable",
        "independent_rows": [i + 1 for i in sys_red.indep_rows],
        "independent_cols": [j + 1 for j in sys_red.indep_cols],
        "a_bar": [[_fmt(e) for e in r] for r in sys_red.a_bar.row_tuples()] if sys_red.a_bar else None,
        "b_bar": [_fmt(e) for e in sys_red.b_bar] if sys_red.b_bar else None,
        "eta": [
            {"column": j + 1, "coefficients": [_fmt(c) for c in coeffs]}
            for j, coeffs in sys_red.eta
        ],
        "xi": [
            {"row": i + 1, "coefficients": [_fmt(c) for c in coeffs]}
            for i, coeffs in sys_red.xi
        ],
        "row_consistency": [
            {"row": i + 1, "consistent": ok} for i, ok in sys_red.row_consistency
        ],
        "dof_via_reduction": dof_reduced,
        "dof_direct": dof_direct,
    }
    return Report("reduce", (dig_a, dig_b), payload, 0 if solvable else 1)


def _render_reduce(p: dict) -> list[str]:
    lines = [
        f"status: {p['status']}",
        "independent rows: " + ", ".join(map(str, p["independent_rows"])),
        "independent columns: " + ", ".join(map(str, p["independent_cols"])),
    ]
    if p["a_bar"] is not None:
        lines.append("reduced matrix:")
        lines += _grid_lines(p["a_bar"])
        lines.append("reduced b: " + " ".join(p["b_bar"]))
    for e in p["eta"]:
        lines.append(f"eta for column {e['column']}: " + " ".join(e["coefficients"]))
    for x in p["xi"]:
        lines.append(f"xi for row {x['row']}: " + " ".join(x["coefficients"]))
    for rc in p["row_consistency"]:
        lines.append(f"row {rc['row']} consistency: {'ok' if rc['consistent'] else 'VIOLATED'}")
    if p["dof_via_reduction"] is not None:
        lines.append(f"degrees of freedom via reduction: {p['dof_via_reduction']}")
        lines.append(f"degrees of freedom (direct): {p['dof_direct']}")
    return lines


def _cmd_check_equiv(args) -> Report:
    dig_a, a = _load_matrix("A", args.matrix)
    dig_a2, a2 = _load_matrix("A2", args.matrix2)
    alphas = check_equivalence(a, a2)
    payload = {
        "equivalent": alphas is not None,
        "alpha": [_fmt(al) for al in alphas] if alphas is not None else None,
    }
    return Report("check-equiv", (dig_a, dig_a2), payload, 0 if alphas is not None else 1)


def _render_check_equiv(p: dict) -> list[str]:
    if p["equivalent"]:
        return ["equivalent: yes", "alpha = (" + ", ".join(p["alpha"]) + ")"]
    return ["equivalent: no"]


# --- driver ----------------------------------------------------------------

_RENDERERS = {
    "normalize": _render_normalize,
    "solve": _render_solve,
    "dof": _render_dof,
    "reduce": _render_reduce,
    "check-equiv": _render_check_equiv,
}


def render_text(report: Report) -> str:
    if "error" in report.payload:
        return f"error: {report.payload['error']}"
    if report.command in ("colrank", "rowrank"):
        return "\n".join(_render_rank(report.command, report.payload))
    return "\n".join(_RENDERERS[report.command](report.payload))


def render_json(report: Report) -> str:
    doc = {
        "command": report.command,
        "inputs": list(report.inputs),
        "payload": report.payload,
        "exit_code": report.exit_code,
    }
    return json.dumps(doc, indent=2)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropsolve",
        description="Exact max-plus linear systems: solve, degrees of freedom, rank, reduction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, vector=False, matrix2=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("matrix", help="matrix file (# comments, one row per line)")
        if vector:
            p.add_argument("vector", help="vector file (one scalar per line)")
        if matrix2:
            p.add_argument("matrix2", help="second matrix file")
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        return p

    add("normalize", "normalize a system and print the associated grid Q", vector=True)
    p_solve = add("solve", "solve A x = b; exit 0 if solvable, 1 if not", vector=True)
    p_solve.add_argument("--check", action="store_true", help="cross-check with brute-force oracles")
    p_dof = add("dof", "degrees of freedom of a solvable system", vector=True)
    p_dof.add_argument("--exact", action="store_true", help="also compute the exact minimum cover")
    p_col = add("colrank", "column rank by the dependence scan")
    p_col.add_argument("--scan-order", help="comma-separated 1-based target order")
    p_row = add("rowrank", "row rank (column rank of the transpose)")
    p_row.add_argument("--scan-order", help="comma-separated 1-based target order")
    add("reduce", "row-column reduction and both degrees-of-freedom figures", vector=True)
    add("check-equiv", "recover per-column shifts between two matrices", matrix2=True)
    return parser


def _dispatch(args) -> Report:
    handlers = {
        "normalize": _cmd_normalize,
        "solve": _cmd_solve,
        "dof": _cmd_dof,
        "reduce": _cmd_reduce,
        "check-equiv": _cmd_check_equiv,
    }
    try:
        if args.command == "colrank":
            return _cmd_rank(args, axis="columns")
        if args.command == "rowrank":
            return _cmd_rank(args, axis="rows")
        return handlers[args.command](args)
    except (TropicalError, OSError, UnicodeDecodeError) as exc:
        return Report(args.command, (), {"error": str(exc)}, 2)


def run(argv: Sequence[str]) -> Report:
    """Parse arguments, dispatch, and return the report (bad inputs give exit code 2)."""
    return _dispatch(_build_parser().parse_args(argv))


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(sys.argv[1:] if argv is None else argv)
    report = _dispatch(args)
    print(render_json(report) if args.json else render_text(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
