"""Command-line interface: ``ncinv {hilbert,gens,verify,tables}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .cyclotomic import euler_phi
from .freealg import invariant_basis, invariant_dimension_by_counting, reynolds_rank
from .gens import (
    GeneratorCountMismatch,
    basis_count_check,
    basis_leading_terms,
    fibonacci_check,
    format_word_set,
    free_generators,
    freeness_check,
)
from .hilbert import generator_series, hilbert_closed_form, hilbert_series, hilbert_via_BC
from .koryukin import verify_generation_theorem
from .ratfunc import (
    QPoly,
    QRatFunc,
    lehmer_check,
    psi_min_poly,
    psi_root_certified,
    recurrence_from_ratfunc,
    series_coefficients,
    watkins_zeitlin_check,
)

ENV_CAP = "NCINV_MAX_DEGREE"
SUITES = ("hilbert", "dims", "psi", "salgebra", "gens")
TABLE_FILES = ("table1", "table2", "table3", "table4")


class UsageError(ValueError):
    pass


def q(x) -> str:
    return str(Fraction(x))


# -- rendering of rational functions --------------------------------------

def display_form(f: QRatFunc) -> tuple[QPoly, QPoly, bool]:
    """(num, den, ascending) in the tables' printed convention.

    A two-term denominator is printed low degree first with positive
    constant term; otherwise high degree first with positive leading
    denominator coefficient.
    """
    num, den = f.num, f.den
    if sum(1 for c in den.coeffs if c) == 2:
        return num, den, True
    if den.coeffs[-1] < 0:
        return -num, -den, False
    return num, den, False


def render_function(f: QRatFunc, canonical: bool = False) -> str:
    if canonical:
        num, den, asc = f.num, f.den, True
    else:
        num, den, asc = display_form(f)
    return f"({num.to_str(ascending=asc)})/({den.to_str(ascending=asc)})"


def _series_payload(f: QRatFunc, terms: int, canonical: bool) -> dict:
    if canonical:
        num, den = f.num, f.den
    else:
        num, den, _ = display_form(f)
    rec = recurrence_from_ratfunc(f)
    return {
        "function": render_function(f, canonical),
        "series": {"num": [q(c) for c in num.coeffs], "den": [q(c) for c in den.coeffs]},
        "coefficients": [q(c) for c in series_coefficients(f, terms - 1)] if terms > 0 else [],
        "recurrence": {"order": rec.order, "coeffs": [q(c) for c in rec.coeffs],
                       "initial": [q(c) for c in rec.initial], "text": rec.to_str()},
    }


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _series_document(name: str, n: int, f: QRatFunc, terms: int, fmt: str, canonical: bool,
                     extra: dict | None = None, extra_text: str = "") -> str:
    p = _series_payload(f, terms, canonical)
    if fmt == "json":
        doc = {"order": n, "series": p["series"], "coefficients": p["coefficients"],
               "recurrence": p["recurrence"], "function": p["function"]}
        if canonical:
            doc["canonical"] = True
        doc.update(extra or {})
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        return _csv([["n", "function", "recurrence", "coefficients"],
                     [n, p["function"], p["recurrence"]["text"], " ".join(p["coefficients"])]])
    rec = p["recurrence"]
    init = ", ".join(f"a_{i} = {v}" for i, v in enumerate(rec["initial"]))
    lines = [f"n = {n}",
             f"{name}_{2 * n}(t) = {p['function']}",
             f"coefficients: {', '.join(p['coefficients']) if p['coefficients'] else '-'}",
             f"recurrence: {rec['text']}",
             f"initial values: {init}"]
    out = "\n".join(lines) + "\n"
    if extra_text:
        out += extra_text.rstrip("\n") + "\n"
    return out


# -- degree caps ------------------------------------------------------------

def default_cap(suite: str, n: int) -> int:
    env = os.environ.get(ENV_CAP)
    if env:
        try:
            cap = int(env)
        except ValueError:
            raise UsageError(f"{ENV_CAP} must be an integer, got {env!r}")
        if cap < 1:
            raise UsageError(f"{ENV_CAP} must be positive, got {cap}")
        return cap
    if suite == "salgebra":
        return 10 if n == 5 else max(8, n)
    if suite == "gens":
        return 9
    return 10


def _cap(args, suite: str, n: int) -> int:
    if args.max_degree is not None:
        if args.max_degree < 1:
            raise UsageError(f"--max-degree must be positive, got {args.max_degree}")
        return args.max_degree
    return default_cap(suite, n)


def _need_n3(n: int):
    if n < 3:
        raise UsageError(f"n >= 3 required, got n = {n}")


# -- subcommands ----------------------------------------------------------

def cmd_hilbert(args) -> tuple[str, int]:
    _need_n3(args.n)
    if args.terms < 0:
        raise UsageError(f"--terms must be >= 0, got {args.terms}")
    return _series_document("H", args.n, hilbert_series(args.n), args.terms, args.format, args.canonical), 0


def cmd_gens(args) -> tuple[str, int]:
    _need_n3(args.n)
    D = _cap(args, "gens", args.n)
    if D < 2:
        raise UsageError(f"--max-degree must be >= 2 for generators, got {D}")
    terms = args.terms if args.terms is not None else D + 1
    f = generator_series(args.n)
    if not args.leading_terms:
        return _series_document("G", args.n, f, terms, args.format, args.canonical), 0
    table = free_generators(args.n, D)
    if args.format == "csv":
        return table.to_csv(), 0
    if args.format == "json":
        extra = {"generators": table.to_dict()["degrees"]}
        return _series_document("G", args.n, f, terms, "json", args.canonical, extra), 0
    return _series_document("G", args.n, f, terms, "text", args.canonical, extra_text=table.to_text()), 0


def _suite_hilbert(n: int, D: int):
    H = hilbert_series(n)
    yield "group sum = closed form", H == hilbert_closed_form(n)
    yield "group sum = B/C form", H == hilbert_via_BC(n)
    rec = recurrence_from_ratfunc(H)
    yield "recurrence reproduces series", rec.terms(D + 1) == series_coefficients(H, D)


def _suite_dims(n: int, D: int):
    h = series_coefficients(hilbert_series(n), D)
    for k in range(1, D + 1):
        a, b = invariant_dimension_by_counting(n, k), invariant_basis(n, k).dim
        ok = a == b == h[k]
        if k <= 8:
            ok = ok and reynolds_rank(n, k) == a
        yield f"degree {k}: counting = basis = series" + (" = Reynolds rank" if k <= 8 else ""), ok


def _suite_psi(n: int, D: int):
    p = psi_min_poly(n)
    want = euler_phi(n) // 2 if n >= 3 else 1
    yield "psi monic integral of degree phi(n)/2", p.is_monic() and p.is_integral() and p.degree == want
    yield "psi(2cos(2pi/n)) = 0 in Q(xi_n)", psi_root_certified(n)
    yield "Lehmer identity", lehmer_check(n)
    for c in watkins_zeitlin_check(n):
        yield f"Watkins-Zeitlin ({c.item}): {c.statement}", c.holds


def _suite_salgebra(n: int, D: int):
    if D < n:
        raise UsageError(f"salgebra needs --max-degree >= n = {n}, got {D}")
    rep = verify_generation_theorem(n, D)
    for r in rep.rows:
        yield f"degree {r.degree}: closure dim {r.closure_dim} = invariant dim {r.invariant_dim}", r.equal
    for c in rep.certificates:
        yield f"step-3 certificate (b, c) = ({c.b}, {c.c})", c.passed


def _suite_gens(n: int, D: int):
    try:
        table = free_generators(n, D)
    except GeneratorCountMismatch as exc:
        yield f"generator counts match G series ({exc})", False
        return
    yield f"generator counts match G series through degree {D}", True
    for k, (rank, dim) in freeness_check(n, D, table).items():
        yield f"degree {k}: generator monomials rank {rank} = invariant dim {dim}", rank == dim
    if n == 3:
        fc = fibonacci_check(D, table) if D >= 2 else None
        if fc:
            yield "generator counts are Fibonacci numbers", fc.matches
            yield "a_(k+2) = 2a_k + a_(k-1) on generator counts", fc.recurrence_ok
        bc = basis_count_check(D)
        yield "a_(k+2) = 3a_k + 2a_(k-1) on basis counts", bc.passed


_SUITE_FUNCS = {"hilbert": _suite_hilbert, "dims": _suite_dims, "psi": _suite_psi,
                "salgebra": _suite_salgebra, "gens": _suite_gens}


def cmd_verify(args) -> tuple[str, int]:
    suites = SUITES if args.which == "all" else (args.which,)
    if args.n < (1 if suites == ("psi",) else 3):
        raise UsageError(f"n >= 3 required, got n = {args.n}")
    results = []
    for s in suites:
        D = _cap(args, s, args.n)
        for check, ok in _SUITE_FUNCS[s](args.n, D):
            results.append((s, check, bool(ok)))
    failed = sum(1 for r in results if not r[2])
    status = 1 if failed else 0
    if args.format == "json":
        doc = {"order": args.n, "checks": [{"suite": s, "check": c, "passed": ok} for s, c, ok in results],
               "passed": not failed}
        return json.dumps(doc, indent=2) + "\n", status
    if args.format == "csv":
        return _csv([["suite", "check", "status"]] + [[s, c, "pass" if ok else "FAIL"] for s, c, ok in results]), status
    width = max(len(s) for s, _, _ in results)
    lines = [f"{'PASS' if ok else 'FAIL'}  {s:<{width}}  {c}" for s, c, ok in results]
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", status


# -- tables ---------------------------------------------------------------

TABLE_TITLES = {
    "table1": "Hilbert series H_2n(t) and recurrence relation",
    "table2": "Generating function G_2n(t) of free generators and recurrence relation",
    "table3": "Leading terms of free generators of degree d, n = 3",
    "table4": "Leading terms of basis elements of degree d, n = 3",
}
TABLE_HEADERS = {
    "table1": ["n", "H_2n(t)", "recurrence"],
    "table2": ["n", "G_2n(t)", "recurrence"],
    "table3": ["d", "no", "leading terms of generators"],
    "table4": ["d", "number", "leading terms of basis elements"],
}


def build_tables(canonical: bool = False) -> dict[str, list[list[str]]]:
    """The four tables as rows of strings, computed from scratch."""
    t1, t2 = [], []
    for n in range(3, 11):
        for rows, f in ((t1, hilbert_series(n)), (t2, generator_series(n))):
            rows.append([str(n), render_function(f, canonical), recurrence_from_ratfunc(f).to_str()])
    gt = free_generators(3, 6, witnesses=False)
    t3 = [[str(r.degree), str(r.count), format_word_set(r.leading_words)] for r in gt.rows]
    t4 = []
    for k in range(0, 7):
        lt = basis_leading_terms(3, k)
        t4.append([str(k), str(len(lt)), format_word_set(lt)])
    return {"table1": t1, "table2": t2, "table3": t3, "table4": t4}


def render_tables(tables: dict, fmt: str) -> dict[str, str]:
    """File name -> content."""
    if fmt == "csv":
        return {f"{name}.csv": _csv([TABLE_HEADERS[name]] + rows) for name, rows in tables.items()}
    if fmt == "json":
        doc = {name: [dict(zip(TABLE_HEADERS[name], r)) for r in rows] for name, rows in tables.items()}
        return {"tables.json": json.dumps(doc, indent=2) + "\n"}
    blocks = []
    for i, (name, rows) in enumerate(tables.items(), 1):
        head = TABLE_HEADERS[name]
        widths = [max(len(x) for x in col) for col in zip(head, *rows)]
        fmt_row = lambda r: " | ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip()
        body = [f"Table {i}. {TABLE_TITLES[name]}", fmt_row(head),
                "-+-".join("-" * w for w in widths)] + [fmt_row(r) for r in rows]
        blocks.append("\n".join(body))
    return {"tables.txt": "\n\n".join(blocks) + "\n"}


def cmd_tables(args) -> tuple[str, int]:
    files = render_tables(build_tables(args.canonical), args.format)
    if args.check:
        golden = Path(args.check)
        bad = []
        for name, content in files.items():
            path = golden / name
            if not path.is_file() or path.read_bytes() != content.encode("utf-8"):
                bad.append(name)
        if bad:
            return "golden mismatch: " + ", ".join(bad) + "\n", 1
        return "golden match: " + ", ".join(files) + "\n", 0
    out_dir = args.out_dir
    if out_dir is None and args.format == "csv":
        out_dir = "."
    if out_dir is None:
        return "".join(files.values()), 0
    root = Path(out_dir)
    root.mkdir(parents=True, exist_ok=True)
    for name, content in files.items():
        (root / name).write_bytes(content.encode("utf-8"))
    return "".join(f"wrote {root / name}\n" for name in files), 0


# -- entry point ----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncinv", description="Invariants of dihedral groups in C<u,v>.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n_default=None):
        p.add_argument("--n", type=int, required=n_default is None, default=n_default)
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")

    p = sub.add_parser("hilbert", help="Hilbert series, coefficients and recurrence")
    common(p)
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--canonical", action="store_true", help="print the normalized internal form")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("gens", help="generator series and free generators")
    common(p)
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--leading-terms", action="store_true")
    p.add_argument("--canonical", action="store_true")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("verify", help="run verification suites")
    common(p, n_default=3)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--which", choices=("all",) + SUITES, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="regenerate the four tables")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out-dir", default=None)
    p.add_argument("--canonical", action="store_true")
    p.add_argument("--check", metavar="DIR", default=None,
                   help="compare byte-for-byte with fixtures in DIR instead of writing")
    p.set_defaults(func=cmd_tables)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, status = args.func(args)
    except UsageError as exc:
        print(f"ncinv {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
