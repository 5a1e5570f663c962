"""Homogeneous free generators of C<u,v>^{D_2n}, extracted degree by degree.

The invariants of degree k split as decomposables (sums of products of
invariants of lower positive degree) plus a complement; the complement
vectors are the new free generators. Since the invariant algebra is free,
the decomposables of degree k are already spanned by ``g * b`` with g a
generator of degree i < k and b in the invariant basis of degree k - i.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import NcPoly, _orbit_words, invariant_basis
from .hilbert import generator_series, hilbert_series
from .ratfunc import series_coefficients
from .span import DegreeSpan
from .words import render_word, runs, sorted_desc, swap

__all__ = [
    "GeneratorCountMismatch",
    "GeneratorRow",
    "GeneratorTable",
    "free_generators",
    "basis_leading_terms",
    "fibonacci_check",
    "basis_count_check",
    "freeness_check",
    "table3_pattern_report",
    "RULES",
]

RULES = ("fewest_runs", "echelon")


class GeneratorCountMismatch(ArithmeticError):
    """Extracted generator count disagrees with the generator series."""


def _orbit_vec(p: str) -> dict:
    one = Fraction(1)
    return {p: one} if p == swap(p) else {p: one, swap(p): one}


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return {w: c for w, c in out.items() if c}


def format_word_set(words) -> str:
    words = list(words)
    if not words:
        return "-"
    return "{" + ", ".join(render_word(w) for w in words) + "}"


@dataclass
class GeneratorRow:
    degree: int
    count: int
    leading_words: list[str]
    witnesses: list[NcPoly] = field(default_factory=list, repr=False)


@dataclass
class GeneratorTable:
    order: int
    max_degree: int
    rule: str
    rows: list[GeneratorRow]

    def counts(self) -> list[int]:
        return [r.count for r in self.rows]

    def row(self, k: int) -> GeneratorRow:
        return self.rows[k - 1]

    def leading_terms(self, k: int) -> list[str]:
        return self.row(k).leading_words

    def generators(self) -> list[NcPoly]:
        return [g for r in self.rows for g in r.witnesses]

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "max_degree": self.max_degree,
            "rule": self.rule,
            "degrees": [
                {"degree": r.degree, "count": r.count,
                 "leading_terms": [render_word(w) for w in r.leading_words],
                 "generators": [str(g) for g in r.witnesses]}
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["degree", "count", "leading_terms"])
        for r in self.rows:
            out.writerow([r.degree, r.count, format_word_set(r.leading_words)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"free generators of C<u,v>^D_{2 * self.order} (rule: {self.rule})",
                 f"{'d':>3}  {'no':>4}  leading terms"]
        for r in self.rows:
            lines.append(f"{r.degree:>3}  {r.count:>4}  {format_word_set(r.leading_words)}")
        return "\n".join(lines)


def _complement(invariant_words, dec: DegreeSpan, rule: str) -> list[str]:
    if rule == "echelon":
        pivots = set(dec.pivots)
        return [p for p in invariant_words if p not in pivots]
    if rule != "fewest_runs":
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    work = dec.copy()
    chosen = []
    for p in sorted(sorted_desc(invariant_words), key=runs):
        if work.add(_orbit_vec(p)):
            chosen.append(p)
    return chosen


def free_generators(n: int, D: int, rule: str = "fewest_runs", witnesses: bool = True) -> GeneratorTable:
    """Degree-wise complement of the decomposables, for degrees 1..D.

    Each generator is an orbit sum p + swap(p) with leading word p, so the
    leading words in a degree are distinct.

    ``rule="fewest_runs"`` scans the orbit words by number of letter blocks
    (then deglex, greatest first) and keeps every one independent of the
    decomposables and the earlier picks; this is the choice displayed for
    D_6. ``rule="echelon"`` keeps exactly the words that are not pivots of
    the reduced decomposable span.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if D < 2:
        raise ValueError(f"need D >= 2, got {D}")
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    expected = series_coefficients(generator_series(n), D)
    gens: dict[int, list[str]] = {}
    rows = []
    for k in range(1, D + 1):
        dec = DegreeSpan(k, n)
        for i in range(2, k - 1):
            right = [_orbit_vec(q) for q in _orbit_words(n, k - i)]
            for g in gens.get(i, ()):
                gv = _orbit_vec(g)
                for b in right:
                    dec.add(_mul(gv, b))
        words = _orbit_words(n, k)
        picked = sorted_desc(_complement(words, dec, rule))
        if len(picked) != expected[k]:
            raise GeneratorCountMismatch(
                f"n = {n}, degree {k}: extracted {len(picked)} generators, series says {expected[k]}")
        gens[k] = picked
        wit = [NcPoly.from_rational(n, _orbit_vec(p)) for p in picked] if witnesses else []
        rows.append(GeneratorRow(k, len(picked), picked, wit))
    return GeneratorTable(n, D, rule, rows)


def basis_leading_terms(n: int, k: int) -> list[str]:
    """Pivot words of the reduced invariant basis in degree k, greatest first."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    return invariant_basis(n, k).pivots


@dataclass
class CountCheck:
    name: str
    counts: list[int]
    expected: list[int]
    recurrence_ok: bool

    @property
    def matches(self) -> bool:
        return self.counts == self.expected

    @property
    def passed(self) -> bool:
        return self.matches and self.recurrence_ok


def _fib(count: int) -> list[int]:
    out = [1, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def fibonacci_check(D: int, table: GeneratorTable | None = None) -> CountCheck:
    """Generator counts of D_6 at degrees 2..D against 1, 1, 2, 3, 5, ...

    Also checks a_{k+2} = 2a_k + a_{k-1} on the computed counts wherever
    the target index is at least 4 (a_3 = 1 breaks it below that).
    """
    if D < 2:
        raise ValueError(f"need D >= 2, got {D}")
    table = table or free_generators(3, D, witnesses=False)
    a = [0] + table.counts()[:D]
    ok = all(a[m] == 2 * a[m - 2] + a[m - 3] for m in range(4, D + 1))
    return CountCheck("fibonacci", a[2:], _fib(D - 1), ok)


def basis_count_check(D: int) -> CountCheck:
    """Invariant dimensions of D_6 against the Hilbert series, with
    a_{k+2} = 3a_k + 2a_{k-1} checked for target index at least 4."""
    h = series_coefficients(hilbert_series(3), D)
    dims = [invariant_basis(3, k).dim for k in range(D + 1)]
    ok = all(dims[m] == 3 * dims[m - 2] + 2 * dims[m - 3] for m in range(4, D + 1))
    return CountCheck("basis", dims, [int(c) for c in h], ok)


def freeness_check(n: int, D: int, table: GeneratorTable | None = None) -> dict[int, tuple[int, int]]:
    """Per degree k: (rank of all generator monomials of degree k, dim of invariants).

    Equal pairs at every degree mean the extracted generators span and
    their monomials are linearly independent.
    """
    table = table or free_generators(n, D)
    by_deg = {r.degree: [g.rational_terms() for g in r.witnesses] for r in table.rows}
    monos: dict[int, list[dict]] = {0: [{"": Fraction(1)}]}
    out = {}
    for k in range(1, D + 1):
        monos[k] = [_mul(g, m) for i in range(1, k + 1) for g in by_deg.get(i, ()) for m in monos[k - i]]
        span = DegreeSpan(k, n, monos[k])
        out[k] = (span.dim, invariant_basis(n, k).dim)
    return out


def table3_pattern_report(D: int, table: GeneratorTable | None = None) -> dict[int, list[str]]:
    """Leading words at degree k outside {(uv)w, w(uv) : w in LT_(k-2)} and {(u^3)w' : w' in LT_(k-3)}.

    Reported, not asserted: the displayed degree-4 and degree-5 sets already
    contain words outside this pattern.
    """
    table = table or free_generators(3, D, witnesses=False)
    lt = {r.degree: set(r.leading_words) for r in table.rows}
    out = {}
    for k in range(4, D + 1):
        pattern = {"uv" + w for w in lt.get(k - 2, ())} | {w + "uv" for w in lt.get(k - 2, ())}
        pattern |= {"uuu" + w for w in lt.get(k - 3, ())}
        out[k] = sorted_desc(lt[k] - pattern)
    return out

