"""Position permutations on homogeneous components and S-algebra closure.

``(x_{i_1} ... x_{i_k}) o pi = x_{i_{pi^-1(1)}} ... x_{i_{pi^-1(k)}}``: the
letter in position j moves to position pi(j). With ``pi * sigma`` meaning
"pi first, then sigma" this is a right action:
``s_act(s_act(p, pi), sigma) == s_act(p, pi * sigma)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .freealg import NcPoly, invariant_basis, p_pair, power_sum, s_elem
from .span import DegreeSpan

__all__ = [
    "Permutation",
    "s_act",
    "sym_span_closure",
    "SClosureReport",
    "s_algebra_closure",
    "StepThreeCertificate",
    "step_three_certificate",
    "verify_generation_theorem",
    "TheoremViolation",
]


class TheoremViolation(AssertionError):
    """The closure of the generators is strictly smaller than the invariants."""


class Permutation:
    """Bijection of {1..k}, stored in one-line notation."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(range(1, k + 1))

    @classmethod
    def from_cycles(cls, k: int, *cycles) -> Permutation:
        """Standard cycle notation on positions, e.g. ``from_cycles(5, (1, 4))``."""
        img = list(range(1, k + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> Permutation:
        return cls.from_cycles(k, (i, j))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """``self`` first, then ``other``."""
        if self.size != other.size:
            raise ValueError("permutations of different sizes")
        return Permutation(other(self(i)) for i in range(1, self.size + 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _positions(pi: Permutation) -> list[int]:
    # 0-based source index for each target position
    return [pi.inverse()(j) - 1 for j in range(1, pi.size + 1)]


def _permute_vec(vec: dict, src: list[int]) -> dict:
    return {"".join(w[s] for s in src): c for w, c in vec.items()}


def s_act(p: NcPoly, pi: Permutation) -> NcPoly:
    """Permute letter positions in every word of the homogeneous ``p``."""
    if not p:
        return p
    k = p.degree
    if k != pi.size:
        raise ValueError(f"degree {k} polynomial acted on by a permutation of size {pi.size}")
    return NcPoly(p.order, _permute_vec(p.terms, _positions(pi)))


def _adjacent(k: int) -> list[list[int]]:
    return [_positions(Permutation.transposition(k, i, i + 1)) for i in range(1, k)]


def sym_span_closure(S: DegreeSpan, history: list | None = None) -> DegreeSpan:
    """Smallest subspace containing ``S`` stable under every position permutation.

    Adjacent transpositions generate Sym(k); each round applies them to the
    vectors added in the previous round. ``history`` receives the dimension
    after every round.
    """
    out = S.copy()
    k = S.degree
    if history is not None:
        history.append(out.dim)
    if k < 2 or not out.dim:
        return out
    moves = _adjacent(k)
    frontier = out.rows()
    while frontier:
        new = []
        for vec in frontier:
            for src in moves:
                img = _permute_vec(vec, src)
                if out.add(img):
                    new.append(img)
        frontier = new
        if history is not None and new:
            history.append(out.dim)
    return out


def _vec_product(a: dict, b: dict) -> dict:
    out: dict = {}
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return out


def _coeff_dict(p: NcPoly) -> dict:
    try:
        return p.rational_terms()
    except ValueError:
        return dict(p.terms)


@dataclass
class ClosureRow:
    degree: int
    closure_dim: int
    invariant_dim: int
    equal: bool

    @property
    def status(self) -> str:
        return "equal" if self.equal else "PROPER"


@dataclass
class SClosureReport:
    order: int
    max_degree: int
    rows: list[ClosureRow]
    spans: dict[int, DegreeSpan] = field(repr=False, default_factory=dict)
    history: dict[int, list[int]] = field(repr=False, default_factory=dict)
    certificates: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.rows) and all(c.passed for c in self.certificates)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "max_degree": self.max_degree,
            "degrees": [
                {"degree": r.degree, "closure_dim": r.closure_dim,
                 "invariant_dim": r.invariant_dim, "status": r.status}
                for r in self.rows
            ],
            "certificates": [c.to_dict() for c in self.certificates],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"S-algebra closure, n = {self.order}, degrees 1..{self.max_degree}",
                 f"{'degree':>6}  {'closure':>7}  {'invariants':>10}  status"]
        for r in self.rows:
            lines.append(f"{r.degree:>6}  {r.closure_dim:>7}  {r.invariant_dim:>10}  {r.status}")
        for c in self.certificates:
            lines.append(f"step-3 certificate (b, c) = ({c.b}, {c.c}): {'pass' if c.passed else 'FAIL'}")
        return "\n".join(lines)


def s_algebra_closure(generators, max_degree: int, n: int | None = None) -> SClosureReport:
    """Degree-wise span of the S-subalgebra generated by ``generators``.

    Degree k collects the generators of degree k and all products of closure
    rows of degrees i and k - i, then closes under position permutations.
    Each degree is compared with the invariants of D_2n.
    """
    gens = list(generators)
    if n is None:
        if not gens:
            raise ValueError("order n is required when no generators are given")
        n = gens[0].order
    by_degree: dict[int, list[dict]] = {}
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        if not g:
            continue
        if g.degree < 1:
            raise ValueError("generators must have positive degree")
        by_degree.setdefault(g.degree, []).append(_coeff_dict(g))
    spans: dict[int, DegreeSpan] = {}
    history: dict[int, list[int]] = {}
    rows = []
    for k in range(1, max_degree + 1):
        seed = DegreeSpan(k, n, by_degree.get(k, ()))
        for i in range(1, k):
            left, right = spans[i].rows(), spans[k - i].rows()
            for a in left:
                for b in right:
                    seed.add(_vec_product(a, b))
        hist: list[int] = []
        span = sym_span_closure(seed, hist)
        spans[k], history[k] = span, hist
        inv = invariant_basis(n, k)
        equal = span.dim == inv.dim and inv.contains_span(span)
        rows.append(ClosureRow(k, span.dim, inv.dim, equal))
    return SClosureReport(n, max_degree, rows, spans, history)


@dataclass
class StepThreeCertificate:
    """Replay of the induction step p_(b,c) -> p_(b+1,c+1) inside the closure."""

    b: int
    c: int
    checks: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {"b": self.b, "c": self.c, "checks": self.checks, "passed": self.passed}


def step_three_certificate(b: int, c: int, n: int, spans: dict[int, DegreeSpan]) -> StepThreeCertificate:
    if b < 1 or c < 0:
        raise ValueError("need b >= 1 and c >= 0")
    k = b + c + 2
    s1 = s_elem(1, n)
    p = p_pair(b, c, n)
    x = s1 * p
    x13 = s_act(x, Permutation.transposition(k, 1, 3))
    x23 = s_act(x, Permutation.transposition(k, 2, 3))
    t1 = NcPoly(n, {"uvu" + "u" * (b - 1) + "v" * c: 1, "vuv" + "v" * (b - 1) + "u" * c: 1})
    target = p_pair(b + 1, c + 1, n)
    moved = s_act(t1, Permutation.transposition(k, 2, b + 2))
    closure = spans[k]
    checks = {
        "p_(b,c) in closure": spans[b + c].contains(p.rational_terms()),
        "s1*p_(b,c) in closure": closure.contains(x.rational_terms()),
        "x + x o (13) - x o (23) = 2 (uvuW + vuvW')": x + x13 - x23 == t1 * 2,
        "uvuW + vuvW' in closure": closure.contains(t1.rational_terms()),
        "(uvuW + vuvW') o (2,b+2) = p_(b+1,c+1)": moved == target,
        "p_(b+1,c+1) in closure": closure.contains(target.rational_terms()),
    }
    return StepThreeCertificate(b, c, checks)


def verify_generation_theorem(n: int, max_degree: int, strict: bool = False) -> SClosureReport:
    """Closure of {uv + vu, u^n + v^n} against the invariants up to ``max_degree``.

    Also attaches a step-3 certificate for every (b, c) with b >= 1,
    b = c mod n and b + c + 2 <= max_degree.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if max_degree < n:
        raise ValueError(f"degree cap {max_degree} below the generator degree {n}")
    report = s_algebra_closure([s_elem(1, n), power_sum(n, n)], max_degree, n)
    for b in range(1, max_degree - 1):
        for c in range(0, max_degree - 1 - b):
            if (b - c) % n == 0:
                report.certificates.append(step_three_certificate(b, c, n, report.spans))
    if strict and not report.passed:
        bad = [r.degree for r in report.rows if not r.equal]
        raise TheoremViolation(f"closure is proper at degrees {bad} for n = {n}")
    return report


def worked_example_image() -> NcPoly:
    """(1/2) ((u^3 + v^3)(uv + vu)) o (14) in degree 5."""
    prod = power_sum(3, 3) * s_elem(1, 3)
    return s_act(prod, Permutation.transposition(5, 1, 4)) * Fraction(1, 2)


def worked_example_combination() -> NcPoly:
    """(1/2) (P + P o (14) - P o (15)) for P = (u^3 + v^3)(uv + vu); equals u^4v + v^4u."""
    prod = power_sum(3, 3) * s_elem(1, 3)
    return (prod + s_act(prod, Permutation.transposition(5, 1, 4))
            - s_act(prod, Permutation.transposition(5, 1, 5))) * Fraction(1, 2)
