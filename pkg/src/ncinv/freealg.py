"""The free algebra C<u,v> over Q(xi_n) and the dihedral action on it.

D_2n acts through rho: u -> xi u, v -> xi^(-1) v and tau: u <-> v.
Composition convention: ``g * h`` is "apply h's substitution, then g's",
so ``act(g, act(h, p)) == act(g * h, p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational

from .cyclotomic import CycloNum, OrderMismatchError, cyclo
from .span import DegreeSpan
from .words import (
    all_words,
    grading_ok,
    leading_word,
    parse_word,
    render_word,
    sorted_desc,
    swap,
)

__all__ = [
    "NcPoly",
    "GroupElement",
    "dihedral_group",
    "act",
    "reynolds",
    "invariant_dimension_by_counting",
    "invariant_basis",
    "reynolds_rank",
    "s_elem",
    "power_sum",
    "p_pair",
    "p_pair_listed",
]


def _scalar(n: int, c) -> CycloNum:
    if isinstance(c, CycloNum):
        if c.order != n:
            raise OrderMismatchError(f"coefficient in Q(xi_{c.order}) for a polynomial over Q(xi_{n})")
        return c
    return CycloNum.rational(n, c)


class NcPoly:
    """Finite linear combination of words with coefficients in Q(xi_n)."""

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms=None):
        self.order = order
        acc: dict[str, CycloNum] = {}
        for w, c in (terms or {}).items():
            c = _scalar(order, c)
            if c:
                acc[w] = c
        self.terms = acc

    @classmethod
    def word(cls, order: int, w: str, c=1) -> NcPoly:
        return cls(order, {w: c})

    @classmethod
    def parse(cls, order: int, text: str) -> NcPoly:
        """Inverse of ``str``: ``"u^2v^2 + v^2u^2"``, ``"1/2*uv - (xi+1)*vu"``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls(order)
        if s[0] not in "+-":
            s = "+" + s
        term = re.compile(r"([+-])(?:(\d+(?:/\d+)?)\*?|\(([^()]*)\)\*?)?((?:[uv](?:\^\d+)?)+|1)?")
        out: dict[str, CycloNum] = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
            if m.group(4) is None and m.group(2) is None and m.group(3) is None:
                raise ValueError(f"cannot parse {text!r} at {s[pos:]!r}")
            if m.group(3) is not None:
                c = _parse_cyclo(order, m.group(3))
            else:
                c = CycloNum.rational(order, Fraction(m.group(2)) if m.group(2) else 1)
            if m.group(1) == "-":
                c = -c
            w = parse_word(m.group(4) or "1")
            out[w] = out.get(w, CycloNum.rational(order, 0)) + c
            pos = m.end()
        return cls(order, out)

    @classmethod
    def from_rational(cls, order: int, vec: dict) -> NcPoly:
        return cls(order, vec)

    def rational_terms(self) -> dict[str, Fraction]:
        out = {}
        for w, c in self.terms.items():
            if not c.is_rational():
                raise ValueError(f"coefficient {c} of {w!r} is not rational")
            out[w] = c.coeffs[0]
        return out

    def _check(self, other: NcPoly):
        if other.order != self.order:
            raise OrderMismatchError(f"polynomials over Q(xi_{self.order}) and Q(xi_{other.order})")

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NcPoly(self.order, out)

    def __neg__(self):
        return NcPoly(self.order, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            self._check(other)
            out: dict[str, CycloNum] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    out[w] = out[w] + c if w in out else c
            return NcPoly(self.order, out)
        if isinstance(other, (Rational, CycloNum)):
            c = _scalar(self.order, other)
            return NcPoly(self.order, {w: a * c for w, a in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Rational, CycloNum)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return self * (1 / _scalar(self.order, other))

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, w: str) -> CycloNum:
        return self.terms.get(w, CycloNum.rational(self.order, 0))

    @property
    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    @property
    def degree(self) -> int:
        """Degree of a homogeneous polynomial (0 for the zero polynomial)."""
        degs = self.degrees
        if len(degs) > 1:
            raise ValueError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def leading_word(self) -> str:
        if not self.terms:
            raise ValueError("zero polynomial has no leading word")
        return leading_word(self.terms)

    def monic(self) -> NcPoly:
        """Rescaled so the leading coefficient is 1."""
        return self / self.terms[self.leading_word()]

    def swap(self) -> NcPoly:
        return NcPoly(self.order, {swap(w): c for w, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for w in sorted_desc(self.terms):
            c = self.terms[w]
            body = render_word(w)
            if c.is_rational():
                q = c.coeffs[0]
                sign, mag = ("-" if q < 0 else "+"), abs(q)
                text = body if mag == 1 and w else (f"{mag}" if not w else f"{mag}*{body}")
            else:
                sign, text = "+", f"({c})*{body}" if w else f"({c})"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"NcPoly({self.order}, {str(self)!r})"


def _parse_cyclo(n: int, text: str) -> CycloNum:
    acc = CycloNum.rational(n, 0)
    s = text if text[0] in "+-" else "+" + text
    for sign, num, power in re.findall(r"([+-])(\d+(?:/\d+)?)?\*?(xi(?:\^\d+)?)?", s):
        if not num and not power:
            continue
        c = Fraction(num) if num else Fraction(1)
        k = 0 if not power else (int(power[3:]) if "^" in power else 1)
        term = cyclo(n, k) * c
        acc = acc - term if sign == "-" else acc + term
    return acc


@dataclass(frozen=True)
class GroupElement:
    """Linear substitution u -> a u + c v, v -> b u + d v.

    ``matrix`` is ((a, b), (c, d)): column j holds the image of the j-th letter.
    """

    matrix: tuple[tuple[CycloNum, CycloNum], tuple[CycloNum, CycloNum]]
    label: str = ""

    @property
    def order(self) -> int:
        return self.matrix[0][0].order

    def __mul__(self, other: GroupElement) -> GroupElement:
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        label = f"{self.label}{other.label}" if self.label and other.label else ""
        return GroupElement(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), label)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def trace(self) -> CycloNum:
        return self.matrix[0][0] + self.matrix[1][1]

    def determinant(self) -> CycloNum:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def is_identity(self) -> bool:
        (a, b), (c, d) = self.matrix
        return a == 1 and d == 1 and not b and not c

    def image(self, letter: str) -> list[tuple[str, CycloNum]]:
        col = 0 if letter == "u" else 1
        out = []
        if self.matrix[0][col]:
            out.append(("u", self.matrix[0][col]))
        if self.matrix[1][col]:
            out.append(("v", self.matrix[1][col]))
        return out

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        one, zero = CycloNum.rational(n, 1), CycloNum.rational(n, 0)
        return cls(((one, zero), (zero, one)), "1")

    def __repr__(self):
        (a, b), (c, d) = self.matrix
        return f"GroupElement({self.label or '?'}: [[{a}, {b}], [{c}, {d}]])"


def rho(n: int) -> GroupElement:
    zero = CycloNum.rational(n, 0)
    return GroupElement(((cyclo(n, 1), zero), (zero, cyclo(n, -1))), "r")


def tau(n: int) -> GroupElement:
    one, zero = CycloNum.rational(n, 1), CycloNum.rational(n, 0)
    return GroupElement(((zero, one), (one, zero)), "t")


@lru_cache(maxsize=None)
def dihedral_group(n: int) -> tuple[GroupElement, ...]:
    """rho^k for k < n followed by rho^k tau for k < n."""
    if n < 3:
        raise ValueError(f"dihedral group needs n >= 3, got {n}")
    zero = CycloNum.rational(n, 0)
    rotations = [GroupElement(((cyclo(n, k), zero), (zero, cyclo(n, -k))), f"r^{k}") for k in range(n)]
    reflections = [GroupElement(((zero, cyclo(n, k)), (cyclo(n, -k), zero)), f"r^{k}t") for k in range(n)]
    return tuple(rotations + reflections)


def act(g: GroupElement, p: NcPoly) -> NcPoly:
    """Apply the algebra endomorphism extending the substitution ``g``."""
    if g.order != p.order:
        raise OrderMismatchError(f"group over Q(xi_{g.order}) acting on polynomial over Q(xi_{p.order})")
    images = {"u": g.image("u"), "v": g.image("v")}
    out: dict[str, CycloNum] = {}
    for w, c in p.terms.items():
        partial = {"": c}
        for letter in w:
            nxt: dict[str, CycloNum] = {}
            for prefix, coeff in partial.items():
                for x, a in images[letter]:
                    key = prefix + x
                    val = coeff * a
                    nxt[key] = nxt[key] + val if key in nxt else val
            partial = nxt
        for key, val in partial.items():
            out[key] = out[key] + val if key in out else val
    return NcPoly(p.order, out)


def reynolds(p: NcPoly, n: int) -> NcPoly:
    """Average of ``p`` over D_2n, the projection onto the invariants."""
    if p.order != n:
        raise OrderMismatchError(f"polynomial over Q(xi_{p.order}) averaged over D_{2 * n}")
    group = dihedral_group(n)
    acc = NcPoly(n)
    for g in group:
        acc = acc + act(g, p)
    return acc * Fraction(1, len(group))


def invariant_dimension_by_counting(n: int, k: int) -> int:
    """Half the number of length-k words with deg_u - deg_v divisible by n."""
    if k == 0:
        return 1
    total = sum(comb(k, j) for j in range(k + 1) if (2 * j - k) % n == 0)
    return total // 2


@lru_cache(maxsize=None)
def _orbit_words(n: int, k: int) -> tuple[str, ...]:
    """Grading-admissible words of length k starting with u, greatest first."""
    if k == 0:
        return ("",)
    return tuple(sorted_desc(w for w in all_words(k) if w[0] == "u" and grading_ok(w, n)))


def invariant_basis(n: int, k: int) -> DegreeSpan:
    """Basis {w + swap(w)} of the degree-k invariants, over Q."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    span = DegreeSpan(k, n)
    one = Fraction(1)
    for w in _orbit_words(n, k):
        span.add({w: one} if not w else {w: one, swap(w): one})
    return span


def reynolds_rank(n: int, k: int) -> int:
    """Rank of {reynolds(w) : w a word of length k}, computed over Q(xi_n)."""
    span = DegreeSpan(k, n)
    for w in all_words(k):
        span.add(reynolds(NcPoly.word(n, w), n))
    return span.dim


def s_elem(a: int, n: int) -> NcPoly:
    """u^a v^a + v^a u^a."""
    return NcPoly(n, {"u" * a + "v" * a: 1}) + NcPoly(n, {"v" * a + "u" * a: 1})


def power_sum(m: int, n: int) -> NcPoly:
    """u^m + v^m."""
    return NcPoly(n, {"u" * m: 1}) + NcPoly(n, {"v" * m: 1})


def p_pair(b: int, c: int, n: int) -> NcPoly:
    """u^b v^c + v^b u^c, the swap-symmetric pair element."""
    return NcPoly(n, {"u" * b + "v" * c: 1}) + NcPoly(n, {"v" * b + "u" * c: 1})


def p_pair_listed(a: int, b: int, n: int) -> NcPoly:
    """u^a v^b + v^b u^a.

    Differs from ``p_pair(a, b)`` unless a == b, and is not fixed by
    u <-> v in that case; kept for comparison only.
    """
    return NcPoly(n, {"u" * a + "v" * b: 1}) + NcPoly(n, {"v" * b + "u" * a: 1})
