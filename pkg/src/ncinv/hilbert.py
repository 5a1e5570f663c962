"""Hilbert series of C<u,v>^{D_2n}, computed three independent ways, and
the generating function of its free generators.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from . import _dense
from .cyclotomic import CycloNum, cyclo
from .freealg import dihedral_group
from .ratfunc import QPoly, QRatFunc, psi_product

__all__ = [
    "RationalityError",
    "dicks_formanek",
    "hilbert_series",
    "hilbert_closed_form",
    "bc_components",
    "bc_direct",
    "hilbert_via_BC",
    "generator_series",
]


class RationalityError(ArithmeticError):
    """A quantity that must lie in Q came out irrational: an internal bug."""


def _certify(coeffs: list[CycloNum], what: str) -> QPoly:
    out = []
    for i, c in enumerate(coeffs):
        if not isinstance(c, CycloNum):
            out.append(Fraction(c))
            continue
        if not c.is_rational():
            raise RationalityError(f"{what}: coefficient of t^{i} is {c}, not rational")
        out.append(c.coeffs[0])
    return QPoly(out)


def _sum_simple_fractions(weights: dict[CycloNum, Fraction], n: int) -> QRatFunc:
    """sum_c w_c / (1 - c t) over Q(xi_n), certified rational."""
    one = CycloNum.rational(n, 1)
    factors = {c: [one, -c] for c in weights}
    den = [one]
    for f in factors.values():
        den = _dense.mul(den, f)
    num: list = []
    for c, w in weights.items():
        if not w:
            continue
        part = [one * w]
        for c2, f in factors.items():
            if c2 != c:
                part = _dense.mul(part, f)
        num = _dense.add(num, part)
    return QRatFunc(_certify(num, "numerator"), _certify(den, "denominator"))


def dicks_formanek(traces) -> QRatFunc:
    """(1/|G|) sum_g 1/(1 - tr(g) t) for the multiset of traces of a finite group."""
    traces = list(traces)
    if not traces:
        raise ValueError("empty group")
    n = traces[0].order
    counts = Counter(traces)
    return _sum_simple_fractions({c: Fraction(m, len(traces)) for c, m in counts.items()}, n)


def _check_n(n: int):
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")


def hilbert_series(n: int) -> QRatFunc:
    """H_2n(t) from the group sum over the 2n matrices of D_2n."""
    _check_n(n)
    return dicks_formanek(g.trace() for g in dihedral_group(n))


def _two_cos(n: int, k: int) -> CycloNum:
    return cyclo(n, k) + cyclo(n, -k)


def hilbert_closed_form(n: int) -> QRatFunc:
    """H_2n(t) assembled from the reduced cosine sum over k = 1..m.

    Odd n = 2m+1: 1/2 + 1/(2n(1-2t)) + (1/n) sum_k 1/(1-2cos(2k pi/n) t).
    Even n = 2m+2 (n = 4 included): the same plus 1/(2n(1+2t)).
    """
    _check_n(n)
    m = (n - 1) // 2 if n % 2 else (n - 2) // 2
    weights: dict[CycloNum, Fraction] = {
        CycloNum.rational(n, 0): Fraction(1, 2),
        CycloNum.rational(n, 2): Fraction(1, 2 * n),
    }
    if n % 2 == 0:
        weights[CycloNum.rational(n, -2)] = Fraction(1, 2 * n)
    for k in range(1, m + 1):
        c = _two_cos(n, k)
        weights[c] = weights.get(c, Fraction(0)) + Fraction(1, n)
    return _sum_simple_fractions(weights, n)


def _elementary_from_monic(p: QPoly) -> list[Fraction]:
    # p = t^r - e1 t^(r-1) + e2 t^(r-2) - ...
    r = p.degree
    return [(-1) ** j * p[r - j] for j in range(r + 1)]


def bc_components(n: int) -> tuple[QPoly, QPoly]:
    """(B, C) with A(t) = sum_k 1/(1 - 2cos(2k pi/n) t) = B/C, k = 0..floor(n/2).

    C(t) = t^r Psi_n(1/t) with Psi_n the divisor product of the psi_d, and
    B(t) = sum_j (-1)^j (r - j) sigma_j t^j where r = deg Psi_n and sigma_j
    are the elementary symmetric functions of the roots of Psi_n.
    Everything is rational; no cyclotomic arithmetic is involved.
    """
    psi = psi_product(n)
    r = psi.degree
    sigma = _elementary_from_monic(psi)
    B = QPoly([(-1) ** j * (r - j) * sigma[j] for j in range(r)])
    C = psi.reversed(r)
    return B, C


def bc_direct(n: int) -> tuple[QPoly, QPoly]:
    """(B, C) expanded from their defining products over Q(xi_n).

    C = prod_k (1 - c_k t), B = sum_s prod_{k != s} (1 - c_k t), with
    c_k = xi^k + xi^-k for k = 0..floor(n/2).
    """
    one = CycloNum.rational(n, 1)
    roots = [_two_cos(n, k) for k in range(n // 2 + 1)]
    C = [one]
    for c in roots:
        C = _dense.mul(C, [one, -c])
    B: list = []
    for s in range(len(roots)):
        part = [one]
        for k, c in enumerate(roots):
            if k != s:
                part = _dense.mul(part, [one, -c])
        B = _dense.add(B, part)
    return _certify(B, "B(t)"), _certify(C, "C(t)")


def hilbert_via_BC(n: int) -> QRatFunc:
    """H_2n = 1/2 - (boundary terms) + (1/n) B/C.

    Odd n: boundary term 1/(2n(1-2t)). Even n: the cosine list contains both
    2 and -2, and the boundary is (1/2n)(1/(1-2t) + 1/(1+2t)).
    """
    _check_n(n)
    B, C = bc_components(n)
    boundary = QRatFunc(QPoly([1]), QPoly([1, -2]))
    if n % 2 == 0:
        boundary = boundary + QRatFunc(QPoly([1]), QPoly([1, 2]))
    return QRatFunc(Fraction(1, 2)) - boundary * Fraction(1, 2 * n) + QRatFunc(B, C) * Fraction(1, n)


def generator_series(n: int) -> QRatFunc:
    """G_2n = 1 - 1/H_2n, counting free generators by degree."""
    H = hilbert_series(n)
    return QRatFunc(H.num - H.den, H.num)
