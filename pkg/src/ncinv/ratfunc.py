"""Univariate polynomials and rational functions over Q, power series,
linear recurrences, Chebyshev polynomials and the minimal polynomials
psi_n of 2*cos(2*pi/n).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import NamedTuple

from . import _dense
from .cyclotomic import CycloNum, cyclotomic_poly, cyclo, divisors, euler_phi

__all__ = [
    "QPoly",
    "QRatFunc",
    "Recurrence",
    "series_coefficients",
    "recurrence_from_ratfunc",
    "ratfunc_from_recurrence",
    "chebyshev_T",
    "psi_min_poly",
    "psi_product",
    "psi_root_certified",
    "lehmer_check",
    "psi_root_product_report",
    "watkins_zeitlin_check",
    "same_up_to_scalar",
]


class QPoly:
    """Polynomial with rational coefficients, ``coeffs[i]`` multiplies t^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(Fraction(c) for c in _dense.strip(list(coeffs)))

    @classmethod
    def monomial(cls, k: int, c=1) -> QPoly:
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str, var: str = "t") -> QPoly:
        """Parse strings such as ``"2t^4-4t^2+1"`` or ``"1 - 3*t^2"``."""
        s = text.replace(" ", "").replace("*", "").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        term = re.compile(rf"([+-])(\d+(?:/\d+)?)?({re.escape(var)}(?:\^(\d+))?)?")
        coeffs: dict[int, Fraction] = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
            c = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(1) == "-":
                c = -c
            k = 0 if m.group(3) is None else int(m.group(4) or 1)
            coeffs[k] = coeffs.get(k, 0) + c
            pos = m.end()
        top = max(coeffs)
        return cls([coeffs.get(i, 0) for i in range(top + 1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def _lift(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPoly(_dense.add(list(self.coeffs), list(other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPoly(_dense.sub(list(self.coeffs), list(other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPoly(_dense.mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = QPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other):
        q, r = _dense.divmod_(list(self.coeffs), list(self._lift(other).coeffs))
        return QPoly(q), QPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        return _dense.evaluate(list(self.coeffs), x)

    def gcd(self, other: QPoly) -> QPoly:
        return QPoly(_dense.gcd(list(self.coeffs), list(other.coeffs)))

    def scale_var(self, c) -> QPoly:
        """p(c*t)."""
        return QPoly([a * Fraction(c) ** i for i, a in enumerate(self.coeffs)])

    def reversed(self, degree: int | None = None) -> QPoly:
        """t^degree * p(1/t); ``degree`` defaults to deg p."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return QPoly(padded[::-1])

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_str(self, var: str = "t", ascending: bool = False) -> str:
        items = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if not items:
            return "0"
        if not ascending:
            items.reverse()
        out = []
        for i, c in items:
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else "+"
            out.append(sign + body if out or sign == "-" else body)
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"QPoly({self.to_str()!r})"


def same_up_to_scalar(num_a: QPoly, den_a: QPoly, num_b: QPoly, den_b: QPoly) -> bool:
    """True when (num_a, den_a) = c * (num_b, den_b) for a nonzero rational c."""
    if not den_a or not den_b:
        return False
    c = den_a.coeffs[-1] / den_b.coeffs[-1]
    return den_a == den_b * c and num_a == num_b * c


class QRatFunc:
    """Rational function num/den over Q in lowest terms with den(0) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, QPoly) else QPoly(num if isinstance(num, (list, tuple)) else [num])
        den = QPoly([1]) if den is None else (den if isinstance(den, QPoly) else QPoly(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = QPoly(), QPoly([1])
            return
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        d0 = den[0]
        if d0 == 0:
            raise ValueError("denominator vanishes at t = 0; no power series expansion")
        self.num = QPoly([c / d0 for c in num.coeffs])
        self.den = QPoly([c / d0 for c in den.coeffs])

    @classmethod
    def parse(cls, num: str, den: str) -> QRatFunc:
        return cls(QPoly.parse(num), QPoly.parse(den))

    def _lift(self, other):
        if isinstance(other, QRatFunc):
            return other
        if isinstance(other, (int, Fraction, QPoly)):
            return QRatFunc(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QRatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return QRatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return QRatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"QRatFunc(({self.num.to_str(ascending=True)})/({self.den.to_str(ascending=True)}))"


def series_coefficients(f: QRatFunc, N: int) -> list[Fraction]:
    """Taylor coefficients a_0..a_N of f at t = 0."""
    den = f.den.coeffs
    out: list[Fraction] = []
    for i in range(N + 1):
        acc = f.num[i]
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc)
    return out


@dataclass(frozen=True)
class Recurrence:
    """a_i = sum_j coeffs[j-1] * a_{i-j} for every i >= threshold.

    ``initial`` holds a_0 .. a_{threshold-1}.
    """

    coeffs: tuple[Fraction, ...]
    initial: tuple[Fraction, ...]
    threshold: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "initial", tuple(Fraction(c) for c in self.initial))
        if self.threshold < 0:
            object.__setattr__(self, "threshold", len(self.initial))
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("recurrence needs order >= 1 and a nonzero last coefficient")
        if self.threshold < self.order:
            raise ValueError("validity threshold must be at least the order")
        if len(self.initial) != self.threshold:
            raise ValueError("need exactly `threshold` initial values")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def characteristic_poly(self) -> QPoly:
        """x^k - sum_j A_j x^(k-j)."""
        k = self.order
        return QPoly([-self.coeffs[k - i - 1] for i in range(k)] + [1])

    def terms(self, count: int) -> list[Fraction]:
        out = list(self.initial[:count])
        while len(out) < count:
            i = len(out)
            out.append(sum((a * out[i - j] for j, a in enumerate(self.coeffs, 1)), Fraction(0)))
        return out

    def to_str(self, index: str = "m") -> str:
        k = self.order
        rhs = []
        for j, a in enumerate(self.coeffs, 1):
            if not a:
                continue
            shift = k - j
            name = f"a_{{{index}+{shift}}}" if shift else f"a_{index}"
            mag = abs(a)
            body = name if mag == 1 else f"{mag}{name}"
            if rhs:
                rhs.append(f" {'-' if a < 0 else '+'} {body}")
            else:
                rhs.append(("-" if a < 0 else "") + body)
        return f"a_{{{index}+{k}}} = " + "".join(rhs)


def recurrence_from_ratfunc(f: QRatFunc) -> Recurrence:
    """Recurrence read off the denominator, valid for i >= max(k, s+1)."""
    k, s = f.den.degree, f.num.degree
    if k < 1:
        raise ValueError(
            "denominator is constant in lowest terms: the expansion is a polynomial, no recurrence"
        )
    d = f.den.coeffs
    coeffs = [-d[j] / d[0] for j in range(1, k + 1)]
    threshold = max(k, s + 1)
    return Recurrence(tuple(coeffs), tuple(series_coefficients(f, threshold - 1)), threshold)


def ratfunc_from_recurrence(r: Recurrence) -> QRatFunc:
    den = QPoly([1] + [-a for a in r.coeffs])
    a = r.initial
    num = []
    for i in range(r.threshold):
        num.append(a[i] - sum((r.coeffs[j - 1] * a[i - j] for j in range(1, min(i, r.order) + 1)), Fraction(0)))
    return QRatFunc(QPoly(num), den)


@lru_cache(maxsize=None)
def chebyshev_T(k: int) -> QPoly:
    if k < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if k == 0:
        return QPoly([1])
    if k == 1:
        return QPoly([0, 1])
    return QPoly([0, 2]) * chebyshev_T(k - 1) - chebyshev_T(k - 2)


@lru_cache(maxsize=None)
def psi_min_poly(n: int) -> QPoly:
    """Minimal polynomial of 2*cos(2*pi/n) over Q.

    For n >= 3 the symmetric Laurent polynomial z^(-phi/2) Phi_n(z) is
    rewritten in powers of x = z + 1/z by peeling off the top power.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return QPoly([-2, 1])
    if n == 2:
        return QPoly([2, 1])
    phi = list(cyclotomic_poly(n).coeffs)
    d = (len(phi) - 1) // 2
    laurent = [Fraction(c) for c in phi]  # index i <-> z^(i - d)
    psi = [Fraction(0)] * (d + 1)
    for j in range(d, -1, -1):
        c = laurent[j + d]
        psi[j] = c
        if c:
            for i in range(j + 1):
                laurent[j - 2 * i + d] -= c * comb(j, i)
    if any(laurent):
        raise ArithmeticError(f"Phi_{n} is not palindromic")
    return QPoly(psi)


def psi_root_certified(n: int) -> bool:
    """psi_n(xi + 1/xi) == 0 exactly in Q(xi_n)."""
    x = cyclo(n, 1) + cyclo(n, -1)
    return not psi_min_poly(n)(x)


def lehmer_check(n: int) -> bool:
    """z^(phi(n)/2) psi_n(z + 1/z) == Phi_n(z) as integer polynomials.

    For n = 1, 2 the degree phi(n)/2 is not an integer; the identity is
    checked in its squared form z * psi_n(z + 1/z) == Phi_n(z)^2.
    """
    psi = psi_min_poly(n)
    phi = QPoly(cyclotomic_poly(n).coeffs)
    d, target = (1, phi * phi) if n <= 2 else (euler_phi(n) // 2, phi)
    z2p1 = QPoly([1, 0, 1])
    lhs = QPoly()
    for j, c in enumerate(psi.coeffs):
        if c:
            lhs = lhs + (z2p1 ** j) * QPoly.monomial(d - j, c)
    return lhs == target


@lru_cache(maxsize=None)
def psi_product(n: int) -> QPoly:
    """prod_{d | n} psi_d(t)."""
    out = QPoly([1])
    for d in divisors(n):
        out = out * psi_min_poly(d)
    return out


class RootProductCheck(NamedTuple):
    n: int
    top_index: int
    convention: str
    holds: bool


def _root_product(n: int, top: int) -> list[CycloNum]:
    poly = [CycloNum.rational(n, 1)]
    for k in range(top + 1):
        root = cyclo(n, k) + cyclo(n, -k)
        poly = _dense.mul(poly, [-root, CycloNum.rational(n, 1)])
    return poly


def psi_root_product_report(n: int) -> list[RootProductCheck]:
    """Compare prod_{k=0}^{M} (t - 2cos(2k*pi/n)) with the divisor product.

    M = floor(n/2) is tried for every n; for even n the index range
    M = (n-2)/2 of the n = 2m+2 parametrisation is reported as well.
    """
    target = psi_product(n)
    tops = [(n // 2, "floor(n/2)")]
    if n % 2 == 0 and n >= 4:
        tops.append(((n - 2) // 2, "(n-2)/2"))
    out = []
    for top, label in tops:
        coeffs = _root_product(n, top)
        holds = all(c.is_rational() for c in coeffs) and QPoly([c.coeffs[0] for c in coeffs]) == target
        out.append(RootProductCheck(n, top, label, holds))
    return out


class WZCheck(NamedTuple):
    item: int
    statement: str
    holds: bool


def watkins_zeitlin_check(n: int) -> list[WZCheck]:
    """Chebyshev identities for the psi products applicable to n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    checks = []
    lhs = psi_product(n).scale_var(2)
    if n % 2:
        m = (n - 1) // 2
        rhs = 2 * (chebyshev_T(m + 1) - chebyshev_T(m))
        checks.append(WZCheck(1, f"prod_{{d|{n}}} psi_d(2t) = 2(T_{m + 1}(t) - T_{m}(t))", lhs == rhs))
    else:
        m = n // 2
        rhs = 2 * (chebyshev_T(m + 1) - chebyshev_T(m - 1))
        checks.append(WZCheck(2, f"prod_{{d|{n}}} psi_d(2t) = 2(T_{m + 1}(t) - T_{m - 1}(t))", lhs == rhs))
    if n >= 2 and n & (n - 1) == 0:
        k = n.bit_length() - 1
        holds = psi_min_poly(2 * n).scale_var(2) == 2 * chebyshev_T(2 ** (k - 1))
        checks.append(WZCheck(3, f"psi_{2 * n}(2t) = 2T_{2 ** (k - 1)}(t)", holds))
    return checks
