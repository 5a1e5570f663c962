"""Exact arithmetic in the cyclotomic field Q(xi_n), xi_n = exp(2*pi*i/n).

Elements are stored in the power basis 1, xi, ..., xi^(phi(n)-1) and kept
reduced modulo the cyclotomic polynomial Phi_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

from . import _dense

__all__ = [
    "IntPoly",
    "CycloNum",
    "OrderMismatchError",
    "euler_phi",
    "divisors",
    "cyclotomic_poly",
    "cyclo",
    "as_rational",
    "conjugate",
]


class OrderMismatchError(ValueError):
    """Raised when combining elements of different cyclotomic fields."""


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients low degree first, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in _dense.strip(list(self.coeffs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return _dense.evaluate(list(self.coeffs), x)

    def __str__(self):
        from .ratfunc import QPoly

        return QPoly(self.coeffs).to_str("z")


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """Phi_n, obtained by dividing z^n - 1 by Phi_d for every proper divisor d."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        q, r = _dense.divmod_(num, list(cyclotomic_poly(d).coeffs))
        assert not r
        num = q
    return IntPoly(tuple(num))


@lru_cache(maxsize=None)
def _reduction_data(n: int):
    # Phi_n without its (monic) leading term, used for z^phi -> -sum(c_j z^j)
    phi = cyclotomic_poly(n).coeffs
    return len(phi) - 1, phi[:-1]


def _reduce(coeffs: list, n: int) -> tuple[Fraction, ...]:
    deg, low = _reduction_data(n)
    a = list(coeffs)
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            base = i - deg
            for j, pj in enumerate(low):
                if pj:
                    a[base + j] -= c * pj
    a = a[:deg] + [0] * (deg - len(a))
    return tuple(Fraction(c) for c in a)


class CycloNum:
    """An element of Q(xi_n).

    Supports ``+ - * /``, negation and comparison for equality with other
    elements of the same order, and with Python ints and Fractions (which
    are embedded as rationals).
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError(f"order must be positive, got {order}")
        self.order = order
        self.coeffs = _reduce(list(coeffs), order)
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, order: int, value) -> CycloNum:
        phi = _reduction_data(order)[0]
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (phi - 1))

    def _coerce(self, other) -> CycloNum:
        if isinstance(other, CycloNum):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine elements of Q(xi_{self.order}) and Q(xi_{other.order})"
                )
            return other
        if isinstance(other, Rational):
            return CycloNum.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return CycloNum._raw(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_rational():
            c = other.coeffs[0]
            return CycloNum._raw(self.order, tuple(a * c for a in self.coeffs))
        if self.is_rational():
            c = self.coeffs[0]
            return CycloNum._raw(self.order, tuple(c * b for b in other.coeffs))
        prod = _dense.mul(list(self.coeffs), list(other.coeffs))
        return CycloNum._raw(self.order, _reduce(prod, self.order))

    __rmul__ = __mul__

    def inverse(self) -> CycloNum:
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloNum.rational(self.order, 1 / self.coeffs[0])
        g, s, _ = _dense.ext_gcd(list(self.coeffs), list(cyclotomic_poly(self.order).coeffs))
        assert g == [1]
        return CycloNum(self.order, s)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycloNum._raw(self.order, tuple(a / other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = CycloNum.rational(self.order, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CycloNum):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coeffs))
        return self._hash

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def conjugate(self) -> CycloNum:
        return conjugate(self)

    def __repr__(self):
        return f"CycloNum({self.order}, {self})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[CycloNum, ...]:
    phi = euler_phi(n)
    return tuple(CycloNum(n, [0] * k + [1]) if k >= phi else
                 CycloNum._raw(n, tuple(Fraction(int(i == k)) for i in range(phi)))
                 for k in range(n))


def cyclo(n: int, k: int) -> CycloNum:
    """xi_n ** k, for any integer k."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return _power_table(n)[k % n]


def conjugate(a: CycloNum) -> CycloNum:
    """Complex conjugation, the automorphism xi -> xi^(-1)."""
    n = a.order
    acc = CycloNum.rational(n, 0)
    for i, c in enumerate(a.coeffs):
        if c:
            acc = acc + cyclo(n, -i) * c
    return acc


def as_rational(a: CycloNum) -> Fraction | None:
    """The rational value of ``a``, or ``None`` when ``a`` is not in Q."""
    return a.coeffs[0] if a.is_rational() else None


def primitive_root_sum(n: int, k: int) -> CycloNum:
    """xi^k + xi^(-k), i.e. 2*cos(2*pi*k/n) as an exact element of Q(xi_n)."""
    return cyclo(n, k) + cyclo(n, -k)


def coprime_residues(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if gcd(k, n) == 1]
