"""Dense univariate polynomial helpers on coefficient lists, low degree first.

Coefficients may be any exact field elements (``Fraction``, ``int``,
``CycloNum``); zero is detected by truthiness. These are the shared
primitives under ``IntPoly``, ``QPoly`` and the cyclotomic field.
"""

from fractions import Fraction


def strip(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return list(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, c in enumerate(b):
        res[i] = res[i] + c
    return strip(res)


def sub(a, b):
    return add(a, [-c for c in b])


def mul(a, b):
    if not a or not b:
        return []
    zero = a[-1] * b[-1] * 0
    res = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                res[i + j] = res[i + j] + x * y
    return strip(res)


def scale(a, c):
    return strip([c * x for x in a])


def divmod_(a, b):
    """Euclidean division ``a = q*b + r`` over a field."""
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = strip(a)
    if len(r) < len(b):
        return [], r
    lead = b[-1]
    q = [0] * (len(r) - len(b) + 1)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = _div(r[-1], lead)
        q[shift] = c
        for j, y in enumerate(b):
            r[shift + j] = r[shift + j] - c * y
        r = strip(r)
    return strip(q), r


def _div(x, y):
    # keep integer arithmetic integral when dividing by a unit
    if y == 1:
        return x
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def monic(a):
    a = strip(a)
    if not a:
        return a
    lead = a[-1]
    return [_div(c, lead) for c in a]


def gcd(a, b):
    a, b = strip(a), strip(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def ext_gcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = strip(a), strip(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    inv = _div(1, r0[-1])
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def evaluate(a, x, one=1):
    acc = 0 * one
    for c in reversed(a):
        acc = acc * x + c
    return acc
