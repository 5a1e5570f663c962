"""Words in the letters u, v.

A word is a plain ``str`` over ``"uv"``. Words of equal length are ordered
lexicographically with u > v; that is the reverse of ASCII order, so the
*smallest* Python string among same-length words is the greatest word.
"""

from __future__ import annotations

import re
from itertools import groupby, product

LETTERS = "uv"
_SWAP = str.maketrans("uv", "vu")
_KEY = str.maketrans("uv", "10")


def deg_u(w: str) -> int:
    return w.count("u")


def deg_v(w: str) -> int:
    return w.count("v")


def swap(w: str) -> str:
    return w.translate(_SWAP)


def word_key(w: str) -> tuple[int, str]:
    """Sort key for deglex with u > v: larger key, greater word."""
    return len(w), w.translate(_KEY)


def leading_word(words) -> str:
    return max(words, key=word_key)


def sorted_desc(words) -> list[str]:
    return sorted(words, key=word_key, reverse=True)


def runs(w: str) -> int:
    """Number of maximal blocks of equal letters."""
    return sum(1 for _ in groupby(w))


def all_words(k: int) -> list[str]:
    return ["".join(p) for p in product(LETTERS, repeat=k)]


def grading_ok(w: str, n: int) -> bool:
    return (deg_u(w) - deg_v(w)) % n == 0


def render_word(w: str) -> str:
    if not w:
        return "1"
    out = []
    for letter, grp in groupby(w):
        e = len(list(grp))
        out.append(letter if e == 1 else f"{letter}^{e}")
    return "".join(out)


_POWER = re.compile(r"([uv])(?:\^(\d+))?")


def parse_word(text: str) -> str:
    text = text.replace(" ", "")
    if text == "1":
        return ""
    out, pos = [], 0
    while pos < len(text):
        m = _POWER.match(text, pos)
        if not m:
            raise ValueError(f"bad word {text!r}")
        out.append(m.group(1) * int(m.group(2) or 1))
        pos = m.end()
    return "".join(out)
