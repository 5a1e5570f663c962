"""Reduced row-echelon spans inside one homogeneous component."""

from __future__ import annotations

from .words import leading_word, sorted_desc, word_key


class DegreeSpan:
    """Subspace of the degree-``degree`` component, kept in reduced row-echelon form.

    Vectors are ``dict[word, coefficient]`` with coefficients in any exact
    field (``Fraction`` for the rational paths, ``CycloNum`` otherwise).
    Every row has coefficient 1 at its pivot, the greatest word in the row,
    and no other row mentions that pivot.
    """

    def __init__(self, degree: int, order: int, vectors=()):
        self.degree = degree
        self.order = order
        self._rows: dict[str, dict] = {}
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list[str]:
        return sorted_desc(self._rows)

    def rows(self) -> list[dict]:
        return [dict(self._rows[p]) for p in self.pivots]

    def reduce(self, vec) -> dict:
        """Remainder of ``vec`` after elimination against the rows."""
        out = {w: c for w, c in _as_dict(vec).items() if c}
        for p in [w for w in out if w in self._rows]:
            c = out.get(p)
            if not c:
                continue
            for w, r in self._rows[p].items():
                x = out.get(w, 0) - c * r
                if x:
                    out[w] = x
                else:
                    out.pop(w, None)
        return out

    def add(self, vec) -> bool:
        """Insert ``vec``; return False when it already lies in the span."""
        r = self.reduce(vec)
        if not r:
            return False
        for w in r:
            if len(w) != self.degree:
                raise ValueError(f"word {w!r} is not of degree {self.degree}")
        p = leading_word(r)
        lead = r[p]
        if lead != 1:
            r = {w: c / lead for w, c in r.items()}
        for row in self._rows.values():
            c = row.get(p)
            if c:
                for w, x in r.items():
                    y = row.get(w, 0) - c * x
                    if y:
                        row[w] = y
                    else:
                        del row[w]
        self._rows[p] = r
        return True

    def extend(self, vectors) -> int:
        return sum(self.add(v) for v in vectors)

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    __contains__ = contains

    def contains_span(self, other: DegreeSpan) -> bool:
        return all(self.contains(r) for r in other._rows.values())

    def __eq__(self, other):
        if not isinstance(other, DegreeSpan):
            return NotImplemented
        return self.degree == other.degree and self._rows == other._rows

    def copy(self) -> DegreeSpan:
        new = DegreeSpan(self.degree, self.order)
        new._rows = {p: dict(r) for p, r in self._rows.items()}
        return new

    def basis(self):
        """Rows as ``NcPoly`` objects, greatest pivot first."""
        from .freealg import NcPoly

        return [NcPoly(self.order, self._rows[p]) for p in self.pivots]

    def __repr__(self):
        return f"DegreeSpan(degree={self.degree}, order={self.order}, dim={self.dim})"


def _as_dict(vec) -> dict:
    terms = getattr(vec, "terms", None)
    return terms if terms is not None else vec


__all__ = ["DegreeSpan", "word_key"]
