import cmath
import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ncinv.cyclotomic import CycloNum, OrderMismatchError, as_rational, cyclo
from ncinv.freealg import (
    NcPoly,
    act,
    dihedral_group,
    invariant_basis,
    invariant_dimension_by_counting,
    p_pair,
    p_pair_listed,
    power_sum,
    reynolds,
    reynolds_rank,
    rho,
    s_elem,
    tau,
)
from ncinv.ratfunc import psi_min_poly
from ncinv.span import DegreeSpan
from ncinv.words import all_words, grading_ok, leading_word, parse_word, render_word, sorted_desc, swap


def trace_average(n: int, k: int) -> int:
    """(1/2n) sum_g tr(g)^k in floating point: rotations 2cos(2 pi j/n), reflections 0."""
    total = sum((2 * math.cos(2 * math.pi * j / n)) ** k for j in range(n))
    if k == 0:
        total += n
    return round(total / (2 * n))


def test_word_order():
    assert sorted_desc(["vu", "uv", "uu", "vv"]) == ["uu", "uv", "vu", "vv"]
    assert leading_word(["v" * 3, "u" * 3]) == "uuu"
    assert render_word("uuvuu") == "u^2vu^2"
    assert parse_word("u^2vu^2") == "uuvuu"
    assert render_word("") == "1" and parse_word("1") == ""


@given(st.text(alphabet="uv", min_size=0, max_size=12))
def test_word_render_round_trip(w):
    assert parse_word(render_word(w)) == w


def test_ncpoly_render_and_parse():
    p = NcPoly.parse(3, "u^2v^2 + v^2u^2")
    assert p.terms.keys() == {"uuvv", "vvuu"}
    assert str(p) == "u^2v^2 + v^2u^2"
    q = NcPoly.parse(3, "1/2*uv - (1+xi)*vu + 3")
    assert q.coefficient("vu") == -(1 + cyclo(3, 1))
    assert q.coefficient("") == 3
    assert NcPoly.parse(3, str(q)) == q
    assert str(reynolds(NcPoly.word(3, "uv"), 3)) == "1/2*uv + 1/2*vu"


@st.composite
def ncpolys(draw, n=5, max_degree=4):
    k = draw(st.integers(0, max_degree))
    words = draw(st.lists(st.text(alphabet="uv", min_size=k, max_size=k), min_size=0, max_size=5))
    terms = {}
    for w in words:
        coeffs = draw(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
        terms[w] = CycloNum(n, coeffs)
    return NcPoly(n, terms)


@given(ncpolys())
def test_ncpoly_parse_round_trip(p):
    assert NcPoly.parse(5, str(p)) == p


@given(ncpolys(), ncpolys(), ncpolys())
def test_ncpoly_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == NcPoly(5)


def test_group_relations():
    g3 = dihedral_group(3)
    assert len(g3) == 6
    r = rho(3)
    assert (r * r * r).is_identity()
    t4, r4 = tau(4), rho(4)
    assert (t4 * r4 * t4 * r4).is_identity()
    for n in range(3, 9):
        G = dihedral_group(n)
        assert len(set(G)) == 2 * n
        assert all(g * h in G for g in G for h in G)


def test_rotation_traces_n5():
    traces = [g.trace() for g in dihedral_group(5)[:5]]
    assert traces[0] == 2
    assert all(as_rational(t) is None for t in traces[1:])
    psi5 = psi_min_poly(5)
    assert all(not psi5(t) for t in traces[1:])
    assert sorted(str(t) for t in traces[1:3]) == sorted(str(t) for t in traces[4:2:-1])
    assert all(not g.trace() for g in dihedral_group(5)[5:])


def test_act_examples():
    n = 3
    assert act(rho(n), NcPoly.word(n, "uv")) == NcPoly.word(n, "uv")
    assert act(tau(n), NcPoly.word(n, "uuu")) == NcPoly.word(n, "vvv")
    assert act(rho(n), NcPoly.word(n, "uu")) == NcPoly.word(n, "uu", CycloNum(3, [-1, -1]))


def test_act_order_mismatch():
    with pytest.raises(OrderMismatchError):
        act(rho(4), NcPoly.word(3, "u"))


def brute_reynolds(p: NcPoly, n: int) -> NcPoly:
    """Average over rotations and reflections written out letter by letter."""
    out = NcPoly(n)
    for k in range(n):
        for refl in (False, True):
            img = {}
            for w, c in p.terms.items():
                coeff, word = c, ""
                for x in w:
                    if not refl:
                        coeff = coeff * cyclo(n, k if x == "u" else -k)
                        word += x
                    else:
                        coeff = coeff * cyclo(n, -k if x == "u" else k)
                        word += swap(x)
                img[word] = img.get(word, 0) + coeff
            out = out + NcPoly(n, img)
    return out * Fraction(1, 2 * n)


def test_reynolds_examples():
    assert reynolds(NcPoly.word(3, "uv"), 3) == NcPoly.parse(3, "1/2*uv + 1/2*vu")
    assert not reynolds(NcPoly.word(3, "uu"), 3)
    assert reynolds(NcPoly.word(3, "uuu"), 3) == NcPoly.parse(3, "1/2*u^3 + 1/2*v^3")
    for w in all_words(4):
        assert reynolds(NcPoly.word(5, w), 5) == brute_reynolds(NcPoly.word(5, w), 5)


def test_counting_examples():
    assert invariant_dimension_by_counting(3, 4) == 3
    assert invariant_dimension_by_counting(3, 1) == 0
    # length-6 words with deg_u - deg_v in {-4, 0, 4}: 6 + 20 + 6 = 32, halved
    assert invariant_dimension_by_counting(4, 6) == 16


def test_counting_matches_trace_average():
    for n in range(3, 12):
        for k in range(0, 14):
            assert invariant_dimension_by_counting(n, k) == trace_average(n, k), (n, k)


def test_invariant_basis_examples():
    assert invariant_basis(3, 2) == DegreeSpan(2, 3, [s_elem(1, 3)])
    assert invariant_basis(3, 3) == DegreeSpan(3, 3, [power_sum(3, 3)])
    expected = [NcPoly.parse(5, s) for s in ("u^2v^2 + v^2u^2", "uvuv + vuvu", "uv^2u + vu^2v")]
    basis = invariant_basis(5, 4)
    assert basis == DegreeSpan(4, 5, expected) and basis.dim == 3
    for p in expected:
        assert act(rho(5), p) == p and act(tau(5), p) == p


@pytest.mark.parametrize("n", range(3, 7))
def test_invariant_basis_structure(n):
    for k in range(1, 9):
        for row in invariant_basis(n, k).rows():
            assert {swap(w) for w in row} == set(row)
            assert all(grading_ok(w, n) for w in row)
            p = NcPoly.from_rational(n, row)
            assert all(act(g, p) == p for g in (rho(n), tau(n)))


def test_reynolds_rank_small_grid():
    for n in range(3, 7):
        for k in range(1, 7):
            assert reynolds_rank(n, k) == invariant_basis(n, k).dim == invariant_dimension_by_counting(n, k)


def test_pair_constructors():
    assert p_pair(4, 1, 3) == NcPoly.parse(3, "u^4v + v^4u")
    assert p_pair_listed(4, 1, 3) == NcPoly.parse(3, "u^4v + vu^4")
    assert p_pair(2, 2, 3) == p_pair_listed(2, 2, 3) == s_elem(2, 3)
    q = p_pair_listed(4, 1, 3)
    assert act(tau(3), q) != q


def test_homogeneity_and_leading_word():
    p = NcPoly.parse(3, "uv + vu")
    assert p.is_homogeneous() and p.degree == 2 and p.leading_word() == "uv"
    assert not NcPoly.parse(3, "uv + u").is_homogeneous()


@settings(max_examples=60)
@given(st.integers(3, 6), st.data())
def test_action_composition(n, data):
    G = dihedral_group(n)
    g, h = data.draw(st.sampled_from(G)), data.draw(st.sampled_from(G))
    k = data.draw(st.integers(0, 5))
    words = data.draw(st.lists(st.text(alphabet="uv", min_size=k, max_size=k), max_size=4))
    p = NcPoly(n, {w: i + 1 for i, w in enumerate(words)})
    assert act(g, act(h, p)) == act(g * h, p)


def test_complex_trace_oracle_n7():
    z = cmath.exp(2j * math.pi / 7)
    for k in range(1, 10):
        avg = sum((z**j + z**-j) ** k for j in range(7)) / 14
        assert round(avg.real) == invariant_dimension_by_counting(7, k)


def test_span_membership_and_errors():
    s = DegreeSpan(2, 3, [{"uv": 1, "vu": 1}])
    assert {"uv": 2, "vu": 2} in s
    assert not s.contains({"uv": 1})
    with pytest.raises(ValueError):
        s.add({"uuu": 1})


def test_orbit_count_via_enumeration():
    for n, k in ((4, 6), (3, 7), (5, 8)):
        admissible = [w for w in ("".join(p) for p in product("uv", repeat=k)) if grading_ok(w, n)]
        assert len(admissible) // 2 == invariant_dimension_by_counting(n, k)
