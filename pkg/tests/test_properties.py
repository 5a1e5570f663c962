"""Action laws on random homogeneous polynomials of degree at most 6."""

from hypothesis import given, settings, strategies as st

from ncinv.cyclotomic import CycloNum, euler_phi
from ncinv.freealg import NcPoly, act, dihedral_group, invariant_basis, reynolds
from ncinv.koryukin import Permutation, s_act, sym_span_closure
from ncinv.span import DegreeSpan


@st.composite
def homogeneous(draw, n=None):
    n = n or draw(st.integers(3, 7))
    k = draw(st.integers(1, 6))
    words = draw(st.lists(st.text(alphabet="uv", min_size=k, max_size=k), min_size=1, max_size=4))
    phi = euler_phi(n)
    terms = {w: CycloNum(n, draw(st.lists(st.integers(-3, 3), min_size=phi, max_size=phi))) for w in words}
    return NcPoly(n, terms), k


def perms(k):
    return st.permutations(range(1, k + 1)).map(Permutation)


@settings(max_examples=200)
@given(st.data())
def test_right_action_law(data):
    p, k = data.draw(homogeneous())
    pi, sigma = data.draw(perms(k)), data.draw(perms(k))
    assert s_act(s_act(p, pi), sigma) == s_act(p, pi * sigma)


@settings(max_examples=200)
@given(st.data())
def test_equivariance(data):
    p, k = data.draw(homogeneous())
    pi = data.draw(perms(k))
    g = data.draw(st.sampled_from(dihedral_group(p.order)))
    assert act(g, s_act(p, pi)) == s_act(act(g, p), pi)


@settings(max_examples=200)
@given(st.data())
def test_reynolds_idempotent(data):
    p, _ = data.draw(homogeneous())
    r = reynolds(p, p.order)
    assert reynolds(r, p.order) == r


@settings(max_examples=200)
@given(st.data())
def test_reynolds_image_fixed(data):
    p, _ = data.draw(homogeneous())
    r = reynolds(p, p.order)
    assert all(act(g, r) == r for g in dihedral_group(p.order))


@settings(max_examples=50)
@given(st.integers(3, 6), st.integers(2, 7), st.data())
def test_permuted_invariants_stay_invariant(n, k, data):
    inv = invariant_basis(n, k)
    if not inv.dim:
        return
    row = data.draw(st.sampled_from(inv.rows()))
    assert inv.contains_span(sym_span_closure(DegreeSpan(k, n, [row])))
