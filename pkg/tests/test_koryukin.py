from itertools import permutations

import pytest

from ncinv.freealg import NcPoly, invariant_basis, power_sum, s_elem, p_pair
from ncinv.koryukin import (
    Permutation,
    TheoremViolation,
    s_act,
    s_algebra_closure,
    step_three_certificate,
    sym_span_closure,
    verify_generation_theorem,
    worked_example_combination,
    worked_example_image,
)
from ncinv.span import DegreeSpan


def word_action(w: str, images) -> str:
    """Letter at position j moves to position images[j] (1-based), straight from the definition."""
    out = [None] * len(w)
    for j, x in enumerate(w):
        out[images[j] - 1] = x
    return "".join(out)


def test_permutation_basics():
    p = Permutation.from_cycles(3, (1, 3))
    assert p.images == (3, 2, 1)
    assert p * p == Permutation.identity(3)
    c = Permutation.from_cycles(4, (1, 2, 3))
    assert c(1) == 2 and c(3) == 1
    assert c * c.inverse() == Permutation.identity(4)
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation.identity(3) * Permutation.identity(4)


def test_position_swap_example():
    # x1 x3 x6 o (13) = x6 x3 x1, written with distinct three letters
    pi = Permutation.transposition(3, 1, 3)
    assert word_action("abc", pi.images) == "cba"
    assert s_act(NcPoly.word(3, "uvv"), pi) == NcPoly.word(3, "vvu")


def test_identity_action():
    p = NcPoly.parse(3, "u^2v + 2*vuv")
    assert s_act(p, Permutation.identity(3)) == p


def test_s_act_matches_definition_for_all_perms():
    w = "uuvuv"
    for images in permutations(range(1, 6)):
        pi = Permutation(images)
        assert s_act(NcPoly.word(3, w), pi) == NcPoly.word(3, word_action(w, images))


def test_worked_example_image():
    assert worked_example_image() * 2 == NcPoly.parse(3, "u^4v + v^4u + uv^4 + vu^4")
    assert worked_example_combination() == NcPoly.parse(3, "u^4v + v^4u")


def test_s_act_errors():
    with pytest.raises(ValueError):
        s_act(NcPoly.parse(3, "uv + u"), Permutation.identity(2))
    with pytest.raises(ValueError):
        s_act(NcPoly.word(3, "uv"), Permutation.identity(3))


def test_sym_span_closure_examples():
    s = DegreeSpan(2, 3, [s_elem(1, 3)])
    assert sym_span_closure(s) == s
    hist = []
    c = sym_span_closure(DegreeSpan(4, 4, [NcPoly.parse(4, "u^2v^2 + v^2u^2")]), hist)
    assert c.dim == 3
    assert NcPoly.parse(4, "uvuv + vuvu").terms in c
    assert c.contains(NcPoly.parse(4, "uv^2u + vu^2v"))
    assert hist == sorted(set(hist)) and hist[-1] == 3
    assert sym_span_closure(DegreeSpan(5, 3)).dim == 0


def test_closure_stays_inside_invariants():
    for n in (3, 4, 5):
        for k in range(2, 8):
            inv = invariant_basis(n, k)
            for row in inv.rows()[:3]:
                c = sym_span_closure(DegreeSpan(k, n, [row]))
                assert inv.contains_span(c)


def test_s_algebra_closure_examples():
    rep = s_algebra_closure([s_elem(1, 3), power_sum(3, 3)], 8)
    assert rep.passed and all(r.equal for r in rep.rows)
    rep = s_algebra_closure([s_elem(1, 3)], 3)
    assert rep.rows[2].closure_dim == 0 and rep.rows[2].invariant_dim == 1 and not rep.passed
    rep = s_algebra_closure([], 5, n=4)
    assert all(r.closure_dim == 0 for r in rep.rows)


def test_closure_history_strictly_increasing():
    rep = s_algebra_closure([s_elem(1, 5), power_sum(5, 5)], 9)
    for k, hist in rep.history.items():
        assert all(a < b for a, b in zip(hist, hist[1:])), (k, hist)
        assert len(hist) <= 2**k + 1


@pytest.mark.parametrize("n, D", [(3, 8), (4, 8), (5, 10)])
def test_generation_theorem(n, D):
    rep = verify_generation_theorem(n, D)
    assert rep.passed
    assert [r.closure_dim for r in rep.rows] == [invariant_basis(n, k).dim for k in range(1, D + 1)]
    assert rep.certificates and all(c.passed for c in rep.certificates)


def test_certificate_three_zero():
    rep = verify_generation_theorem(3, 8)
    cert = next(c for c in rep.certificates if (c.b, c.c) == (3, 0))
    assert cert.passed
    assert p_pair(4, 1, 3) == NcPoly.parse(3, "u^4v + v^4u")


def test_certificate_against_wrong_closure_fails():
    spans = {k: DegreeSpan(k, 3) for k in range(1, 9)}
    assert not step_three_certificate(3, 0, 3, spans).passed


def test_strict_mode_and_errors():
    with pytest.raises(ValueError):
        verify_generation_theorem(2, 8)
    with pytest.raises(ValueError):
        verify_generation_theorem(5, 4)
    with pytest.raises(ValueError):
        s_algebra_closure([NcPoly.parse(3, "uv + u")], 3)
    verify_generation_theorem(3, 6, strict=True)
    assert TheoremViolation.__mro__[1] is AssertionError


def test_report_rendering():
    rep = verify_generation_theorem(3, 5)
    text = rep.to_text()
    assert "degree  closure  invariants  status" in text
    assert "     4        3           3  equal" in text
    d = rep.to_dict()
    assert d["passed"] and d["degrees"][3] == {"degree": 4, "closure_dim": 3, "invariant_dim": 3, "status": "equal"}
