from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import HOPF_PD, POSITIVE_HOPF_PD
from deepslice.errors import InputError
from deepslice.fourmanifold import (
    FramedLink,
    boundary_homology,
    form_signature,
    linking_matrix,
    meridian_class,
    parse_framed_link,
    parse_int_matrix,
    summarize,
)
from deepslice.linalg import det_int, matmul, smith_normal_form
from oracles import eig_signature, invariant_factors_by_minors, naive_snf_factors


@st.composite
def symmetric(draw, lo=-3, hi=3, max_n=4):
    n = draw(st.integers(1, max_n))
    q = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            q[i][j] = q[j][i] = draw(st.integers(lo, hi))
    return q


def test_hopf_link_matrices():
    neg = parse_framed_link(f"diagram: {HOPF_PD}\ncomponents: [{{\"diagram_ref\": 1, \"framing\": 0}}, {{\"diagram_ref\": 2, \"framing\": 3}}]")
    assert linking_matrix(neg) == ((0, -1), (-1, 3))
    pos = parse_framed_link(
        '{"diagram": "%s", "components": [{"diagram_ref": 1, "framing": 0}, {"diagram_ref": 2, "framing": 0}]}'
        % POSITIVE_HOPF_PD
    )
    assert linking_matrix(pos) == ((0, 1), (1, 0))


def test_linking_override_and_conflicts():
    link = parse_framed_link('components: [{"framing": 2}, {"framing": -1}]\nlinking: [[1, 2, 5]]')
    assert linking_matrix(link) == ((2, 5), (5, -1))
    with pytest.raises(InputError):
        parse_framed_link('components: [{"framing": 2}, {"framing": -1}]')  # no data for the pair
    with pytest.raises(InputError):
        parse_framed_link('components: [{"framing": 0}, {"framing": 0}]\nlinking: [[1, 2, 1], [2, 1, 2]]')


@pytest.mark.parametrize(
    "text",
    [
        "",
        "matrix: [[0, 1], [2, 0]]",
        "matrix: [[1]]\ncomponents: []",
        "colour: red",
        'components: [{"framing": 1.5}]',
        'diagram: X(1,3,2,4) X(3,1,4,2)\ncomponents: [{"diagram_ref": 3, "framing": 0}]',
        'diagram: X(1,3,2,4) X(3,1,4,2)\ncomponents: [{"diagram_ref": 1, "framing": 0}, {"diagram_ref": 1, "framing": 0}]',
        "{not json",
    ],
)
def test_bad_framed_links(text):
    with pytest.raises(InputError):
        parse_framed_link(text)


def test_matrix_literals():
    assert parse_int_matrix("[[0,1],[1,0]]") == ((0, 1), (1, 0))
    assert parse_int_matrix("[-3]") == ((-3,),)
    assert parse_int_matrix("2, 1; 1, 2") == ((2, 1), (1, 2))
    for bad in ("[1, 2]", "1,2;3", "a,b;c,d", "[[1,2],[3,4]]"):
        with pytest.raises(InputError):
            parse_int_matrix(bad)


def test_summary_numbers():
    s = summarize([[2, 1], [1, 2]])
    assert (s.n, s.signature, s.chi, s.chi_closed, s.b2_closed, s.det) == (2, 2, 3, 4, 2, 3)
    assert s.h1_boundary == (3,) and not s.cappable
    e8 = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]:
        e8[i][j] = e8[j][i] = -1
    s = summarize(e8)
    assert s.cappable and s.signature == 8 and s.h1_boundary == ()


def test_meridians():
    m = meridian_class([[0]], 1)
    assert m.factors == (0,) and m.coordinates != (0,) and m.order == 0
    m = meridian_class([[5]], 1)
    assert m.nontrivial and m.order == 5
    m = meridian_class([[2, 0], [0, 1]], 2)
    assert not m.nontrivial
    with pytest.raises(InputError):
        meridian_class([[1]], 2)


@settings(max_examples=80, deadline=None)
@given(symmetric())
def test_smith_transform_identity(q):
    diag, u, w = smith_normal_form(q)
    d = matmul(matmul(u, q), w)
    n = len(q)
    assert all(d[i][j] == (diag[i] if i == j else 0) for i in range(n) for j in range(n))
    assert abs(det_int(u)) == 1 and abs(det_int(w)) == 1
    nz = [x for x in diag if x]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=80, deadline=None)
@given(symmetric())
def test_boundary_homology_against_minors(q):
    assert sorted(boundary_homology(q)) == sorted(invariant_factors_by_minors(q))
    assert sorted(boundary_homology(q)) == sorted(naive_snf_factors(q))


@settings(max_examples=80, deadline=None)
@given(symmetric(), st.integers(0, 3))
def test_signature_properties(q, seed):
    s = form_signature(q)
    assert s == eig_signature(q)
    assert form_signature([[-x for x in r] for r in q]) == -s
    # congruence by an elementary unimodular matrix keeps the signature
    n = len(q)
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    if n > 1:
        p[seed % n][(seed + 1) % n] = 1
    pt = [list(r) for r in zip(*p)]
    assert form_signature(matmul(matmul(pt, q), p)) == s


def test_from_matrix_round_trip():
    link = FramedLink.from_matrix([[1, 2], [2, -1]])
    assert linking_matrix(link) == ((1, 2), (2, -1))
    assert [c.framing for c in link.components] == [1, -1]
