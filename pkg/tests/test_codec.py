from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import FIGURE_EIGHT_PD, HOPF_PD, LEFT_TREFOIL_PD, POSITIVE_HOPF_PD, RIGHT_TREFOIL_GAUSS
from deepslice.codec import (
    BraidWord,
    braid_closure,
    connected_sum,
    mirror,
    parse_braid,
    parse_gauss,
    parse_pd,
    reverse,
    unknot,
)
from deepslice.errors import DiagramError, InputError
from oracles import circuit_count, grid_to_pd, parse_pd_tuples, random_grid_knot


def test_hopf_link_has_two_components():
    d = parse_pd(HOPF_PD)
    assert d.num_components == 2
    assert d.num_crossings == 2
    assert circuit_count(parse_pd_tuples(HOPF_PD)) == 2


def test_hopf_linking_numbers():
    assert parse_pd(HOPF_PD).linking_number(0, 1) == -1
    assert parse_pd(POSITIVE_HOPF_PD).linking_number(0, 1) == 1


def test_empty_pd_is_rejected():
    with pytest.raises(DiagramError, match="empty"):
        parse_pd("")


def test_unknot_token():
    d = parse_pd("U")
    assert d.num_crossings == 0 and d.num_components == 1
    assert d.to_pd() == "U"


def test_trefoil_pd_single_circuit():
    d = parse_pd(LEFT_TREFOIL_PD)
    assert d.is_knot() and d.num_crossings == 3
    assert circuit_count(parse_pd_tuples(LEFT_TREFOIL_PD)) == 1
    assert d.signs() == (-1, -1, -1)


def test_knottheory_bracket_syntax():
    d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
    assert d == parse_pd(LEFT_TREFOIL_PD)


@pytest.mark.parametrize(
    "bad",
    ["X(1,2,3)", "X(1,2,3,4) X(1,2,3,5)", "X(1,2,2,1) hello", "X(1,2,3,4)"],
)
def test_malformed_pd(bad):
    with pytest.raises(DiagramError):
        parse_pd(bad)


def test_gauss_trefoil():
    d = parse_gauss(RIGHT_TREFOIL_GAUSS)
    assert d.num_crossings == 3 and d.is_knot()
    assert d.signs() == (1, 1, 1)


def test_gauss_kink():
    d = parse_gauss("O1+ U1+")
    assert d.num_crossings == 1 and d.is_knot()


@pytest.mark.parametrize("bad", ["O1+ O1-", "O1+ U2+", "O1+ U1-", "O1+ U1+ O1+", "Q1+"])
def test_gauss_errors(bad):
    with pytest.raises(DiagramError):
        parse_gauss(bad)


def test_nonplanar_gauss_fails_loudly():
    with pytest.raises(DiagramError):
        parse_gauss("O1+ O2+ U1+ U2+")


def test_braid_trefoil_closure():
    d = braid_closure(parse_braid("s1 s1 s1", strands=2))
    assert d.is_knot() and d.num_crossings == 3


def test_braid_identity_on_one_strand():
    d = braid_closure(parse_braid("1:"))
    assert d.num_crossings == 0 and d.num_components == 1


def test_braid_single_letter_is_kinked_unknot():
    d = braid_closure(parse_braid("2: s1"))
    assert d.num_crossings == 1 and d.is_knot()


def test_braid_index_out_of_range():
    with pytest.raises(DiagramError):
        parse_braid("2: s2")
    with pytest.raises(DiagramError):
        BraidWord(3, (0,))


def test_braid_power_syntax():
    assert parse_braid("3: s1^2 s2^-2").letters == (1, 1, -2, -2)


def test_braid_str_reparses():
    b = parse_braid("4: s1 s3^-1 s2")
    assert parse_braid(str(b)) == b


def test_mirror_of_trefoil_swaps_signs():
    d = parse_pd(LEFT_TREFOIL_PD)
    assert mirror(d).signs() == (1, 1, 1)


def test_reverse_unknot():
    assert reverse(unknot()).num_components == 1
    assert reverse(unknot()).num_crossings == 0


def test_reverse_keeps_signs():
    d = parse_pd(FIGURE_EIGHT_PD)
    assert sorted(reverse(d).signs()) == sorted(d.signs())


def test_connected_sum_of_trefoils():
    t = braid_closure(parse_braid("2: s1 s1 s1"))
    s = connected_sum(t, t)
    assert s.num_crossings == 6 and s.is_knot()
    assert s.signs() == (1,) * 6


def test_connected_sum_needs_knots():
    with pytest.raises(DiagramError):
        connected_sum(parse_pd(HOPF_PD), unknot())


def test_diagram_errors_are_input_errors():
    assert issubclass(DiagramError, InputError)


braid_words = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sampled_from([i for k in range(1, n) for i in (k, -k)]), max_size=12) if n > 1 else st.just([]),
    )
)


@settings(max_examples=150, deadline=None)
@given(braid_words)
def test_braid_closure_components_match_permutation(data):
    n, letters = data
    b = BraidWord(n, tuple(letters))
    d = braid_closure(b)
    perm = b.permutation()
    seen, cycles = set(), 0
    for s in range(n):
        if s not in seen:
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    assert d.num_components == cycles
    assert braid_closure(b.inverse()).num_components == cycles


@settings(max_examples=150, deadline=None)
@given(braid_words)
def test_roundtrip_and_involutions(data):
    n, letters = data
    d = braid_closure(BraidWord(n, tuple(letters)))
    if not d.crossings:
        return
    again = parse_pd(d.to_pd())
    assert again == d
    assert mirror(mirror(d)) == d
    assert reverse(reverse(d)) == d
    labels = [a for c in d.crossings for a in c.arcs]
    assert sorted(labels) == sorted(list(range(1, 2 * d.num_crossings + 1)) * 2)


def test_grid_diagrams_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        xs, os_, pd = random_grid_knot(rng, rng.randint(4, 8))
        d = parse_pd(pd)
        assert d.is_knot()
        assert parse_pd(d.to_pd()) == d
        assert circuit_count(parse_pd_tuples(pd)) == 1
        assert grid_to_pd(xs, os_) == pd
