from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from thetarel.exactmath import determinant, prime_divisors
from thetarel.lattice import Lattice
from thetarel.p0search import (P0SearchError, bp_matrix, bp_row, find_p0, flp0_qexp_check,
                               taylor_state)

from conftest import even_gram
from expected import A2_P0, A3_P0, D4_P0

D4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
A2 = [[2, -1], [-1, 2]]
A3 = [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]



@pytest.mark.parametrize("G,power,expected", [(D4, 2, D4_P0), (A2, 3, A2_P0), (A3, 2, A3_P0)])
def test_reference_p0_lists(G, power, expected):
    assert find_p0(Lattice(G).rescale(power)) == expected


def test_search_failure_reports_rank():
    with pytest.raises(P0SearchError) as err:
        find_p0(Lattice(D4).rescale(2), max_sum=2)
    assert err.value.target == 63 and 0 < err.value.achieved < 63


def test_row_signs():
    state = taylor_state(Lattice(D4).rescale(2))
    assert all(x >= 0 for x in bp_row(state, (2, 0, 2, 0)))
    # odd rows cancel on cosets with t = -t, where S_j is symmetric
    odd = bp_row(state, (1, 0, 2, 0))
    for t, x in zip(state.reps[1:], odd):
        if all((2 * c).denominator == 1 for c in t):
            assert x == 0


@settings(max_examples=15)
@given(even_gram(dims=(2,), bound=6))
def test_row_scaling_does_not_change_acceptance(g):
    lat = Lattice(g)
    assume(lat.det <= 12)
    power = prime_divisors(lat.level)[0]
    scaled = lat.rescale(power)
    state = taylor_state(scaled)
    # images G v for the unrescaled form instead of G' v = power * G v
    plain = replace(state, min_vectors=[[tuple(Fraction(x, power) for x in b) for b in imgs]
                                        for imgs in state.min_vectors])
    try:
        expected = find_p0(scaled, max_sum=12, state=state)
    except P0SearchError:
        with pytest.raises(P0SearchError):
            find_p0(scaled, max_sum=12, state=plain)
        return
    assert find_p0(scaled, max_sum=12, state=plain) == expected


def test_leading_coefficient_equals_bp_determinant():
    scaled = Lattice(A2).rescale(3)
    state = taylor_state(scaled)
    P0 = find_p0(scaled, state=state)
    shift = sum(state.minima)
    check = flp0_qexp_check(scaled, P0, shift + 1)
    assert check.completed and check.nonzero_below_trunc
    assert check.leading_exponent == shift
    assert check.leading_coefficient == determinant(bp_matrix(state, P0)) != 0


def test_repeated_index_gives_no_certificate():
    scaled = Lattice(A2).rescale(3)
    P0 = A2_P0[:-1] + [A2_P0[1]]
    check = flp0_qexp_check(scaled, P0, 12)
    assert not check.nonzero_below_trunc
