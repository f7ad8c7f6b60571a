import itertools
from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetarel.lattice import Lattice, LatticeError

from conftest import even_gram

D4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
A2 = [[2, -1], [-1, 2]]
Q15 = [[2, 1], [1, 8]]

vectors = st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=3, max_size=3)


@given(even_gram(dims=(3,)), vectors, vectors)
def test_polarization(g, v, w):
    lat = Lattice(g)
    s = [a + b for a, b in zip(v, w)]
    assert lat.bilinear(v, w) == lat.quad(s) - lat.quad(v) - lat.quad(w)
    assert lat.bilinear(v, w) == lat.bilinear(w, v)


@given(even_gram())
def test_dual_reps_form_a_full_system(g):
    lat = Lattice(g)
    reps = lat.dual_coset_reps()
    assert len(reps) == lat.det
    assert not any(reps[0])
    assert all(0 <= x < 1 for r in reps for x in r)
    lat.check_alpha_reps(reps)  # raises on duplicates or non-dual vectors


def _brute_level(lat):
    """Smallest N with N Q(t) integral for every t in the dual lattice."""
    out = 1
    for t in lat.dual_coset_reps():
        out = lcm(out, lat.quad(t).denominator)
    return out


@given(even_gram())
def test_level_matches_quadratic_form_oracle(g):
    lat = Lattice(g)
    assert lat.level == _brute_level(lat)


@given(even_gram(), st.integers(1, 6))
def test_rescaled_level(g, f):
    lat = Lattice(g)
    scaled = lat.rescale(f)
    assert (f * lat.level) % scaled.level == 0
    assert scaled.level == _brute_level(scaled)


def _brute_beta_classes(lat, power):
    """Distinct classes of w / power modulo the dual lattice, w in {0..power-1}^n."""
    classes = []
    for w in itertools.product(range(power), repeat=lat.n):
        v = [Fraction(x, power) for x in w]
        if not any(lat.in_dual([a - b for a, b in zip(v, u)]) for u in classes):
            classes.append(v)
    return len(classes)


@pytest.mark.parametrize("G,power", [(D4, 2), (A2, 3), (Q15, 3), (Q15, 5), (Q15, 15)])
def test_beta_reps(G, power):
    lat = Lattice(G)
    reps = lat.beta_reps(power)
    assert len(reps) == lat.beta_count(power) == _brute_beta_classes(lat, power)
    lat.check_beta_reps(reps, power)
    # beta classes times dual classes killed by power account for all of (L/power)/L
    killed = sum(1 for t in lat.dual_coset_reps() if all((power * x).denominator == 1 for x in t))
    assert len(reps) * killed == power ** lat.n


def test_known_invariants():
    assert Lattice(D4).level == 2 and Lattice(D4).det == 4
    assert Lattice(A2).level == 3 and Lattice(A2).det == 3
    assert Lattice(Q15).level == 15 and Lattice(Q15).det == 15
    assert Lattice(D4).elementary_divisors == [1, 1, 2, 2]


def test_alpha_filter():
    lat = Lattice(Q15)
    survivors = [t for t in lat.dual_coset_reps() if lat.validate_alpha(t, 3)]
    assert all((3 * lat.quad(t)).denominator == 1 for t in survivors)
    assert len(survivors) == 3
    with pytest.raises(LatticeError):
        lat.validate_alpha([Fraction(1, 2), 0], 3)


@pytest.mark.parametrize("gram,msg", [
    ([[2, 1], [0, 2]], "symmetric"),
    ([[1, 0], [0, 2]], "even"),
    ([[2, 3], [3, 2]], "positive definite"),
    ([[2, 1]], "square"),
    ([[2, Fraction(1, 2)], [Fraction(1, 2), 2]], "integral"),
    ([], "square"),
])
def test_invalid_gram(gram, msg):
    with pytest.raises(LatticeError, match=msg):
        Lattice(gram)


def test_rep_validation_errors():
    lat = Lattice(A2)
    good = lat.dual_coset_reps()
    with pytest.raises(LatticeError, match="same class"):
        lat.check_alpha_reps([good[0], good[1], [1 + good[1][0], good[1][1]]])
    with pytest.raises(LatticeError, match="expected 3"):
        lat.check_alpha_reps(good[:2])
    with pytest.raises(LatticeError, match="dual lattice"):
        lat.check_alpha_reps([[Fraction(1, 2), 0]] + good[1:])
    with pytest.raises(LatticeError, match="divisor of the level"):
        lat.beta_reps(2)
