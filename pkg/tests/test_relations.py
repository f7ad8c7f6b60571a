import random
from fractions import Fraction
from math import factorial

import pytest

from thetarel.config import builtin_spec
from thetarel.exactmath import CyclotomicElement, matrix_rank
from thetarel.pipeline import search_p0
from thetarel.relations import (IndexPair, all_theta_vectors, find_relations, index_set, n_bound,
                                theta_vector)
from thetarel.taylor import hat_closure

from expected import A2_P0, A3_P0, COUNTS, D4_P0


@pytest.fixture(scope="module")
def d4_data():
    spec = builtin_spec("D4")
    res = search_p0(spec)
    vectors = all_theta_vectors(spec.lattice, spec.alphas, spec.beta_reps, spec.power, res.index)
    return spec, res.index, vectors


def test_n_bound_closed_forms():
    for s in range(12):
        p = (s, 0, 0, 0)
        assert n_bound(p, 2, 2, 4) == 1 + s // 4
        assert n_bound((s, 0), 3, 3, 2) == (3 + s) // 3
    assert n_bound((0,) * 4, 2, 2, 4) == 1
    assert n_bound((2, 2, 2, 2), 2, 2, 4) == 3


@pytest.mark.parametrize("name,P0,dim,level,power", [
    ("D4", D4_P0, 4, 2, 2), ("A2", A2_P0, 2, 3, 3), ("A3", A3_P0, 3, 8, 2)])
def test_index_set_sizes(name, P0, dim, level, power):
    index = index_set(hat_closure(P0), level, power, dim)
    assert len(index) == COUNTS[name][2]
    assert len(set(index)) == len(index)


def test_singleton_index_set():
    assert index_set([(0, 0)], 3, 3, 2) == [IndexPair((0, 0), 0), IndexPair((0, 0), 1)]


def _entry(vector, index, p, n):
    return vector.values[index.index(IndexPair(p, n))]


def test_small_entries(d4_data):
    spec, index, vectors = d4_data
    zero = (0,) * 4
    v00 = vectors[0]
    assert _entry(v00, index, zero, 0) == 1
    assert _entry(v00, index, zero, 1) == 48
    for v in vectors:
        if any(v.label.alpha):
            assert _entry(v, index, zero, 0) == 0


def test_integrality(d4_data):
    """Entries become integers once the dropped factor 4^lam * lam! is restored."""
    _, index, vectors = d4_data
    fractional = 0
    for v in vectors:
        for ix, x in zip(index, v.values):
            assert x.is_rational()
            lam = sum(ix.p) // 2
            assert (4 ** lam * factorial(lam) * x.to_fraction()).denominator == 1
            fractional += x.to_fraction().denominator != 1
    # without that factor a few s(p) = 8 entries carry a denominator 3
    assert fractional > 0


def test_a2_entries_are_cyclotomic_integers():
    spec = builtin_spec("A2")
    index = index_set(hat_closure(A2_P0), 3, 3, 2)[:40]
    for alpha in spec.alphas:
        for beta in spec.beta_reps:
            v = theta_vector(spec.lattice, alpha, beta, 3, index)
            assert all(c.denominator == 1 for x in v.values for c in x.coeffs)


def test_representative_invariance(d4_data):
    spec, index, vectors = d4_data
    lat = spec.lattice
    rng = random.Random(4)
    by_label = {(v.label.alpha, v.label.beta): v.values for v in vectors}
    dual = lat.dual_coset_reps()
    for _ in range(4):
        alpha = rng.choice(spec.alphas)
        beta = rng.choice(spec.beta_reps)
        w = [rng.randint(-2, 2) for _ in range(4)]
        s = [x + rng.randint(-1, 1) for x in rng.choice(dual)]
        shifted = theta_vector(lat, [a + x for a, x in zip(alpha, w)],
                               [b + x for b, x in zip(beta, s)], spec.power, index)
        assert shifted.values == by_label[(alpha, beta)]


def test_d4_relations(d4_data):
    spec, _, vectors = d4_data
    report = find_relations(vectors)
    assert report.rank == 7 and len(report.relations) == 9
    assert report.rank + len(report.relations) == len(vectors)
    pos = {(lab.alpha, lab.beta): i for i, lab in enumerate(report.independent)}
    zero = (Fraction(0),) * 4
    for r in report.relations:
        a, b = r.label.alpha, r.label.beta
        expected = [0] * 7
        expected[pos[(a, zero)]] += 1
        expected[pos[(zero, b)]] += 1
        expected[pos[(zero, zero)]] -= 1
        assert r.coefficients == expected


def test_relations_annihilate_the_matrix(d4_data):
    _, _, vectors = d4_data
    report = find_relations(vectors)
    rows = {v.label: v.values for v in vectors}
    for r in report.relations:
        for j, x in enumerate(rows[r.label]):
            combo = sum((c * rows[lab][j] for c, lab in zip(r.coefficients, report.independent)),
                        CyclotomicElement.rational(1, 0))
            assert combo == x


def test_rank_invariant_under_permutation(d4_data):
    _, _, vectors = d4_data
    shuffled = list(vectors)
    random.Random(9).shuffle(shuffled)
    assert find_relations(shuffled).rank == 7
    assert matrix_rank([v.values for v in vectors]) == 7


def test_alpha_filter_is_a_precondition():
    spec = builtin_spec("Q15-cube")
    bad = next(a for a in spec.alpha_reps if a not in spec.alphas)
    with pytest.raises(ValueError, match="fails the filter"):
        theta_vector(spec.lattice, bad, spec.beta_reps[0], 3, [IndexPair((0, 0), 0)])


def test_threads_give_identical_vectors(d4_data):
    spec, index, vectors = d4_data
    again = all_theta_vectors(spec.lattice, spec.alphas, spec.beta_reps, spec.power, index, threads=3)
    assert [(v.label, v.values) for v in again] == [(v.label, v.values) for v in vectors]
