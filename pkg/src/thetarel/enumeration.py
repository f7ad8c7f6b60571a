"""Enumeration of short vectors in cosets alpha + Z^n.

All searches run in exact integer arithmetic: a coset alpha with common
denominator D is handled through the integer vector D * alpha.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Sequence

from .exactmath import as_fraction
from .lattice import Lattice, Vector, common_denominator, normalize, vec


def safe_c_bound(lat: Lattice) -> Fraction:
    """A certified constant c with sum_i x_i^2 <= c * Q(x) for every real x.

    The largest eigenvalue of G^-1 is at most its trace, and
    sum x_i^2 <= lambda_max(G^-1) * x G x^T = 2 lambda_max(G^-1) Q(x).
    """
    return 2 * sum((lat.gram_inverse[i][i] for i in range(lat.n)), Fraction(0))


class _CosetSearch:
    """Box search for v in Z^n with Q(alpha + v) <= bound."""

    def __init__(self, lat: Lattice, alpha: Sequence, c: Fraction | None):
        self.lat = lat
        self.alpha = vec(alpha)
        self.den = common_denominator(self.alpha)
        self.a = [int(x * self.den) for x in self.alpha]
        self.c = safe_c_bound(lat) if c is None else as_fraction(c)
        if self.c <= 0:
            raise ValueError("c bound must be positive")

    def scaled_quad2(self, v: Sequence[int]) -> int:
        """2 D^2 Q(alpha + v) as an integer."""
        g = self.lat.gram
        u = [self.den * x + a for x, a in zip(v, self.a)]
        n = len(u)
        return sum(u[i] * sum(g[i][j] * u[j] for j in range(n)) for i in range(n))

    def run(self, bound: Fraction) -> Iterator[tuple[int, ...]]:
        bound = as_fraction(bound)
        if bound < 0:
            return
        # sum (D v_i + a_i)^2 <= D^2 c bound, compared as integers after scaling
        box = self.c * bound * self.den * self.den
        limit_num, limit_den = box.numerator, box.denominator
        target = 2 * self.den * self.den * bound  # bound on scaled_quad2
        n = self.lat.n
        den = self.den
        # search around the reduced offsets a_i mod D, then shift back
        shift = [x // den for x in self.a]
        a = [x % den for x in self.a]
        v = [0] * n

        def rec(i: int, partial: int):
            if i == n:
                if self.scaled_quad2(v) <= target:
                    yield tuple(v)
                return
            ai = a[i]
            # integers in the order 0, 1, -1, 2, -2, ...
            k = 0
            while True:
                for x in ((k,) if k == 0 else (k, -k)):
                    t = den * x + ai
                    s = partial + t * t
                    if s * limit_den > limit_num:
                        if x < 0:
                            return
                        continue
                    v[i] = x - shift[i]
                    yield from rec(i + 1, s)
                k += 1

        yield from rec(0, 0)


def vectors_in_coset_bounded(lat: Lattice, alpha: Sequence, bound, c=None) -> list[tuple[int, ...]]:
    """All integer v with Q(alpha + v) <= bound, in deterministic search order."""
    return list(_CosetSearch(lat, alpha, c).run(bound))


def min_vectors(lat: Lattice, alpha: Sequence, c=None) -> tuple[Fraction, list[Vector]]:
    """Minimum of Q on alpha + Z^n and the vectors attaining it."""
    alpha = normalize(alpha)
    if not any(alpha):
        return Fraction(0), [alpha]
    search = _CosetSearch(lat, alpha, c)
    best, found = None, []
    for v in search.run(lat.quad(alpha)):
        q = search.scaled_quad2(v)
        if best is None or q < best:
            best, found = q, [v]
        elif q == best:
            found.append(v)
    scale = 2 * search.den * search.den
    return Fraction(best, scale), [tuple(x + y for x, y in zip(alpha, v)) for v in found]


class CandidateList:
    """Single vectors v with Q(alpha + v) <= bound, sorted by Q, with their scaled values."""

    def __init__(self, lat: Lattice, alpha: Sequence, bound, c=None, vectors=None):
        self.alpha = vec(alpha)
        search = _CosetSearch(lat, self.alpha, c)
        self.den = search.den
        self.scale = 2 * search.den * search.den  # Q = qint / scale
        if vectors is None:
            vectors = search.run(bound)
            pairs = [(search.scaled_quad2(v), v) for v in vectors]
            pairs.sort(key=lambda t: t[0])  # stable: keeps search order within a value
        else:
            pairs = [(search.scaled_quad2(v), tuple(v)) for v in vectors]
            if any(pairs[i][0] > pairs[i + 1][0] for i in range(len(pairs) - 1)):
                raise ValueError("candidate vectors must be sorted by increasing Q")
        self.qints = [q for q, _ in pairs]
        self.vectors = [v for _, v in pairs]

    def __len__(self):
        return len(self.vectors)


def _tuples(cands: CandidateList, power: int, limit: int) -> Iterator[tuple[int, tuple]]:
    """Yield (scaled Q-sum, tuple of indices) with scaled Q-sum <= limit."""
    qs = cands.qints
    m = len(qs)
    idx = [0] * power

    def rec(slot: int, partial: int):
        if slot == power:
            yield partial, tuple(idx)
            return
        rest_min = qs[0] * (power - slot - 1) if m else 0
        for j in range(m):
            s = partial + qs[j]
            if s + rest_min > limit:
                break
            idx[slot] = j
            yield from rec(slot + 1, s)

    if m:
        yield from rec(0, 0)


def tuples_with_q_sum_leq(lat: Lattice, alpha: Sequence, power: int, n_max, candidates=None,
                          c=None) -> Iterator[tuple[Fraction, tuple[tuple[int, ...], ...]]]:
    """All ordered tuples (v_1..v_power) with sum Q(alpha + v_i) <= n_max, with that sum."""
    cands = _candidates(lat, alpha, n_max, candidates, c)
    limit = int(as_fraction(n_max) * cands.scale // 1)
    for total, ids in _tuples(cands, power, limit):
        yield Fraction(total, cands.scale), tuple(cands.vectors[j] for j in ids)


def tuples_with_q_sum(lat: Lattice, alpha: Sequence, power: int, n, candidates=None,
                      c=None) -> list[tuple[tuple[int, ...], ...]]:
    """All ordered tuples with sum Q(alpha + v_i) exactly n."""
    n = as_fraction(n)
    return [t for s, t in tuples_with_q_sum_leq(lat, alpha, power, n, candidates, c) if s == n]


def _candidates(lat, alpha, bound, candidates, c) -> CandidateList:
    if isinstance(candidates, CandidateList):
        return candidates
    return CandidateList(lat, alpha, bound, c=c, vectors=candidates)
