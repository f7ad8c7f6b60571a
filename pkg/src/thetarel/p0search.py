"""Greedy search for a set P0 of multi-indices with an invertible Taylor matrix.

For the rescaled lattice L' the candidate p contributes the row
``B_p[j] = sum_{v in S_j} prod_l B'(v, e_l)^(p_l)`` over the non-zero
cosets t_j of L'#/L', with S_j the vectors of minimal norm in t_j + L'.
The entries are integers because B'(v, e_l) = (G' v)_l for v in L'#.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .enumeration import min_vectors
from .exactmath import IncrementalEchelon
from .lattice import Lattice, Vector, normalize
from .qseries import theta_partial_qexp
from .taylor import MultiIndex, multi_indices

log = logging.getLogger(__name__)


class P0SearchError(RuntimeError):
    """The candidate multi-indices ran out before the target rank was reached."""

    def __init__(self, achieved: int, target: int, max_sum: int):
        super().__init__(f"P0 search reached rank {achieved} of {target} with s(p) <= {max_sum}; "
                         "raise max_sum")
        self.achieved = achieved
        self.target = target
        self.max_sum = max_sum


@dataclass
class TaylorState:
    """Coset data of a rescaled lattice needed to build Taylor rows."""

    lattice: Lattice
    reps: list[Vector]
    minima: list[Fraction]
    min_vectors: list[list[tuple[int, ...]]] = field(repr=False)  # G' v for v in S_j

    @property
    def d(self) -> int:
        return len(self.reps)


def taylor_state(lat_rescaled: Lattice, reps: Sequence[Sequence] | None = None, c=None) -> TaylorState:
    reps = [normalize(r) for r in (reps or lat_rescaled.dual_coset_reps())]
    if any(reps[0]):
        raise ValueError("the first coset representative must be zero")
    minima, images = [], []
    for t in reps:
        m, vs = min_vectors(lat_rescaled, t, c=c)
        minima.append(m)
        images.append([tuple(int(x) for x in lat_rescaled.gram_times(v)) for v in vs])
    return TaylorState(lat_rescaled, reps, minima, images)


def bp_row(state: TaylorState, p: Sequence[int]) -> list[int]:
    """Row of B_p over the non-zero cosets (columns 2..d)."""
    row = []
    for images in state.min_vectors[1:]:
        total = 0
        for b in images:
            t = 1
            for x, e in zip(b, p):
                if e:
                    t *= x ** e
            total += t
        row.append(total)
    return row


def find_p0(lat_rescaled: Lattice, max_sum: int = 10, reps=None, c=None,
            state: TaylorState | None = None) -> list[MultiIndex]:
    """Greedy P0: the zero index followed by d-1 multi-indices raising the rank.

    Candidates are all non-zero p with s(p) <= max_sum in (s, lex) order;
    a candidate is kept exactly when its row is independent of the rows
    kept so far.
    """
    state = state or taylor_state(lat_rescaled, reps, c)
    n = lat_rescaled.n
    target = state.d - 1
    chosen: list[MultiIndex] = [(0,) * n]
    if target == 0:
        return chosen
    ech = IncrementalEchelon(target, order=1, track=False)
    for p in multi_indices(n, max_sum)[1:]:
        if ech.add(bp_row(state, p)) is None:
            chosen.append(p)
            log.debug("P0: accepted %s (rank %d)", p, ech.rank)
            if ech.rank == target:
                return chosen
    raise P0SearchError(ech.rank, target, max_sum)


def bp_matrix(state: TaylorState, P0: Sequence[Sequence[int]]) -> list[list[int]]:
    """The d x d matrix with rows (delta_{p,0}, B_p)."""
    return [[int(not any(p))] + bp_row(state, p) for p in P0]


# ---------------------------------------------------------------------------
# q-expansion check of the full derivative matrix


@dataclass
class FLP0Check:
    """Outcome of the truncated determinant of (d^p theta_{L', t_j})."""

    nonzero_below_trunc: bool
    completed: bool               # elimination found a pivot in every step
    leading_exponent: Fraction | None
    leading_coefficient: Fraction | None


def flp0_qexp_check(lat_rescaled: Lattice, P0: Sequence[Sequence[int]], trunc, reps=None,
                    c=None) -> FLP0Check:
    """Determinant of a_ij = sum_{v in t_j + L'} prod_l B'(v,e_l)^(p_i,l) q^Q(v), truncated.

    Column j is q^(m_j) times an integral power series, m_j the coset
    minimum.  The power series part is eliminated over Q[[q]] with full
    pivoting on the q-adic valuation, which keeps every entry exact to
    the working precision.
    """
    from math import ceil

    state = taylor_state(lat_rescaled, reps, c)
    d = state.d
    if len(P0) != d:
        raise ValueError(f"P0 must have {d} elements")
    trunc = Fraction(trunc)
    shift = sum(state.minima, Fraction(0))
    prec = ceil(trunc - shift)
    if prec <= 0:
        return FLP0Check(False, False, None, None)
    cols = []
    for t, m in zip(state.reps, state.minima):
        series = []
        for p in P0:
            part = theta_partial_qexp(lat_rescaled, t, p, m + prec, c=c)
            row = [Fraction(0)] * prec
            for e, coeff in part.coeffs.items():
                k = e - m
                assert k.denominator == 1
                row[int(k)] += coeff
            series.append(row)
        cols.append(series)
    A = [[cols[j][i] for j in range(d)] for i in range(d)]
    det_val, det_lead, done = _series_det(A, prec)
    if not done:
        return FLP0Check(False, False, None, None)
    lead_exp = shift + det_val
    return FLP0Check(lead_exp < trunc, True, lead_exp, det_lead)


def _valuation(s: list) -> int:
    for i, x in enumerate(s):
        if x:
            return i
    return len(s)


def _series_det(A: list[list[list[Fraction]]], prec: int):
    """Valuation and leading coefficient of det A over Q[[q]] mod q^prec."""
    n = len(A)
    A = [[list(x) for x in r] for r in A]
    sign = 1
    val = 0
    lead = Fraction(1)
    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                v = _valuation(A[i][j])
                if v < prec and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            return None, None, False
        v, i, j = best
        if i != k:
            A[k], A[i] = A[i], A[k]
            sign = -sign
        if j != k:
            for r in A:
                r[k], r[j] = r[j], r[k]
            sign = -sign
        piv = A[k][k]
        val += v
        lead *= piv[v]
        # unit part u with piv = q^v u, known mod q^(prec - v)
        u = piv[v:]
        inv = _series_inverse(u, prec - v)
        for i in range(k + 1, n):
            a = A[i][k]
            if not any(a):
                continue
            # ratio = a / piv = (a / q^v) * inv, valid mod q^(prec - v)
            ratio = _series_mul(a[v:], inv, prec - v)
            for j in range(k, n):
                prod = _series_mul(ratio, A[k][j], prec)
                A[i][j] = [x - y for x, y in zip(A[i][j], prod)]
    return val, sign * lead, True


def _series_mul(a: list, b: list, prec: int) -> list:
    out = [Fraction(0)] * prec
    for i, x in enumerate(a[:prec]):
        if x:
            for j, y in enumerate(b[: prec - i]):
                if y:
                    out[i + j] += x * y
    return out


def _series_inverse(u: list, prec: int) -> list:
    out = [Fraction(0)] * prec
    out[0] = 1 / Fraction(u[0])
    for i in range(1, prec):
        acc = sum((u[j] * out[i - j] for j in range(1, min(i, len(u) - 1) + 1)), Fraction(0))
        out[i] = -acc * out[0]
    return out
