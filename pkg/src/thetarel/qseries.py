"""Truncated Jacobi q-series, used as an independent check of the relations.

A series is stored as ``{exponent: {monomial: buckets}}`` where the
exponent is the rational power of q, the monomial is the integer exponent
vector of zeta_1..zeta_n, and ``buckets[r]`` is the coefficient of
zeta_m^r.  Products are formed in the group ring Q[C_m] and then reduced
to the canonical form whose non-zero buckets sit at the power-basis
positions r < phi(m); terms that reduce to zero are dropped, so equal
series have equal term maps.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .enumeration import vectors_in_coset_bounded
from .exactmath import CyclotomicElement, as_fraction, lcm, residues_to_coeffs
from .lattice import Lattice, common_denominator, vec
from .taylor import PPolynomial, pkpm, theta_weight


@dataclass
class JacobiQSeries:
    n_vars: int
    trunc: Fraction
    order: int
    terms: dict = field(default_factory=dict)  # exponent -> monomial -> list of bucket values
    meta: dict = field(default_factory=dict, compare=False)

    def coefficient(self, exponent, monomial: Sequence[int]) -> CyclotomicElement:
        b = self.terms.get(as_fraction(exponent), {}).get(tuple(monomial))
        if b is None:
            return CyclotomicElement.rational(self.order, 0)
        return CyclotomicElement.from_residues(self.order, b)

    def laurent(self, exponent) -> dict:
        """The Laurent polynomial at q^exponent as {monomial: CyclotomicElement}, zeros dropped."""
        out = {}
        for m, b in self.terms.get(as_fraction(exponent), {}).items():
            c = CyclotomicElement.from_residues(self.order, b)
            if not c.is_zero():
                out[m] = c
        return out

    def exponents(self) -> list[Fraction]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def nonzero_terms(self) -> list[tuple[Fraction, tuple, CyclotomicElement]]:
        out = []
        for e in sorted(self.terms):
            for m in sorted(self.terms[e]):
                c = CyclotomicElement.from_residues(self.order, self.terms[e][m])
                if not c.is_zero():
                    out.append((e, m, c))
        return out

    def dump(self) -> str:
        """Plain-text listing sorted by exponent, then monomial."""
        lines = [f"# trunc {self.trunc}, coefficients in Q(zeta_{self.order})"]
        for e, m, c in self.nonzero_terms():
            lines.append(f"{e}\t{' '.join(map(str, m))}\t{c}")
        return "\n".join(lines) + "\n"

    def lift(self, order: int) -> "JacobiQSeries":
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} to {order}")
        step = order // self.order
        terms = {}
        for e, poly in self.terms.items():
            terms[e] = {}
            for m, b in poly.items():
                nb = [0] * order
                for r, x in enumerate(b):
                    nb[r * step] += x
                terms[e][m] = nb
        return JacobiQSeries(self.n_vars, self.trunc, order, _canon(terms, order), dict(self.meta))


@dataclass
class QSeries:
    """A truncated series in q with exact coefficients (rational or cyclotomic)."""

    trunc: Fraction
    coeffs: dict  # exponent -> value

    def nonzero(self) -> dict:
        return {e: c for e, c in sorted(self.coeffs.items()) if c}


def _canon(terms: dict, order: int) -> dict:
    out = {}
    for e, poly in terms.items():
        dst = {}
        for m, b in poly.items():
            c = residues_to_coeffs(order, b)
            if any(c):
                dst[m] = c + [0] * (order - len(c))
        if dst:
            out[e] = dst
    return out


def _bucket_elem(order: int, value) -> list:
    """Group-ring buckets for a rational or cyclotomic scalar."""
    b = [0] * order
    if isinstance(value, CyclotomicElement):
        value = value.lift(lcm(value.order, order)) if order % value.order == 0 else None
        if value is None:
            raise ValueError("coefficient field does not embed in the series field")
        for i, c in enumerate(value.coeffs):
            b[i % order] += c
        return b
    b[0] = as_fraction(value)
    return b


def theta_qexp(lat: Lattice, alpha: Sequence, beta: Sequence, trunc, c=None) -> JacobiQSeries:
    """theta_{alpha,beta} = sum_{v in alpha + L} e(B(beta, v - alpha)) q^Q(v) zeta^(G v).

    The monomial exponent G v is already integral for v in L#.
    """
    alpha, beta = vec(alpha), vec(beta)
    trunc = as_fraction(trunc)
    order = lat.level
    terms: dict = defaultdict(dict)
    for w in vectors_in_coset_bounded(lat, alpha, trunc, c=c):
        v = [a + x for a, x in zip(alpha, w)]
        e = lat.quad(v)
        if e >= trunc:
            continue
        mon = tuple(int(x) for x in lat.gram_times(v))
        phase = order * lat.bilinear(beta, w)
        if phase.denominator != 1:
            raise ValueError("beta pairs with L outside (1/level) Z")
        b = [0] * order
        b[int(phase) % order] = 1
        terms[e][mon] = b
    return JacobiQSeries(lat.n, trunc, order, _canon(terms, order), {"alpha": alpha, "beta": beta})


def _conv(a: list, b: list, order: int) -> list:
    out = [0] * order
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[(i + j) % order] += x * y
    return out


def series_mul(a: JacobiQSeries, b: JacobiQSeries) -> JacobiQSeries:
    order = lcm(a.order, b.order)
    a, b = a.lift(order), b.lift(order)
    trunc = min(a.trunc, b.trunc)
    out: dict = defaultdict(dict)
    b_items = sorted(b.terms.items())
    for ea, pa in a.terms.items():
        for eb, pb in b_items:
            e = ea + eb
            if e >= trunc:
                break
            dst = out[e]
            for ma, ca in pa.items():
                for mb, cb in pb.items():
                    m = tuple(x + y for x, y in zip(ma, mb))
                    prod = _conv(ca, cb, order)
                    cur = dst.get(m)
                    if cur is None:
                        dst[m] = prod
                    else:
                        dst[m] = [x + y for x, y in zip(cur, prod)]
    return JacobiQSeries(a.n_vars, trunc, order, _canon(out, order))


def series_pow(a: JacobiQSeries, k: int) -> JacobiQSeries:
    if k < 1:
        raise ValueError("power must be positive")
    out = a
    for _ in range(k - 1):
        out = series_mul(out, a)
    return out


def series_add(a: JacobiQSeries, b: JacobiQSeries, coeff=1) -> JacobiQSeries:
    """a + coeff * b."""
    cb = coeff
    order = lcm(a.order, b.order)
    if isinstance(cb, CyclotomicElement):
        order = lcm(order, cb.order)
    a, b = a.lift(order), b.lift(order)
    scalar = _bucket_elem(order, cb)
    terms = {e: {m: list(x) for m, x in p.items()} for e, p in a.terms.items()}
    for e, p in b.terms.items():
        dst = terms.setdefault(e, {})
        for m, x in p.items():
            prod = _conv(scalar, x, order)
            cur = dst.get(m)
            dst[m] = prod if cur is None else [u + w for u, w in zip(cur, prod)]
    trunc = min(a.trunc, b.trunc)
    terms = {e: p for e, p in terms.items() if e < trunc}
    return JacobiQSeries(a.n_vars, trunc, order, _canon(terms, order))


def evaluate_relation(coeffs: Sequence, series: Sequence[JacobiQSeries]) -> JacobiQSeries:
    """sum_i coeffs[i] * series[i]; a valid relation gives the zero series."""
    if len(coeffs) != len(series) or not series:
        raise ValueError("need one coefficient per series")
    acc = JacobiQSeries(series[0].n_vars, min(s.trunc for s in series), 1, {})
    for c, s in zip(coeffs, series):
        acc = series_add(acc, s, c)
    return acc


def theta_partial_qexp(lat: Lattice, t: Sequence, p: Sequence[int], trunc, c=None) -> QSeries:
    """sum_{v in t + L, Q(v) < trunc} prod_l B(v, e_l)^(p_l) q^Q(v)."""
    t = vec(t)
    trunc = as_fraction(trunc)
    out: dict = defaultdict(Fraction)
    for w in vectors_in_coset_bounded(lat, t, trunc, c=c):
        v = [a + x for a, x in zip(t, w)]
        e = lat.quad(v)
        if e >= trunc:
            continue
        term = Fraction(1)
        for b, k in zip(lat.gram_times(v), p):
            term *= b ** k
        out[e] += term
    return QSeries(trunc, dict(out))


# ---------------------------------------------------------------------------
# Taylor coefficients read off a q-series


def _series_moments(series: JacobiQSeries, lat: Lattice, power: int, n: int, monomials) -> tuple[int, dict]:
    """For the q^n part: E and {mu: buckets of sum c(m) U(m)^mu} where U = E G^-1 m / power."""
    inv = lat.gram_inverse
    E = power * common_denominator(x for r in inv for x in r)
    poly = series.terms.get(Fraction(n), {})
    out: dict = {}
    maxdeg = [max((mu[i] for mu in monomials), default=0) for i in range(lat.n)]
    for m, b in poly.items():
        if not any(b):
            continue
        U = [int(sum(inv[i][j] * m[j] for j in range(lat.n)) * E / power) for i in range(lat.n)]
        pw = []
        for i, x in enumerate(U):
            row = [1]
            for _ in range(maxdeg[i]):
                row.append(row[-1] * x)
            pw.append(row)
        for mu in monomials:
            f = 1
            for i, e in enumerate(mu):
                if e:
                    f *= pw[i][e]
            if f:
                acc = out.get(mu)
                if acc is None:
                    out[mu] = [x * f for x in b]
                else:
                    out[mu] = [x + y * f for x, y in zip(acc, b)]
    return E, out


def dkp_values(series: JacobiQSeries, lat: Lattice, power: int, index) -> list[CyclotomicElement]:
    """Apply P_{power*dim/2, p, power*G} to the q^n part of a series, for each (p, n)."""
    M = [[power * x for x in r] for r in lat.gram]
    polys = {}
    by_n: dict = defaultdict(set)
    for p, n in index:
        if n >= series.trunc:
            raise ValueError(f"series truncated at {series.trunc} cannot give index n={n}")
        key = (tuple(p), n)
        if key not in polys:
            polys[key] = pkpm(theta_weight(power, lat.n), p, M)
            by_n[n].update(polys[key].x_monomials())
    moments = {n: _series_moments(series, lat, power, n, mons) for n, mons in by_n.items()}
    out = []
    for p, n in index:
        P: PPolynomial = polys[(tuple(p), n)]
        E, mom = moments[n]
        acc = [Fraction(0)] * series.order
        for e, coef in P.terms.items():
            b = mom.get(e[1:])
            if b is None:
                continue
            f = coef * Fraction(n) ** e[0] / Fraction(E) ** sum(e[1:])
            for r, x in enumerate(b):
                if x:
                    acc[r] += f * x
        out.append(CyclotomicElement.from_residues(series.order, acc))
    return out


def dkp_of_combination(lat: Lattice, power: int, coeffs: Sequence, labels: Sequence, p: Sequence[int],
                       trunc, c=None) -> QSeries:
    """The q-series sum_n D_{p,n}(f) q^n of f = sum_i coeffs[i] theta_{labels[i]}^power."""
    trunc = as_fraction(trunc)
    cache: dict = {}
    powers = []
    for alpha, beta in labels:
        key = (vec(alpha), vec(beta))
        if key not in cache:
            cache[key] = series_pow(theta_qexp(lat, alpha, beta, trunc, c=c), power)
        powers.append(cache[key])
    f = evaluate_relation(coeffs, powers)
    ns = [n for n in range(int(trunc) + (0 if trunc.denominator == 1 else 1)) if n < trunc]
    vals = dkp_values(f, lat, power, [(tuple(p), n) for n in ns])
    return QSeries(trunc, dict(zip(ns, vals)))
