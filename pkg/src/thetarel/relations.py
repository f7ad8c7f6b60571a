"""Taylor-coefficient vectors of theta powers and the relations among them.

For a label (alpha, beta) and an index (p, n) the entry is

    sum over tuples (v_1..v_N') with sum Q(alpha + v_i) = n of
        zeta_N'^(N' B(beta, sum v_i)) * P_{N'dim/2, p, N'G}(n, sum(alpha + v_i) / N')

which is the (p, n) Taylor coefficient of theta_{alpha,beta}^N' up to a
factor depending only on (p, n).  Entries live in Q(zeta_N').
"""
from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import NamedTuple, Sequence

from .enumeration import CandidateList, _tuples
from .exactmath import CyclotomicElement, IncrementalEchelon, lcm, prime_divisors
from .lattice import Lattice, Vector, common_denominator, format_vector, vec
from .taylor import MultiIndex, pkpm, theta_weight

log = logging.getLogger(__name__)


class IndexPair(NamedTuple):
    p: MultiIndex
    n: int


def n_bound(p: Sequence[int], level: int, power: int, dim: int) -> int:
    """Largest n needed for the index p by the Sturm-type bound."""
    delta = 2 if level in (1, 2) else 1
    prod = Fraction(1)
    for q in prime_divisors(level):
        prod *= 1 - Fraction(1, q * q)
    val = Fraction(delta * level * level, 24) * (Fraction(power * dim, 2) + sum(p)) * prod
    return floor(val)


def index_set(P0hat: Sequence[Sequence[int]], level: int, power: int, dim: int) -> list[IndexPair]:
    """All (p, n) with p in P0hat and 0 <= n <= n_bound(p), in P0hat order."""
    out = []
    for p in P0hat:
        p = tuple(p)
        for n in range(n_bound(p, level, power, dim) + 1):
            out.append(IndexPair(p, n))
    return out


@dataclass(frozen=True)
class Label:
    alpha: Vector
    beta: Vector

    def __str__(self):
        return f"({format_vector(self.alpha)},{format_vector(self.beta)})"


@dataclass
class ThetaVector:
    label: Label
    order: int
    values: list  # CyclotomicElement per index


class _Moments:
    """Per alpha: grouped tuple counts and the integer moment tables."""

    def __init__(self, lat: Lattice, alpha: Vector, power: int, n_max: int, c=None):
        self.lat = lat
        self.alpha = alpha
        self.power = power
        cands = CandidateList(lat, alpha, n_max, c=c)
        scale = cands.scale
        counts: dict = defaultdict(int)
        vectors = cands.vectors
        n = lat.n
        for total, ids in _tuples(cands, power, n_max * scale):
            if total % scale:
                continue
            w = [0] * n
            for j in ids:
                for i, x in enumerate(vectors[j]):
                    w[i] += x
            counts[(total // scale, tuple(w))] += 1
        self.counts = counts
        # X = sum(alpha + v_i) / power = U / E with U integral
        self.E = power * common_denominator(alpha)
        self.a_scaled = [int(x * self.E) for x in alpha]  # E * alpha

    def U(self, w: Sequence[int]) -> tuple[int, ...]:
        # E * (power * alpha + w) / power = E * alpha + (E / power) * w
        return tuple(a + (self.E // self.power) * x for a, x in zip(self.a_scaled, w))


def _beta_residues(lat: Lattice, beta: Vector, power: int, w: Sequence[int]) -> int:
    r = power * lat.bilinear(beta, w)
    if r.denominator != 1:
        raise ValueError("beta is not in L# + L/power")
    return int(r) % power


def theta_vectors(lat: Lattice, alpha: Sequence, betas: Sequence[Sequence], power: int,
                  index: Sequence[IndexPair], c=None) -> list[ThetaVector]:
    """Theta vectors for one alpha and several betas from one pass over tuples."""
    alpha = vec(alpha)
    betas = [vec(b) for b in betas]
    dim = lat.n
    if not lat.validate_alpha(alpha, power):
        raise ValueError(f"{format_vector(alpha)} fails the filter {power} * Q(alpha) in Z")
    if not index:
        return [ThetaVector(Label(alpha, b), power, []) for b in betas]
    n_max = max(ix.n for ix in index)
    mom = _Moments(lat, alpha, power, n_max, c)
    M = [[power * x for x in r] for r in lat.gram]
    k = theta_weight(power, dim)

    polys = {}
    monomials_by_n: dict = defaultdict(set)
    for ix in index:
        key = (ix.p, ix.n)
        if key not in polys:
            polys[key] = pkpm(k, ix.p, M)
            monomials_by_n[ix.n].update(polys[key].x_monomials())

    # group by (n, residue vector over betas) and sum U^mu inside each group
    groups: dict = defaultdict(lambda: defaultdict(int))
    cache_res = {}
    for (n, w), cnt in mom.counts.items():
        if n not in monomials_by_n:
            continue
        res = cache_res.get(w)
        if res is None:
            res = tuple(_beta_residues(lat, b, power, w) for b in betas)
            cache_res[w] = res
        mons = monomials_by_n[n]
        u = mom.U(w)
        table = groups[(n, res)]
        pw = [_powers(x, max((m[i] for m in mons), default=0)) for i, x in enumerate(u)]
        for m in mons:
            t = cnt
            for i, e in enumerate(m):
                if e:
                    t *= pw[i][e]
            table[m] += t

    # per beta and n: moments indexed by residue, then by monomial
    E = mom.E
    out = []
    for bi, beta in enumerate(betas):
        per_n: dict = defaultdict(lambda: defaultdict(lambda: [0] * power))
        for (n, res), table in groups.items():
            r = res[bi]
            dst = per_n[n]
            for m, val in table.items():
                dst[m][r] += val
        values = []
        for ix in index:
            P = polys[(ix.p, ix.n)]
            moments = per_n.get(ix.n, {})
            buckets = [Fraction(0)] * power
            for e, coeff in P.terms.items():
                m = e[1:]
                vals = moments.get(m)
                if vals is None:
                    continue
                f = coeff * Fraction(ix.n) ** e[0] / Fraction(E) ** sum(m)
                if f:
                    for r, x in enumerate(vals):
                        if x:
                            buckets[r] += f * x
            values.append(CyclotomicElement.from_residues(power, buckets))
        out.append(ThetaVector(Label(alpha, beta), power, values))
    return out


def _powers(x: int, k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out.append(out[-1] * x)
    return out


def theta_vector(lat: Lattice, alpha: Sequence, beta: Sequence, power: int,
                 index: Sequence[IndexPair], c=None) -> ThetaVector:
    return theta_vectors(lat, alpha, [beta], power, index, c)[0]


def all_theta_vectors(lat: Lattice, alphas: Sequence, betas: Sequence, power: int,
                      index: Sequence[IndexPair], c=None, threads: int = 1) -> list[ThetaVector]:
    """Vectors for every label, alpha-major and beta-minor, independent of ``threads``."""
    def work(alpha):
        return theta_vectors(lat, alpha, betas, power, index, c)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            chunks = list(ex.map(work, alphas))
    else:
        chunks = [work(a) for a in alphas]
    return [v for chunk in chunks for v in chunk]


@dataclass
class Relation:
    """label = sum coeffs[i] * independents[i] (as theta powers)."""

    label: Label
    coefficients: list  # CyclotomicElement, aligned with the independent labels


@dataclass
class RelationReport:
    labels: list[Label]
    independent: list[Label]
    relations: list[Relation]
    order: int

    @property
    def rank(self) -> int:
        return len(self.independent)


def find_relations(vectors: Sequence[ThetaVector]) -> RelationReport:
    """Process vectors in order, keeping a basis and expressing the rest in it."""
    if not vectors:
        return RelationReport([], [], [], 1)
    order = 1
    for v in vectors:
        order = lcm(order, v.order)
    ech = IncrementalEchelon(len(vectors[0].values), order=order, track=True)
    independent, relations = [], []
    for v in vectors:
        res = ech.add(v.values)
        if res is None:
            independent.append(v.label)
        else:
            coeffs = [_as_cyclotomic(x, order) for x in res]
            relations.append(Relation(v.label, coeffs))
    zero = CyclotomicElement.rational(order, 0)
    for r in relations:
        r.coefficients += [zero] * (len(independent) - len(r.coefficients))
    return RelationReport([v.label for v in vectors], independent, relations, order)


def _as_cyclotomic(x, order: int) -> CyclotomicElement:
    if isinstance(x, CyclotomicElement):
        return x.lift(order) if x.order != order else x
    return CyclotomicElement.rational(order, x)
