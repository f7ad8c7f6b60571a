"""Multi-indices and the polynomials P_{k,p,M}.

P_{k,p,M} is a polynomial in X0, X1..Xn.  It is weighted homogeneous of
degree s(p) when X0 has weight 2 and the other variables weight 1, so it
is stored as a map from exponent tuples (mu0, mu1, ..., mun) to rationals.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .exactmath import as_fraction

MultiIndex = tuple  # tuple of non-negative ints


def s(p: Sequence[int]) -> int:
    return sum(p)


def sort_key(p: Sequence[int]) -> tuple:
    """Order multi-indices by total degree, then lexicographically."""
    return (sum(p), tuple(p))


def preceq(q: Sequence[int], p: Sequence[int]) -> bool:
    """q below p componentwise with s(q) of the same parity as s(p)."""
    return all(a <= b for a, b in zip(q, p)) and (sum(p) - sum(q)) % 2 == 0


def _below(p: Sequence[int]) -> Iterable[tuple]:
    for q in itertools.product(*(range(x + 1) for x in p)):
        if (sum(p) - sum(q)) % 2 == 0:
            yield q


def hat_closure(P: Iterable[Sequence[int]]) -> list[MultiIndex]:
    """All q with q below some p in P, sorted by (s, lex)."""
    out: set = set()
    for p in P:
        if tuple(p) not in out:
            out.update(_below(tuple(p)))
    return sorted(out, key=sort_key)


def multi_indices(n: int, max_sum: int) -> list[MultiIndex]:
    """All multi-indices of length n with s(p) <= max_sum, sorted by (s, lex)."""
    out = []
    for total in range(max_sum + 1):
        out.extend(sorted(_compositions(total, n)))
    return out


def _compositions(total: int, n: int) -> Iterable[tuple]:
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, n - 1):
            yield (first,) + rest


def check_weight(k) -> Fraction:
    """Return k as a Fraction, checking 2k is an integer."""
    k = as_fraction(k)
    if (2 * k).denominator != 1:
        raise ValueError(f"weight {k} is not a half-integer")
    return k


def theta_weight(power: int, dim: int) -> Fraction:
    """Weight of the power-th power of a theta series of a rank-dim lattice."""
    return Fraction(power * dim, 2)


def gamma_ratio(k, a: int, b: int) -> Fraction:
    """Gamma(k + a) / Gamma(k + b) as an exact rational, for integers a, b.

    For a >= b this is the product (k+b)(k+b+1)...(k+a-1), taken as is even
    where Gamma itself has poles.
    """
    k = check_weight(k)
    if a >= b:
        out = Fraction(1)
        for j in range(b, a):
            out *= k + j
        return out
    den = Fraction(1)
    for j in range(a, b):
        den *= k + j
    if den == 0:
        raise ValueError(f"Gamma ratio undefined: zero factor for k={k}, a={a}, b={b}")
    return 1 / den


def lambda_prime(p: Sequence[int]) -> int:
    return (sum(p) - 1) // 2


class PPolynomial:
    """A polynomial in X0, X1..Xn with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, Fraction]):
        self.nvars = nvars
        self.terms = {e: Fraction(c) for e, c in terms.items() if c}

    def __eq__(self, other):
        return isinstance(other, PPolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"PPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mon = "*".join(f"X{i}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x)
            parts.append(f"{c}" if not mon else (mon if c == 1 else f"-{mon}" if c == -1 else f"{c}*{mon}"))
        return " + ".join(parts).replace("+ -", "- ")

    def evaluate(self, x0, xs: Sequence) -> Fraction:
        x0 = as_fraction(x0)
        xs = [as_fraction(x) for x in xs]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c * x0 ** e[0]
            for x, k in zip(xs, e[1:]):
                if k:
                    t *= x ** k
            total += t
        return total

    def x_monomials(self) -> set:
        return {e[1:] for e in self.terms}

    def apply_moments(self, n, moments: Mapping[tuple, object]):
        """sum_e c_e n^e0 moments[e[1:]], where moments holds sums of X^mu."""
        total = 0
        for e, c in self.terms.items():
            m = moments.get(e[1:])
            if m:
                total = total + m * (c * Fraction(n) ** e[0])
        return total


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _poly_pow(a: dict, k: int, n: int) -> dict:
    out = {(0,) * n: Fraction(1)}
    for _ in range(k):
        out = _poly_mul(out, a)
    return out


@lru_cache(maxsize=None)
def _quadratic_power(M: tuple, h: int) -> dict:
    """(sum_ij m_ij T_i T_j)^h / h! as a polynomial in T."""
    n = len(M)
    quad: dict = {}
    for i in range(n):
        for j in range(n):
            if M[i][j]:
                e = tuple((i == t) + (j == t) for t in range(n))
                quad[e] = quad.get(e, 0) + M[i][j]
    out = _poly_pow(quad, h, n)
    f = factorial(h)
    return {e: c / f for e, c in out.items()}


@lru_cache(maxsize=None)
def _linear_power(M: tuple, q: tuple) -> dict:
    """prod_j (sum_i X_i m_ij)^(q_j) as a polynomial in X1..Xn."""
    n = len(M)
    out = {(0,) * n: Fraction(1)}
    for j, qj in enumerate(q):
        if qj:
            lin = {tuple(int(t == i) for t in range(n)): M[i][j] for i in range(n) if M[i][j]}
            out = _poly_mul(out, _poly_pow(lin, qj, n))
    return out


def _freeze(M) -> tuple:
    return tuple(tuple(as_fraction(x) for x in r) for r in M)


def pkpm(k, p: Sequence[int], M) -> PPolynomial:
    """P_{k,p,M} via the sum over q below p."""
    return _pkpm(check_weight(k), tuple(int(x) for x in p), _freeze(M))


@lru_cache(maxsize=None)
def _pkpm(k: Fraction, p: tuple, M: tuple) -> PPolynomial:
    n = len(p)
    if len(M) != n or any(len(r) != n for r in M):
        raise ValueError("M must be square of the size of p")
    sp = sum(p)
    lam = lambda_prime(p)
    terms: dict = {}
    for q in _below(p):
        h = (sp - sum(q)) // 2
        diff = tuple(a - b for a, b in zip(p, q))
        coeff_t = _quadratic_power(M, h).get(diff)
        if not coeff_t:
            continue
        qfact = 1
        for x in q:
            qfact *= factorial(x)
        g = gamma_ratio(k, (sp + sum(q)) // 2 - 1, lam)
        scalar = Fraction(2 ** sp) * coeff_t * g * Fraction(-1, 2) ** h / qfact
        if not scalar:
            continue
        for e, c in _linear_power(M, q).items():
            key = (h,) + e
            terms[key] = terms.get(key, 0) + scalar * c
    return PPolynomial(n + 1, terms)


def _matrices_with_sum(n: int, total: int) -> Iterable[tuple]:
    """All n x n non-negative integer matrices (flattened) with entry sum total."""
    return _compositions(total, n * n)


def pkpm_definition(k, p: Sequence[int], M) -> PPolynomial:
    """P_{k,p,M} straight from its defining triple sum (slow reference)."""
    k = check_weight(k)
    p = tuple(int(x) for x in p)
    M = _freeze(M)
    n = len(p)
    sp = sum(p)
    lam = lambda_prime(p)
    terms: dict = {}
    for mu0 in range(sp // 2 + 1):
        for lam_flat in _matrices_with_sum(n, mu0):
            L = [lam_flat[i * n:(i + 1) * n] for i in range(n)]
            pi = [sum(L[i]) + sum(L[r][i] for r in range(n)) for i in range(n)]
            rest = [p[i] - pi[i] for i in range(n)]
            if min(rest) < 0:
                continue
            g = gamma_ratio(k, sp - 1 - mu0, lam)
            base = Fraction((-1) ** mu0 * 2 ** (sp - mu0)) * g
            lam_part = Fraction(1)
            for i in range(n):
                for j in range(n):
                    if L[i][j]:
                        lam_part *= M[i][j] ** L[i][j] / factorial(L[i][j])
            if not lam_part:
                continue
            # Omega column j is a composition of rest[j] into n row entries
            for cols in itertools.product(*(_compositions(r, n) for r in rest)):
                om_part = Fraction(1)
                for j, col in enumerate(cols):
                    for i, x in enumerate(col):
                        if x:
                            om_part *= M[i][j] ** x / factorial(x)
                if not om_part:
                    continue
                mu = tuple(sum(col[i] for col in cols) for i in range(n))
                key = (mu0,) + mu
                terms[key] = terms.get(key, 0) + base * lam_part * om_part
    return PPolynomial(n + 1, terms)
