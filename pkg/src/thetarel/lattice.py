"""Even positive-definite lattices given by Gram matrices, and their cosets."""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .exactmath import as_fraction, determinant, lcm, mat_inverse, mat_vec, smith_normal_form

Vector = tuple  # tuple of Fractions


class LatticeError(ValueError):
    """Invalid Gram matrix or coset representative."""


def vec(v: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in v)


def normalize(v: Sequence) -> Vector:
    """Reduce every coordinate into [0, 1)."""
    return tuple(x - (x.numerator // x.denominator) for x in vec(v))


def is_integral(v: Iterable) -> bool:
    return all(as_fraction(x).denominator == 1 for x in v)


def common_denominator(v: Iterable) -> int:
    d = 1
    for x in v:
        d = lcm(d, as_fraction(x).denominator)
    return d


class Lattice:
    """An even positive-definite lattice Z^n with Gram matrix G.

    Q(v) = v G v^T / 2 and B(v, w) = v G w^T, for row vectors of
    coordinates in the basis of the lattice.
    """

    def __init__(self, gram: Sequence[Sequence[int]]):
        try:
            g = [[as_fraction(x) for x in row] for row in gram]
        except TypeError as exc:
            raise LatticeError(str(exc)) from None
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise LatticeError("Gram matrix must be square and non-empty")
        if any(x.denominator != 1 for r in g for x in r):
            raise LatticeError("Gram matrix must be integral")
        gi = [[int(x) for x in r] for r in g]
        if any(gi[i][j] != gi[j][i] for i in range(n) for j in range(n)):
            raise LatticeError("Gram matrix must be symmetric")
        if any(gi[i][i] % 2 for i in range(n)):
            raise LatticeError("Gram matrix must have even diagonal")
        for k in range(1, n + 1):
            if determinant([r[:k] for r in gi[:k]]) <= 0:
                raise LatticeError("Gram matrix must be positive definite")
        self.gram: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in gi)
        self.n = n

    def __repr__(self):
        return f"Lattice({[list(r) for r in self.gram]})"

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    @cached_property
    def det(self) -> int:
        return int(determinant(self.gram))

    @cached_property
    def gram_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(r) for r in mat_inverse(self.gram))

    @cached_property
    def level(self) -> int:
        """Smallest N with N G^-1 integral and of even diagonal."""
        inv = self.gram_inverse
        n = 1
        for i, r in enumerate(inv):
            for j, x in enumerate(r):
                n = lcm(n, (x / 2).denominator if i == j else x.denominator)
        return n

    @cached_property
    def _snf(self):
        return smith_normal_form(self.gram)

    @property
    def elementary_divisors(self) -> list[int]:
        d, _, _ = self._snf
        return [d[i][i] for i in range(self.n)]

    def quad(self, v: Sequence) -> Fraction:
        v = vec(v)
        return self.bilinear(v, v) / 2

    def bilinear(self, v: Sequence, w: Sequence) -> Fraction:
        v, w = vec(v), vec(w)
        return sum((v[i] * sum(self.gram[i][j] * w[j] for j in range(self.n)) for i in range(self.n)), Fraction(0))

    def gram_times(self, v: Sequence) -> Vector:
        """G v, the vector of values B(v, e_l)."""
        return tuple(mat_vec(self.gram, vec(v)))

    def rescale(self, factor: int) -> "Lattice":
        """The lattice with Gram matrix factor * G."""
        if factor < 1:
            raise LatticeError("rescaling factor must be a positive integer")
        return Lattice([[factor * x for x in r] for r in self.gram])

    def in_dual(self, v: Sequence) -> bool:
        return is_integral(self.gram_times(v))

    def dual_equivalent(self, v: Sequence, w: Sequence) -> bool:
        """True when v - w lies in L."""
        return is_integral(a - b for a, b in zip(vec(v), vec(w)))

    def dual_coset_reps(self) -> list[Vector]:
        """Representatives of L#/L with coordinates in [0,1), zero first."""
        _, _, V = self._snf
        ds = self.elementary_divisors
        reps = []
        for y in itertools.product(*(range(d) for d in ds)):
            t = [sum(V[i][k] * Fraction(y[k], ds[k]) for k in range(self.n)) for i in range(self.n)]
            reps.append(normalize(t))
        return reps

    def beta_count(self, power: int) -> int:
        out = 1
        for d in self.elementary_divisors:
            out *= power // gcd(d, power)
        return out

    def beta_reps(self, power: int) -> list[Vector]:
        """Representatives of (L# + L/power)/L#, each of the form w/power with w integral."""
        self._check_power(power)
        _, _, V = self._snf
        ds = self.elementary_divisors
        mods = [power // gcd(d, power) for d in ds]
        reps = []
        for y in itertools.product(*(range(m) for m in mods)):
            w = mat_vec(V, y)
            reps.append(normalize([Fraction(x, power) for x in w]))
        return reps

    def _check_power(self, power: int):
        if power < 1 or self.level % power:
            raise LatticeError(f"power {power} must be a positive divisor of the level {self.level}")

    def validate_alpha(self, alpha: Sequence, power: int) -> bool:
        """Whether alpha in L# survives the filter power * Q(alpha) in Z."""
        if not self.in_dual(alpha):
            raise LatticeError(f"{alpha} is not in the dual lattice")
        return (power * self.quad(alpha)).denominator == 1

    def in_beta_group(self, beta: Sequence, power: int) -> bool:
        """Whether beta lies in L# + L/power."""
        beta = vec(beta)
        for t in self.dual_coset_reps():
            if is_integral(power * (b - x) for b, x in zip(beta, t)):
                return True
        return False

    def check_alpha_reps(self, reps: Sequence[Sequence]) -> list[Vector]:
        """Validate a complete system of representatives of L#/L."""
        reps = [vec(r) for r in reps]
        if any(len(r) != self.n for r in reps):
            raise LatticeError("representative has the wrong dimension")
        for r in reps:
            if not self.in_dual(r):
                raise LatticeError(f"{_fmt(r)} is not in the dual lattice")
        for a, b in itertools.combinations(reps, 2):
            if self.dual_equivalent(a, b):
                raise LatticeError(f"{_fmt(a)} and {_fmt(b)} represent the same class of L#/L")
        if len(reps) != self.det:
            raise LatticeError(f"expected {self.det} representatives of L#/L, got {len(reps)}")
        return reps

    def check_beta_reps(self, reps: Sequence[Sequence], power: int) -> list[Vector]:
        """Validate a complete system of representatives of (L# + L/power)/L#."""
        self._check_power(power)
        reps = [vec(r) for r in reps]
        if any(len(r) != self.n for r in reps):
            raise LatticeError("representative has the wrong dimension")
        for r in reps:
            if not self.in_beta_group(r, power):
                raise LatticeError(f"{_fmt(r)} is not in L# + L/{power}")
        for a, b in itertools.combinations(reps, 2):
            if self.in_dual([x - y for x, y in zip(a, b)]):
                raise LatticeError(f"{_fmt(a)} and {_fmt(b)} represent the same class modulo L#")
        expected = self.beta_count(power)
        if len(reps) != expected:
            raise LatticeError(f"expected {expected} beta representatives, got {len(reps)}")
        return reps


def _fmt(v: Sequence) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def format_vector(v: Sequence) -> str:
    return _fmt(v)
