"""Exact arithmetic: rationals, cyclotomic fields and linear algebra over them.

Rationals are :class:`fractions.Fraction`.  Elements of the cyclotomic field
Q(zeta_m) are stored as coefficient tuples in the power basis
1, x, ..., x^(phi(m)-1) of Q[x]/Phi_m(x).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "CyclotomicElement"]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and strings such as ``"3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def prime_divisors(m: int) -> list[int]:
    out, d = [], 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def euler_phi(m: int) -> int:
    result = m
    for q in prime_divisors(m):
        result = result // q * (q - 1)
    return result


def mobius(m: int) -> int:
    sign, d = 1, 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            sign = -sign
        d += 1
    return -sign if m > 1 else sign


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-to-high, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[: len(den) - 1]), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m)[:-1]:
        poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k gives x^(phi+k) in the power basis, for 0 <= k < phi - 1."""
    phi = euler_phi(m)
    tail = [-c for c in cyclotomic_polynomial(m)[:phi]]  # x^phi
    rows = []
    cur = tail
    for _ in range(max(phi - 1, 0)):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c + top * t for c, t in zip(cur, tail)]
    return tuple(rows)


def _reduce(m: int, coeffs: Sequence) -> list:
    """Reduce a coefficient list of any length modulo Phi_m."""
    phi = euler_phi(m)
    out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
    if len(coeffs) <= phi:
        return out
    # x^j for j >= phi: fold with x^m = 1 first, then use the table
    extra = [0] * m
    for j in range(phi, len(coeffs)):
        c = coeffs[j]
        if c:
            j %= m
            if j < phi:
                out[j] += c
            else:
                extra[j] += c
    table = _reduction_table(m)
    for j in range(phi, m):
        c = extra[j]
        if c:
            if j - phi < len(table):
                row = table[j - phi]
            else:
                row = _power_row(m, j)
            for i, t in enumerate(row):
                if t:
                    out[i] += c * t
    return out


@lru_cache(maxsize=None)
def _power_row(m: int, j: int) -> tuple[int, ...]:
    """x^j mod Phi_m as an integer coefficient tuple."""
    phi = euler_phi(m)
    j %= m
    if j < phi:
        return tuple(1 if i == j else 0 for i in range(phi))
    if j - phi < len(_reduction_table(m)):
        return _reduction_table(m)[j - phi]
    prev = _power_row(m, j - 1)
    tail = [-c for c in cyclotomic_polynomial(m)[:phi]]
    top = prev[-1]
    cur = [0] + list(prev[:-1])
    return tuple(c + top * t for c, t in zip(cur, tail))


def zeta_power_coeffs(m: int, r: int) -> tuple[int, ...]:
    """Integer coordinates of zeta_m^r in the power basis."""
    return _power_row(m, r % m)


def residues_to_coeffs(m: int, buckets: Sequence) -> list:
    """Map sum_r buckets[r] * zeta_m^r (r = 0..m-1) to power-basis coordinates."""
    phi = euler_phi(m)
    out = [0] * phi
    for r, c in enumerate(buckets):
        if c:
            row = _power_row(m, r)
            for i, t in enumerate(row):
                if t:
                    out[i] += c * t
    return out


class CyclotomicElement:
    """An element of Q(zeta_m), immutable.

    Arithmetic between elements of different orders lifts both to the
    field of order lcm(m, m') through zeta_m -> zeta_lcm^(lcm/m).
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = (), *, _reduced: bool = False):
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        coeffs = [as_fraction(c) for c in coeffs]
        if not _reduced:
            coeffs = _reduce(order, coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "CyclotomicElement":
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def rational(cls, order: int, value) -> "CyclotomicElement":
        phi = euler_phi(order)
        return cls._raw(order, (as_fraction(value),) + (Fraction(0),) * (phi - 1))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CyclotomicElement":
        return cls._raw(order, tuple(Fraction(c) for c in zeta_power_coeffs(order, power)))

    @classmethod
    def from_residues(cls, order: int, buckets: Sequence) -> "CyclotomicElement":
        """Build sum_r buckets[r] zeta^r from a length-``order`` list."""
        return cls._raw(order, tuple(Fraction(c) for c in residues_to_coeffs(order, buckets)))

    @property
    def phi(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def lift(self, order: int) -> "CyclotomicElement":
        """Embed into Q(zeta_order); ``order`` must be a multiple of self.order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot lift order {self.order} into order {order}")
        step = order // self.order
        buckets = [Fraction(0)] * order
        for i, c in enumerate(self.coeffs):
            if c:
                buckets[(i * step) % order] += c
        return CyclotomicElement._raw(order, tuple(Fraction(c) for c in residues_to_coeffs(order, buckets)))

    def _coerce(self, other) -> tuple["CyclotomicElement", "CyclotomicElement"] | None:
        if isinstance(other, CyclotomicElement):
            if other.order == self.order:
                return self, other
            m = lcm(self.order, other.order)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self, CyclotomicElement.rational(self.order, other)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicElement._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicElement._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CyclotomicElement._raw(self.order, tuple(x * other for x in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        phi = a.phi
        if phi == 1:
            return CyclotomicElement._raw(a.order, (a.coeffs[0] * b.coeffs[0],))
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicElement._raw(a.order, tuple(Fraction(c) for c in _reduce(a.order, prod)))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.phi == 1:
            return CyclotomicElement._raw(self.order, (1 / self.coeffs[0],))
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        s = _poly_inverse_mod(list(self.coeffs), modulus)
        return CyclotomicElement(self.order, s)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CyclotomicElement._raw(self.order, tuple(x / other for x in self.coeffs))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicElement.rational(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def normalized_trace(self) -> Fraction:
        """Tr_{Q(zeta_m)/Q}(x) / phi(m); unchanged under lifting."""
        m = self.order
        total = Fraction(0)
        for j, c in enumerate(self.coeffs):
            if c:
                g = m // gcd(m, j)
                total += c * Fraction(mobius(g), euler_phi(g))
        return total

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(("cyclotomic", self.normalized_trace()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"CyclotomicElement({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"({c})*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def _poly_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return q, _poly_trim(a[: len(b) - 1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a: list, modulus: list) -> list:
    r0, r1 = _poly_trim(list(modulus)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element not invertible")
    c = r1[0]
    return [x / c for x in s1]


# --------------------------------------------------------------------------
# linear algebra

Entry = Union[Fraction, CyclotomicElement]


class ExactMatrix:
    """A dense matrix over Q or a single cyclotomic field Q(zeta_order)."""

    __slots__ = ("rows", "cols", "order", "entries")

    def __init__(self, data: Sequence[Sequence], order: int | None = None):
        data = [list(r) for r in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged matrix")
        if order is None:
            order = 1
            for r in data:
                for x in r:
                    if isinstance(x, CyclotomicElement):
                        order = lcm(order, x.order)
        self.order = order
        self.entries = [[_to_field(x, order) for x in r] for r in data]

    def row(self, i: int) -> list:
        return self.entries[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols}, order={self.order})"


def _to_field(x, order: int):
    """Fractions for order 1 or 2 (where Q(zeta) = Q); cyclotomic otherwise."""
    if euler_phi(order) == 1:
        if isinstance(x, CyclotomicElement):
            return x.lift(lcm(x.order, order)).coeffs[0] if euler_phi(lcm(x.order, order)) == 1 else _bad(x, order)
        return as_fraction(x)
    if isinstance(x, CyclotomicElement):
        if order % x.order:
            _bad(x, order)
        return x.lift(order)
    return CyclotomicElement.rational(order, as_fraction(x))


def _bad(x, order):
    raise ValueError(f"{x!r} does not lie in Q(zeta_{order})")


def _size(x) -> int:
    if isinstance(x, CyclotomicElement):
        return sum(c.numerator.bit_length() + c.denominator.bit_length() for c in x.coeffs if c)
    return x.numerator.bit_length() + x.denominator.bit_length()


class IncrementalEchelon:
    """Row echelon basis that grows one row at a time.

    :meth:`add` returns ``None`` if the new row raised the rank, and
    otherwise the unique coefficients expressing it in the previously
    accepted rows (when ``track`` is set) or an empty list.
    Over Q the rows are kept as primitive integer vectors, so no
    fractions appear during elimination.
    """

    def __init__(self, ncols: int, order: int = 1, track: bool = True):
        self.ncols = ncols
        self.order = order
        self.track = track
        self.rational = euler_phi(order) == 1
        self.pivots: list[int] = []      # pivot column per basis row
        self.basis: list[list] = []      # reduced rows
        self.combos: list[list] = []     # basis row as combination of accepted inputs
        self.accepted = 0

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _zero(self):
        return 0 if self.rational else CyclotomicElement.rational(self.order, 0)

    def add(self, row: Sequence) -> list | None:
        if len(row) != self.ncols:
            raise ValueError("row length mismatch")
        if self.rational:
            return self._add_rational(row)
        return self._add_field(row)

    def _add_rational(self, row):
        fr = [x.to_fraction() if isinstance(x, CyclotomicElement) else as_fraction(x) for x in row]
        den = 1
        for x in fr:
            den = lcm(den, x.denominator)
        vec = [int(x * den) for x in fr]
        # invariant: vec = scale * input + sum(combo[k] * accepted[k])
        scale = Fraction(den)
        combo = [Fraction(0)] * self.accepted if self.track else None
        for piv, brow, bcombo in zip(self.pivots, self.basis, self.combos):
            c = vec[piv]
            if not c:
                continue
            p = brow[piv]
            vec = [p * x - c * y for x, y in zip(vec, brow)]
            g = 0
            for x in vec:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g > 1:
                vec = [x // g for x in vec]
            if self.track:
                scale = scale * p / max(g, 1)
                combo = [(p * x - c * y) / max(g, 1) for x, y in zip(combo, bcombo)] + \
                    [(p * x) / max(g, 1) for x in combo[len(bcombo):]]
        if any(vec):
            piv = min((i for i, x in enumerate(vec) if x), key=lambda i: (abs(vec[i]).bit_length(), i))
            if self.track:
                self.combos.append(combo + [scale])
            else:
                self.combos.append([])
            self.pivots.append(piv)
            self.basis.append(vec)
            self.accepted += 1
            return None
        if not self.track:
            return []
        return [-x / scale for x in combo]

    def _add_field(self, row):
        vec = [_to_field(x, self.order) for x in row]
        one = CyclotomicElement.rational(self.order, 1)
        zero = CyclotomicElement.rational(self.order, 0)
        # vec = input - sum(combo_k * accepted_k)
        combo = [zero] * self.accepted if self.track else None
        for piv, brow, bcombo in zip(self.pivots, self.basis, self.combos):
            c = vec[piv]
            if c:
                vec = [x - c * y if y else x for x, y in zip(vec, brow)]
                if self.track:
                    combo = [x + c * y if y else x for x, y in zip(combo, bcombo + [zero] * (len(combo) - len(bcombo)))]
        if any(not x.is_zero() for x in vec):
            piv = min((i for i, x in enumerate(vec) if x), key=lambda i: (_size(vec[i]), i))
            inv = vec[piv].inverse()
            vec = [x * inv if x else x for x in vec]
            if self.track:
                self.combos.append([-(x * inv) for x in combo] + [one * inv])
            else:
                self.combos.append([])
            self.pivots.append(piv)
            self.basis.append(vec)
            self.accepted += 1
            return None
        if not self.track:
            return []
        return combo

    def reduce_only(self, row: Sequence) -> list | None:
        """Like :meth:`add` but never modifies the basis."""
        saved = (list(self.pivots), list(self.basis), list(self.combos), self.accepted)
        result = self.add(row)
        self.pivots, self.basis, self.combos, self.accepted = saved
        return result


def _as_matrix(A) -> ExactMatrix:
    return A if isinstance(A, ExactMatrix) else ExactMatrix(A)


def matrix_rank(A) -> int:
    """Exact rank of a rational or cyclotomic matrix."""
    A = _as_matrix(A)
    ech = IncrementalEchelon(A.cols, A.order, track=False)
    for r in A.entries:
        ech.add(r)
    return ech.rank


def solve_left(A, b) -> list | None:
    """Return x with x A = b, or None if b is not in the row space of A.

    Rows of A that depend on earlier rows get coefficient zero, so the
    answer is deterministic.
    """
    A = _as_matrix(A)
    if len(b) != A.cols:
        raise ValueError("length of b must equal the number of columns")
    ech = IncrementalEchelon(A.cols, A.order, track=True)
    used = []
    for i, r in enumerate(A.entries):
        if ech.add(r) is None:
            used.append(i)
    coeffs = ech.reduce_only(b)
    if coeffs is None:
        return None
    zero = Fraction(0) if ech.rational else CyclotomicElement.rational(A.order, 0)
    x = [zero] * A.rows
    for i, c in zip(used, coeffs):
        x[i] = c
    return x


def determinant(A) -> Entry:
    """Exact determinant by Gaussian elimination."""
    A = _as_matrix(A)
    if A.rows != A.cols:
        raise ValueError("determinant of a non-square matrix")
    n = A.rows
    m = [list(r) for r in A.entries]
    one = Fraction(1) if euler_phi(A.order) == 1 else CyclotomicElement.rational(A.order, 1)
    det = one
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return one * 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det = det * p
        inv = 1 / p
        for r in range(c + 1, n):
            f = m[r][c]
            if f:
                f = f * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Return (D, U, V) with D = U M V diagonal, d_i | d_(i+1), U and V unimodular."""
    n = len(M)
    k = len(M[0]) if n else 0
    A = [[int(x) for x in r] for r in M]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(k)] for i in range(k)]

    def swap_rows(X, i, j):
        X[i], X[j] = X[j], X[i]

    def swap_cols(X, i, j):
        for r in X:
            r[i], r[j] = r[j], r[i]

    def add_row(X, dst, src, f):  # row dst += f row src
        X[dst] = [a + f * b for a, b in zip(X[dst], X[src])]

    def add_col(X, dst, src, f):
        for r in X:
            r[dst] += f * r[src]

    t = 0
    while t < min(n, k):
        nz = [(abs(A[i][j]), i, j) for i in range(t, n) for j in range(t, k) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(A, t, i); swap_rows(U, t, i)
        swap_cols(A, t, j); swap_cols(V, t, j)
        while True:
            done = True
            for i in range(t + 1, n):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(A, i, t, -q); add_row(U, i, t, -q)
                    if A[i][t]:
                        done = False
            for j in range(t + 1, k):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(A, j, t, -q); add_col(V, j, t, -q)
                    if A[t][j]:
                        done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, n) for j in range(t + 1, k)
                            if A[i][j] % A[t][t]), None)
                if bad is None:
                    break
                add_row(A, t, bad[0], 1); add_row(U, t, bad[0], 1)
                continue
            nz = [(abs(A[i][t]), i, t) for i in range(t, n) if A[i][t]] + \
                 [(abs(A[t][j]), t, j) for j in range(t, k) if A[t][j]]
            _, i, j = min(nz)
            swap_rows(A, t, i); swap_rows(U, t, i)
            swap_cols(A, t, j); swap_cols(V, t, j)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return A, U, V


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(r, c)) for c in zip(*B)] for r in A]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(r, v)) for r in A]


def mat_inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square rational matrix by Gauss-Jordan."""
    n = len(A)
    m = [[as_fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [r[n:] for r in m]
