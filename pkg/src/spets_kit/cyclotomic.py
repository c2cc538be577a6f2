"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored by their coordinates on the power basis
1, zeta, ..., zeta^(phi(m)-1), i.e. reduced modulo the m-th cyclotomic
polynomial.  That basis is also a Z-basis of the ring of integers Z[zeta],
so integrality is a coordinatewise test.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache


@cache
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]
    for k in range(1, m):
        if m % k == 0:
            num = _divide(num, list(cyclotomic_poly(k)))
    return tuple(num)


def _divide(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    assert not any(num), "inexact cyclotomic division"
    return out


@cache
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of zeta^k, 0 <= k < m, on the power basis."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by zeta and reduce with zeta^deg = -sum phi_i zeta^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


def degree(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


class CycNum:
    """An element of Q(zeta_m)."""

    __slots__ = ("m", "coords")

    def __init__(self, m: int, coords):
        self.m = m
        coords = tuple(coords)
        if len(coords) != degree(m):
            raise ValueError("wrong number of coordinates")
        self.coords: tuple[Fraction | int, ...] = coords

    @classmethod
    def zero(cls, m: int) -> CycNum:
        return cls(m, (0,) * degree(m))

    @classmethod
    def rational(cls, m: int, q) -> CycNum:
        return cls(m, (q,) + (0,) * (degree(m) - 1))

    @classmethod
    def root(cls, m: int, k: int = 1) -> CycNum:
        """zeta_m ** k."""
        return cls(m, _power_table(m)[k % m])

    @classmethod
    def from_exponents(cls, m: int, counts) -> CycNum:
        """Sum of counts[k] * zeta^k; ``counts`` is a mapping or a sequence of length m."""
        items = counts.items() if hasattr(counts, "items") else enumerate(counts)
        table = _power_table(m)
        out = [0] * degree(m)
        for k, c in items:
            if c:
                for i, x in enumerate(table[k % m]):
                    out[i] += c * x
        return cls(m, out)

    def _coerce(self, other) -> CycNum:
        if isinstance(other, CycNum):
            if other.m != self.m:
                raise ValueError("mixing different cyclotomic fields")
            return other
        return CycNum.rational(self.m, other)

    def __add__(self, other):
        other = self._coerce(other)
        return CycNum(self.m, (a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.m, (-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            return CycNum(self.m, (a * other for a in self.coords))
        other = self._coerce(other)
        counts: dict[int, Fraction | int] = {}
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        counts[i + j] = counts.get(i + j, 0) + a * b
        return CycNum.from_exponents(self.m, _fold(counts, self.m))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, CycNum):
            return CycNum(self.m, (Fraction(a) / other for a in self.coords))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycNum.rational(self.m, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        return all(a == b for a, b in zip(self.coords, other.coords))

    def __hash__(self):
        return hash((self.m, self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def conjugate(self) -> CycNum:
        """Complex conjugation zeta -> zeta^-1."""
        return CycNum.from_exponents(self.m, {(-i) % self.m: a for i, a in enumerate(self.coords) if a})

    def is_integral(self) -> bool:
        return all(Fraction(a).denominator == 1 for a in self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.coords[0])

    def coefficient_sum(self):
        """Image under zeta -> 1 of the power-basis representative."""
        return sum(self.coords)

    def inverse(self) -> CycNum:
        """Solve x * self = 1 by Gaussian elimination over Q."""
        n = degree(self.m)
        basis = [CycNum(self.m, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
        cols = [(self * b).coords for b in basis]
        # matrix A with A[i][j] = coordinate i of self * zeta^j
        mat = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(1 if i == 0 else 0)] for i in range(n)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if mat[r][c] != 0), None)
            if pivot is None:
                raise ZeroDivisionError("zero is not invertible")
            mat[c], mat[pivot] = mat[pivot], mat[c]
            pv = mat[c][c]
            mat[c] = [x / pv for x in mat[c]]
            for r in range(n):
                if r != c and mat[r][c] != 0:
                    f = mat[r][c]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
        return CycNum(self.m, (_simplify(mat[i][n]) for i in range(n)))

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coords):
            if a:
                terms.append(f"{a}" if i == 0 else f"({a})*z^{i}")
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"CycNum({self.m}, {self.coords})"


def _fold(counts: dict[int, Fraction | int], m: int) -> dict[int, Fraction | int]:
    out: dict[int, Fraction | int] = {}
    for k, v in counts.items():
        out[k % m] = out.get(k % m, 0) + v
    return out


def _simplify(x: Fraction) -> Fraction | int:
    return int(x) if x.denominator == 1 else x
