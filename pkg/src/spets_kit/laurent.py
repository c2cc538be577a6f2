"""Sparse Laurent polynomials in X with integer (or rational) coefficients."""

from __future__ import annotations

from fractions import Fraction
import re


class LaurentPoly:
    """Immutable sparse polynomial; ``coeffs`` maps exponent to coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs: dict[int, int | Fraction] = {
            k: v for k, v in (coeffs or {}).items() if v != 0
        }

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def binomial(cls, exponent: int) -> LaurentPoly:
        """X^exponent - 1."""
        return cls({exponent: 1, 0: -1}) if exponent else cls()

    @classmethod
    def constant(cls, c) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def from_pairs(cls, pairs) -> LaurentPoly:
        return cls({int(k): v for k, v in pairs})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: accepts ``"1 + 2X + X^3 - X^-1"``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        coeffs: dict[int, int] = {}
        pos = 0
        term = re.compile(r"([+-]?)(\d+)?(X(?:\^(-?\d+))?)?")
        while pos < len(text):
            m = term.match(text, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(3)):
                raise ValueError(f"cannot parse {text!r} at {pos}")
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3) is None:
                exp = 0
            else:
                exp = int(m.group(4)) if m.group(4) else 1
            coeffs[exp] = coeffs.get(exp, 0) + (-coeff if m.group(1) == "-" else coeff)
            pos = m.end()
        return cls(coeffs)

    def pairs(self) -> list[tuple[int, int | Fraction]]:
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def __call__(self, x):
        return sum(c * x ** k for k, c in self.coeffs.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({k: v * other for k, v in self.coeffs.items()})
        out: dict[int, int | Fraction] = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by X^k."""
        return LaurentPoly({a + k: v for a, v in self.coeffs.items()})

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division treating both as polynomials after clearing X powers."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lo = min(0, self.valuation()) if self.coeffs else 0
        olo = other.valuation()
        num = dict(self.shift(-lo).coeffs)
        den = other.shift(-olo)
        dd, lead = den.degree(), den.coeffs[den.degree()]
        quot: dict[int, int | Fraction] = {}
        while num and max(num) >= dd:
            top = max(num)
            c = num[top]
            q = c // lead if isinstance(c, int) and isinstance(lead, int) and c % lead == 0 else Fraction(c, 1) / lead
            quot[top - dd] = q
            for k, v in den.coeffs.items():
                key = top - dd + k
                num[key] = num.get(key, 0) - q * v
                if num[key] == 0:
                    del num[key]
        return LaurentPoly(quot).shift(lo - olo), LaurentPoly(num).shift(lo)

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for k, c in self.pairs():
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                term = ("" if mag == 1 else str(mag)) + ("X" if k == 1 else f"X^{k}")
            if not out:
                out.append(term if c > 0 else "-" + term)
            else:
                out.append((" + " if c > 0 else " - ") + term)
        return "".join(out)

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


X = LaurentPoly.monomial(1)
ONE = LaurentPoly.constant(1)


def product_of(polys) -> LaurentPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out
