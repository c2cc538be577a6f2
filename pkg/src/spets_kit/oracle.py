"""Brute-force character theory of G(de, e, n) for small groups.

Everything here is computed from explicit group elements: characters as
induced-character sums, fake degrees as graded multiplicities in the
coinvariant algebra.  The closed formulas in ``invariants`` are checked
against these values.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations, product
from math import factorial

from .cyclotomic import CycNum
from .laurent import LaurentPoly
from .partitions import DEFAULT_BOUND, GroupSpec, Multipartition, MultipartitionOrbit, check_bound


@dataclass(frozen=True, order=True)
class GroupElement:
    """e_i -> zeta_m^{exponents[i]} e_{perm[i]}, with m = de."""

    exponents: tuple[int, ...]
    perm: tuple[int, ...]
    m: int

    def __mul__(self, other: GroupElement) -> GroupElement:
        """(self * other)(v) = self(other(v))."""
        exps = tuple(
            (other.exponents[i] + self.exponents[other.perm[i]]) % self.m for i in range(len(self.perm))
        )
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        return GroupElement(exps, perm, self.m)

    def inverse(self) -> GroupElement:
        n = len(self.perm)
        perm = [0] * n
        exps = [0] * n
        for i in range(n):
            perm[self.perm[i]] = i
            exps[self.perm[i]] = (-self.exponents[i]) % self.m
        return GroupElement(tuple(exps), tuple(perm), self.m)

    def cycles(self) -> list[tuple[int, int]]:
        """(length, exponent sum mod m) of every cycle of the underlying permutation."""
        seen = [False] * len(self.perm)
        out = []
        for start in range(len(self.perm)):
            if seen[start]:
                continue
            length, total, i = 0, 0, start
            while not seen[i]:
                seen[i] = True
                total += self.exponents[i]
                i = self.perm[i]
                length += 1
            out.append((length, total % self.m))
        return out

    def class_key(self) -> tuple[tuple[int, int], ...]:
        """Conjugacy class invariant in G(m, 1, n): the multiset of coloured cycles."""
        return tuple(sorted(self.cycles()))


def identity(m: int, n: int) -> GroupElement:
    return GroupElement((0,) * n, tuple(range(n)), m)


def enumerate_group(group: GroupSpec, bound: int | None = DEFAULT_BOUND) -> list[GroupElement]:
    """Every element of G(de, e, n): exponent sum divisible by e."""
    check_bound(group, bound)
    m, e, n = group.m, group.e, group.n
    out = []
    for perm in permutations(range(n)):
        for exps in product(range(m), repeat=n):
            if sum(exps) % e == 0:
                out.append(GroupElement(exps, perm, m))
    return out


def conjugacy_classes(group: GroupSpec, bound: int | None = DEFAULT_BOUND) -> list[list[GroupElement]]:
    """Classes of G(de, e, n) by orbit enumeration under conjugation."""
    elements = enumerate_group(group, bound)
    todo = set(elements)
    classes = []
    for g in elements:
        if g not in todo:
            continue
        cls = {x * g * x.inverse() for x in elements}
        todo -= cls
        classes.append(sorted(cls))
    return classes


# ------------------------------------------------------------- characters


@cache
def symmetric_character(shape: tuple[int, ...], cycle_type: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama: value of the S_n character ``shape`` on ``cycle_type``.

    ``shape`` is any sequence of parts; ``cycle_type`` lists cycle lengths.
    """
    parts = sorted((p for p in shape if p), reverse=True)
    if sum(parts) != sum(cycle_type):
        raise ValueError("shape and cycle type have different sizes")
    if not cycle_type:
        return 1
    k = len(parts)
    beta = [parts[i] + (k - 1 - i) for i in range(k)]
    r = cycle_type[0]
    rest = cycle_type[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - r
        if c < 0 or c in bset:
            continue
        sign = (-1) ** sum(1 for x in beta if c < x < b)
        new_beta = sorted((bset - {b}) | {c}, reverse=True)
        new_parts = tuple(x - (k - 1 - i) for i, x in enumerate(new_beta))
        total += sign * symmetric_character(tuple(p for p in new_parts if p), rest)
    return total


def _inducing_value(mp: Multipartition, h: GroupElement, blocks: list[range]) -> CycNum | None:
    """Value at h of the character induced from; None when h leaves the Young subgroup."""
    m = h.m
    value = 1
    power = 0
    for i, block in enumerate(blocks):
        for j in block:
            if h.perm[j] not in block:
                return None
        cycle_type = []
        seen = set()
        for start in block:
            if start in seen:
                continue
            length, x = 0, start
            while x not in seen:
                seen.add(x)
                x = h.perm[x]
                length += 1
            cycle_type.append(length)
        value *= symmetric_character(mp.components[i], tuple(sorted(cycle_type, reverse=True)))
        power += i * sum(h.exponents[j] for j in block)
    return CycNum.root(m, power) * value


def _blocks(mp: Multipartition) -> list[range]:
    out, start = [], 0
    for size in mp.sizes():
        out.append(range(start, start + size))
        start += size
    return out


def character_value(mp: Multipartition, g: GroupElement, elements: list[GroupElement] | None = None) -> CycNum:
    """chi_alpha(g) on G(de, 1, n) as (1/|H|) sum over x of psi(x g x^-1).

    H is the Young subgroup prod G(de, 1, n_i), on which the inducing
    character is (gamma^i times the S_{n_i} character alpha_i) on block i.
    ``elements`` may pass the precomputed G(de, 1, n).
    """
    m, n = len(mp.components), mp.n
    if elements is None:
        elements = enumerate_group(GroupSpec(m, 1, n), None)
    blocks = _blocks(mp)
    order_h = 1
    for size in mp.sizes():
        order_h *= m ** size * factorial(size)
    total = CycNum.zero(m)
    for x in elements:
        v = _inducing_value(mp, x * g * x.inverse(), blocks)
        if v is not None:
            total = total + v
    return total / order_h


@dataclass
class CharacterTable:
    """Values of the G(de, 1, n) irreducibles on G(de, 1, n) class keys."""

    m: int
    n: int
    keys: list[tuple]
    representatives: dict[tuple, GroupElement]
    values: dict[Multipartition, dict[tuple, CycNum]]


@cache
def wreath_character_table(m: int, n: int) -> CharacterTable:
    elements = enumerate_group(GroupSpec(m, 1, n), None)
    reps: dict[tuple, GroupElement] = {}
    for g in elements:
        reps.setdefault(g.class_key(), g)
    keys = sorted(reps)
    from .partitions import enumerate_multipartitions

    values = {}
    for mp in enumerate_multipartitions(GroupSpec(m, 1, n), None):
        values[mp] = {k: character_value(mp, reps[k], elements) for k in keys}
    return CharacterTable(m, n, keys, reps, values)


def class_sizes(group: GroupSpec, bound: int | None = DEFAULT_BOUND) -> Counter:
    """Number of elements of G(de, e, n) in each G(de, 1, n) class."""
    return Counter(g.class_key() for g in enumerate_group(group, bound))


def restricted_character(label, group: GroupSpec | None = None) -> dict[tuple, CycNum]:
    """Restriction to G(de, e, n) of chi of the G(de, 1, n) label; keys are class keys."""
    mp = label.representative if isinstance(label, MultipartitionOrbit) else label
    table = wreath_character_table(mp.m, mp.n)
    return table.values[mp.with_group(mp.m, 1)]


def inner_product(chi: dict, psi: dict, sizes: Counter, order: int) -> Fraction:
    total = CycNum.zero(next(iter(chi.values())).m)
    for key, count in sizes.items():
        total = total + chi[key] * psi[key].conjugate() * count
    return (total / order).to_rational()


# ------------------------------------------------------------ fake degrees


def det_char_series(g: GroupElement, degree: int) -> list[CycNum]:
    """Coefficients of 1 / det(1 - X g) up to X^degree.

    det(1 - X g) is the product over cycles of (1 - zeta^s X^len).
    """
    m = g.m
    series = [CycNum.rational(m, 1)] + [CycNum.zero(m)] * degree
    for length, s in g.cycles():
        c = CycNum.root(m, s)
        factor = [CycNum.zero(m)] * (degree + 1)
        power = CycNum.rational(m, 1)
        for k in range(0, degree + 1, length):
            factor[k] = power
            power = power * c
        series = _mul_truncated(series, factor, degree)
    return series


def _mul_truncated(a: list[CycNum], b: list[CycNum], degree: int) -> list[CycNum]:
    m = a[0].m
    out = [CycNum.zero(m)] * (degree + 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j in range(degree + 1 - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + x * b[j]
    return out


def coinvariant_series(g: GroupElement, degrees: tuple[int, ...]) -> list[CycNum]:
    """Graded trace of g on the coinvariant algebra: prod (1 - X^d_i) / det(1 - X g)."""
    top = sum(d - 1 for d in degrees)
    series = det_char_series(g, top)
    m = g.m
    for d in degrees:
        factor = [CycNum.zero(m)] * (top + 1)
        factor[0] = CycNum.rational(m, 1)
        if d <= top:
            factor[d] = CycNum.rational(m, -1)
        series = _mul_truncated(series, factor, top)
    return series


def fake_degree_oracle(label, group: GroupSpec | None = None, bound: int | None = DEFAULT_BOUND) -> LaurentPoly:
    """sum_j m_j X^j, m_j the multiplicity of the (restricted) character in coinvariant degree j.

    ``label`` is a multipartition of G(de, 1, n) or an orbit; ``group``
    defaults to the label's own group.  For an orbit of G(de, e, n) the
    character used is the restriction of chi_alpha, i.e. the sum of its
    s_e(alpha) components.
    """
    mp = label.representative if isinstance(label, MultipartitionOrbit) else label
    group = mp.group if group is None else group
    check_bound(group, bound)
    chi = restricted_character(mp)
    sizes = class_sizes(group, None)
    table = wreath_character_table(group.m, group.n)
    m = group.m
    top = sum(d - 1 for d in group.degrees)
    acc = [CycNum.zero(m)] * (top + 1)
    for key, count in sizes.items():
        series = coinvariant_series(table.representatives[key], group.degrees)
        weight = chi[key].conjugate() * count
        for j in range(top + 1):
            if not series[j].is_zero():
                acc[j] = acc[j] + series[j] * weight
    coeffs = {}
    for j, x in enumerate(acc):
        q = (x / group.order).to_rational() if not x.is_zero() else Fraction(0)
        if q.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {q} in degree {j}")
        if q:
            coeffs[j] = int(q)
    return LaurentPoly(coeffs)
