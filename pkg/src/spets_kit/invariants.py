"""Poincare polynomials, fake degrees, the a- and b-invariants and families.

Fake degrees of G(de, 1, n) come from a closed product of factors
X^k - 1; those of G(de, e, n) are obtained by averaging over the rotation
orbit and dividing by (X^{nde} - 1) / (X^{nd} - 1).  The b-invariant is the
valuation of the fake degree, and the a-invariant is read off a symbol.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import comb

from .laurent import LaurentPoly, ONE, product_of
from .partitions import (
    DEFAULT_BOUND,
    GroupSpec,
    Multipartition,
    MultipartitionOrbit,
    enumerate_orbits,
    pad,
)
from .symbols import Weight, similarity_key, symbol_of


@dataclass(frozen=True, order=True)
class IrrepLabel:
    """Irreducible E_{alpha, l} of G(de, e, n); ``component`` runs over 1..s_e(alpha)."""

    orbit: MultipartitionOrbit
    component: int = 1

    @property
    def group(self) -> GroupSpec:
        return self.orbit.group

    @property
    def dimension(self) -> int:
        return self.orbit.component_dimension()

    def __str__(self):
        if self.orbit.stabilizer_order == 1:
            return str(self.orbit)
        return f"{self.orbit}#{self.component}"


def irreps(group: GroupSpec, bound: int = DEFAULT_BOUND) -> list[IrrepLabel]:
    return [
        IrrepLabel(o, l)
        for o in enumerate_orbits(group, bound)
        for l in range(1, o.stabilizer_order + 1)
    ]


def poincare(group: GroupSpec) -> LaurentPoly:
    """prod (X^{d_i} - 1) / (X - 1) over the degrees of the group."""
    out = ONE
    for deg in group.degrees:
        out = out * LaurentPoly.binomial(deg).exact_div(LaurentPoly.binomial(1))
    return out


def beta_set(part) -> tuple[int, ...]:
    """The set A = {part_j + j} for an increasing (possibly zero padded) part list."""
    return tuple(a + j for j, a in enumerate(part))


def _ratio(num: Counter, den: Counter, shift: int, extra: LaurentPoly = ONE) -> LaurentPoly:
    """extra * X^shift * prod(X^k - 1 for k in num) / prod(X^k - 1 for k in den)."""
    common = num & den
    num, den = num - common, den - common
    out = extra * product_of(LaurentPoly.binomial(k) for k in num.elements()).shift(shift)
    for k in sorted(den.elements(), reverse=True):
        out = out.exact_div(LaurentPoly.binomial(k))
    return out


def _component_factors(part, m: int) -> tuple[Counter, Counter, int]:
    """Binomial exponents of Delta(A, X^m), Theta(A, X^m) and the X power of Delta."""
    A = beta_set(part)
    num, den, shift = Counter(), Counter(), 0
    for x in range(len(A)):
        for y in range(x):
            num[m * (A[x] - A[y])] += 1
            shift += m * A[y]
    for a in A:
        for l in range(1, a + 1):
            den[m * l] += 1
    return num, den, shift


@cache
def fake_degree_wreath(components: tuple[tuple[int, ...], ...]) -> LaurentPoly:
    """Fake degree of E_alpha for G(m, 1, n), m = number of components."""
    m = len(components)
    n = sum(sum(c) for c in components)
    num = Counter(m * h for h in range(1, n + 1))
    den = Counter()
    shift = 0
    for i, comp in enumerate(components):
        cnum, cden, cshift = _component_factors(comp, m)
        num += cnum
        den += cden
        k = len(comp) - 1
        shift += cshift + i * sum(comp) - m * sum(comb(l, 2) for l in range(k + 1))
    return _ratio(num, den, shift)


def _as_orbit(label) -> MultipartitionOrbit:
    if isinstance(label, IrrepLabel):
        return label.orbit
    if isinstance(label, MultipartitionOrbit):
        return label
    return MultipartitionOrbit(label)


def fake_degree(label) -> LaurentPoly:
    """Fake degree of any component E_{alpha, l} of G(de, e, n)."""
    orbit = _as_orbit(label)
    alpha = orbit.representative
    if alpha.e == 1:
        return fake_degree_wreath(alpha.components)
    n, d, e = alpha.n, alpha.d, alpha.e
    if n == 0:
        return ONE
    total = LaurentPoly()
    for x in alpha.rotations():
        total = total + fake_degree_wreath(x.components)
    total = total * LaurentPoly.binomial(n * d)
    total = total.exact_div(LaurentPoly.binomial(n * d * e))
    s = orbit.stabilizer_order
    out = LaurentPoly({k: v // s for k, v in total.coeffs.items()})
    if out * s != total:
        raise ArithmeticError("orbit sum not divisible by the stabilizer order")
    return out


def fake_degree_product_form(label) -> LaurentPoly:
    """Same polynomial, via the rotation-invariant factor times a sum of monomials."""
    orbit = _as_orbit(label)
    alpha = orbit.representative
    n, d, e, m = alpha.n, alpha.d, alpha.e, alpha.m
    if n == 0:
        return ONE
    num = Counter(m * h for h in range(1, n))
    num[n * d] += 1
    den = Counter()
    shift = 0
    for comp in alpha.components:
        cnum, cden, cshift = _component_factors(comp, m)
        num += cnum
        den += cden
        shift += cshift - m * sum(comb(l, 2) for l in range(len(comp)))
    monomials = LaurentPoly()
    for j in range(e):
        sizes = alpha.rotate(j).sizes()
        monomials = monomials + LaurentPoly.monomial(sum(i * k for i, k in enumerate(sizes)))
    body = _ratio(num, den, shift, monomials)
    s = orbit.stabilizer_order
    return LaurentPoly({k: v // s for k, v in body.coeffs.items()})


def b_value(label) -> int:
    """Valuation of the fake degree."""
    return fake_degree(label).valuation()


def _pair_sum(A) -> int:
    """Sum over pairs b < a in A of the smaller element b."""
    A = sorted(A)
    return sum(b * (len(A) - 1 - idx) for idx, b in enumerate(A))


def b_closed_form(alpha: Multipartition, lengths=None) -> int:
    """b from the per-component closed formula; ``lengths`` fixes the zero padding.

    The rotation term is a minimum over the orbit of sum(i * n_i), which is
    what the valuation of the orbit average requires.
    """
    m, d, e = alpha.m, alpha.d, alpha.e
    if lengths is None:
        lengths = [len(c) for c in alpha.components]
    comps = [pad(c, k) for c, k in zip(alpha.components, lengths)]
    main = 0
    for comp in comps:
        A = beta_set(comp)
        main += _pair_sum(A) - sum(comb(l, 2) for l in range(len(comp)))
    twist = min(
        sum(i * (sum(beta_set(comps[(i + j * d) % m])) - len(comps[(i + j * d) % m]) * (len(comps[(i + j * d) % m]) - 1) // 2)
            for i in range(m))
        for j in range(e)
    )
    return m * main + twist


def b_wreath_staircase(alpha: Multipartition, k: int) -> int:
    """b for G(e, 1, n) with component 0 padded to k+1 entries and the others to k."""
    e = alpha.m
    lengths = [k + 1] + [k] * (e - 1)
    comps = [pad(c, L) for c, L in zip(alpha.components, lengths)]
    sets = [beta_set(c) for c in comps]
    return (
        e * sum(_pair_sum(A) for A in sets)
        + sum(i * sum(A) for i, A in enumerate(sets))
        - sum(comb(e * l + 1, 2) for l in range(k))
    )


def b_diagonal_staircase(alpha: Multipartition, k: int) -> int:
    """b for G(e, e, n) with every component padded to k entries."""
    e = alpha.m
    comps = [pad(c, k) for c in alpha.components]
    sets = [beta_set(c) for c in comps]
    return (
        e * sum(_pair_sum(A) for A in sets)
        + min(sum(i * sum(sets[(i + j) % e]) for i in range(e)) for j in range(e))
        - sum(comb(e * l, 2) for l in range(k))
    )


def _require_spetsial_family(group: GroupSpec):
    if group.d > 1 and group.e > 1:
        raise ValueError(f"{group} is not one of G(e,1,n), G(e,e,n): a-values unsupported")


def a_value(label) -> int:
    """a from the type (1, 0) symbol: weight b for G(e,1,n), weight d for G(e,e,n)."""
    orbit = _as_orbit(label)
    group = orbit.group
    _require_spetsial_family(group)
    weight = Weight.b(group.m) if group.e == 1 else Weight.d(group.m)
    return symbol_of(orbit, 1, 0, weight).a_c()


def special_symbol(label):
    orbit = _as_orbit(label)
    group = orbit.group
    _require_spetsial_family(group)
    weight = Weight.b(group.m) if group.e == 1 else Weight.d(group.m)
    return symbol_of(orbit, 1, 0, weight)


def is_special(label) -> bool:
    """Whether a(E) = b(E); computed from the invariants themselves."""
    return a_value(label) == b_value(label)


def check_spetsial(group: GroupSpec, bound: int = DEFAULT_BOUND) -> bool:
    """Whether a <= b for every irreducible."""
    return all(a_value(o) <= b_value(o) for o in enumerate_orbits(group, bound))


def families(group: GroupSpec, bound: int = DEFAULT_BOUND) -> list[list[IrrepLabel]]:
    """Partition of the irreducibles into families.

    For G(e,1,n) two characters share a family when their type (1,0)
    symbols of weight b are similar.  For G(e,e,n) the same is done with
    weight d, except that each component of a stuttering orbit (all e
    components equal) is a family by itself.
    """
    _require_spetsial_family(group)
    orbits = enumerate_orbits(group, bound)
    weight = Weight.b(group.m) if group.e == 1 else Weight.d(group.m)
    syms = {o: symbol_of(o, 1, 0, weight) for o in orbits}
    depth = max((s.lengths[0] - s.weight.entries[0] for s in syms.values()), default=0)
    classes: dict[tuple, list[IrrepLabel]] = {}
    singles = []
    for o in orbits:
        labels = [IrrepLabel(o, l) for l in range(1, o.stabilizer_order + 1)]
        if group.e > 1 and o.stabilizer_order == group.e and group.n > 0:
            singles.extend([lab] for lab in labels)
            continue
        classes.setdefault(similarity_key(syms[o], depth), []).extend(labels)
    return sorted(list(classes.values()) + singles)
