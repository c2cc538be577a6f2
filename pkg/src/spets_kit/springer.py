"""Pseudoparabolic subgroups and Springer representations.

Two sides are kept apart.  The tables (``pseudoparabolics``,
``springer_reps``, the dihedral rules) encode the classification.  The
point computations (``stabilizer_reflections``, ``dihedral_stabilizer``)
work directly with coordinates in Q(zeta) and are what the tables are
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .cyclotomic import CycNum
from .invariants import IrrepLabel
from .partitions import (
    GroupSpec,
    Multipartition,
    MultipartitionOrbit,
    cartesian_sum,
    partitions,
    weak_tuples,
)
from .truncated import (
    _special_ge1n,
    _special_geen_lifts,
    j_from_symmetric,
    springer_set_ge1n,
    springer_set_geen,
)


class Lattice(Enum):
    L1 = "L1"
    L2 = "L2"
    L0 = "L0"

    @classmethod
    def parse(cls, text: str) -> Lattice:
        try:
            return cls(text.strip().upper())
        except ValueError:
            raise ValueError(f"unknown lattice {text!r}; expected L1, L2 or L0") from None


def prime_power_base(m: int) -> int | None:
    """p if m = p^a with a >= 1, else None."""
    if m < 2:
        return None
    p = next(q for q in range(2, m + 1) if m % q == 0)
    while m % p == 0:
        m //= p
    return p if m == 1 else None


def residue_prime(e: int) -> int:
    """p when e is a power of the prime p, 1 otherwise (1 - zeta is then a unit)."""
    return prime_power_base(e) or 1


# ---------------------------------------------------------------- lattices


def in_lattice(v: list[CycNum], lattice: Lattice) -> bool:
    """Membership of a coordinate vector in L1 or L2."""
    if not all(x.is_integral() for x in v):
        return False
    if lattice is Lattice.L1 or not v:
        return True
    if lattice is not Lattice.L2:
        raise ValueError("in_lattice handles L1 and L2; use dihedral_stabilizer for L0")
    p = residue_prime(v[0].m)
    if p == 1:
        return True
    return sum(x.coefficient_sum() for x in v) % p == 0


@dataclass(frozen=True, order=True)
class Reflection:
    """A reflection of G(e,1,n).

    ``diagonal``: e_i -> zeta^k e_i, 1 <= k < e (``j`` unused).
    Otherwise e_i -> zeta^k e_j and e_j -> zeta^-k e_i, i < j.
    """

    diagonal: bool
    i: int
    j: int
    k: int

    def act(self, v: list[CycNum]) -> list[CycNum]:
        e = v[0].m
        out = list(v)
        if self.diagonal:
            out[self.i] = v[self.i] * CycNum.root(e, self.k)
        else:
            out[self.j] = v[self.i] * CycNum.root(e, self.k)
            out[self.i] = v[self.j] * CycNum.root(e, -self.k)
        return out

    def __str__(self):
        if self.diagonal:
            return f"t{self.i + 1}^{self.k}"
        return f"s{self.i + 1}{self.j + 1}^{self.k}"


def reflections(e: int, n: int) -> list[Reflection]:
    """All n(n-1)e/2 + n(e-1) reflections of G(e,1,n)."""
    out = [Reflection(False, i, j, k) for i, j in combinations(range(n), 2) for k in range(e)]
    out += [Reflection(True, i, i, k) for i in range(n) for k in range(1, e)]
    return out


def stabilizer_reflections(v: list[CycNum], lattice: Lattice) -> set[Reflection]:
    """Reflections w of G(e,1,n) with v - w.v in the lattice."""
    e, n = v[0].m, len(v)
    if e < 2:
        raise ValueError("need e >= 2")
    return {
        w for w in reflections(e, n)
        if in_lattice([a - b for a, b in zip(v, w.act(v))], lattice)
    }


def denominator_order(x: CycNum) -> int | None:
    """Smallest t > 0 with (1 - zeta^t) x integral; None when x itself is integral."""
    if x.is_integral():
        return None
    e = x.m
    for t in range(1, e + 1):
        if ((1 - CycNum.root(e, t)) * x).is_integral():
            return t
    raise AssertionError("unreachable: t = e always works")


def predicted_reflections(blocks: list[list[int]], orders: list[int | None], e: int, lattice: Lattice) -> set[Reflection]:
    """Reflection set forced by the block lemma.

    ``blocks`` lists coordinate indices, ``orders`` the t of each block
    (None for an integral block).  Inside a block, the transposition type
    reflection with exponent k is present iff t | k; diagonal ones need
    t | k for L1 and tp | k for L2.  Nothing links different blocks.
    """
    p = residue_prime(e)
    out = set()
    for block, t in zip(blocks, orders):
        step = 1 if t is None else t
        diag_step = 1 if t is None else (t if lattice is Lattice.L1 else t * p)
        for i, j in combinations(sorted(block), 2):
            out |= {Reflection(False, i, j, k) for k in range(0, e, step)}
        for i in block:
            out |= {Reflection(True, i, i, k) for k in range(1, e) if k % diag_step == 0}
    return out


def _least_prime_above(k: int) -> int:
    q = k + 1
    while any(q % j == 0 for j in range(2, q)):
        q += 1
    return q


def block_test_points(e: int) -> list[tuple[str, CycNum]]:
    """Representatives of every kind of block for the block lemma.

    An integral point, k/(1 - zeta) for 0 < k < p, 1/(1 - zeta^t) for the
    proper divisors t of e, and 1/q for a prime q > e.
    """
    one = CycNum.rational(e, 1)
    zeta = CycNum.root(e, 1)
    out = [("0", CycNum.zero(e))]
    p = residue_prime(e)
    if p > 1:
        out += [(f"{k}/(1-z)", one * k / (one - zeta)) for k in range(1, p)]
    out += [(f"1/(1-z^{t})", one / (one - CycNum.root(e, t))) for t in range(2, e) if e % t == 0]
    q = _least_prime_above(e)
    out.append((f"1/{q}", one / q))
    return out


def _same_block(x: CycNum, y: CycNum, e: int) -> bool:
    return any((x - CycNum.root(e, k) * y).is_integral() for k in range(e))


def block_pattern_cases(e: int, n: int):
    """Yield (point, blocks, orders, names) for every assignment of block kinds to n coordinates.

    Coordinates sharing a kind are offset by distinct integers so they sit
    in one block; assignments using two kinds congruent up to a root of
    unity are skipped, since those would merge.
    """
    kinds = block_test_points(e)
    for assign in product(range(len(kinds)), repeat=n):
        used = sorted(set(assign))
        if any(_same_block(kinds[a][1], kinds[b][1], e) for a, b in combinations(used, 2)):
            continue
        point = [kinds[a][1] + i for i, a in enumerate(assign)]
        blocks = [[i for i in range(n) if assign[i] == a] for a in used]
        orders = [denominator_order(kinds[a][1]) for a in used]
        yield point, blocks, orders, [kinds[a][0] for a in assign]


@dataclass(frozen=True)
class ReflectionSubgroupFactor:
    """One block of a reflection subgroup of G(e,1,n), read as G(m, q, size)."""

    m: int
    q: int
    size: int

    def __str__(self):
        if self.m == 1:
            return f"S{self.size}"
        return f"G({self.m},{self.q},{self.size})"


def identify_reflection_subgroup(refls: set[Reflection], e: int, n: int) -> list[ReflectionSubgroupFactor]:
    """Read a block decomposition off a reflection set closed in the lemma's sense.

    Blocks are the connected components of the transposition graph.  On a
    block the transposition exponents form the multiples of some t and the
    diagonal exponents the multiples of some u; the block is then
    G(e/t, u/t, size), with q = e/t when no diagonal reflection is present.
    """
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for w in refls:
        if not w.diagonal:
            parent[find(w.i)] = find(w.j)
    blocks: dict[int, list[int]] = {}
    for i in range(n):
        blocks.setdefault(find(i), []).append(i)
    out = []
    for block in blocks.values():
        inside = [w for w in refls if w.i in block]
        t = e
        for w in inside:
            if not w.diagonal:
                t = gcd(t, w.k)
        u = e
        for w in inside:
            if w.diagonal:
                u = gcd(u, w.k)
        if len(block) == 1:
            # only the diagonal part matters; S1 when nothing fixes it
            out.append(ReflectionSubgroupFactor(e // u, 1, 1) if u < e else ReflectionSubgroupFactor(1, 1, 1))
            continue
        m = e // t
        q = m if u == e else u // t
        out.append(ReflectionSubgroupFactor(m, q, len(block)))
    return sorted(out, key=lambda f: (-f.size, -f.m, f.q))


def lemma_reflection_group(t: int | None, e: int, n: int, lattice: Lattice) -> ReflectionSubgroupFactor:
    """The reflection part of the stabilizer claimed by the block lemma for a single block."""
    if t is None:
        return ReflectionSubgroupFactor(e, 1, n)
    if lattice is Lattice.L1:
        return ReflectionSubgroupFactor(e // t, 1, n)
    p = residue_prime(e)
    if t == e:
        return ReflectionSubgroupFactor(1, 1, n)
    return ReflectionSubgroupFactor(e // t, p, n)


def lemma_spetsial_part(t: int | None, e: int, n: int, lattice: Lattice) -> ReflectionSubgroupFactor:
    """Largest full spetsial subgroup of the stabilizer, per the block lemma."""
    if t is None:
        return ReflectionSubgroupFactor(e, 1, n)
    if t > 1:
        return ReflectionSubgroupFactor(1, 1, n)
    if lattice is Lattice.L2 and residue_prime(e) > 1:
        return ReflectionSubgroupFactor(e, e, n)
    return ReflectionSubgroupFactor(e, 1, n)


# ------------------------------------------------------- pseudoparabolics


@dataclass(frozen=True, order=True)
class PseudoparabolicShape:
    """A product of G(e,1,k), G(e,e,k) and symmetric factors.

    ``wreath`` lists the sizes of the G(e,1,k) factors, ``diagonal`` those
    of the G(e,e,k) factors and ``symmetric`` the sizes of the symmetric
    groups; all three are sorted so that equal shapes compare equal.
    """

    e: int
    wreath: tuple[int, ...]
    diagonal: tuple[int, ...]
    symmetric: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.wreath) + sum(self.diagonal) + sum(self.symmetric)

    def factors(self) -> list[str]:
        out = [f"G({self.e},1,{k})" for k in self.wreath]
        out += [f"G({self.e},{self.e},{k})" for k in self.diagonal]
        out += [f"S{k}" for k in self.symmetric]
        return out

    def __str__(self):
        return " x ".join(self.factors()) or "1"


def _shape(e, wreath, diagonal, symmetric) -> PseudoparabolicShape:
    """Normalise: drop empty factors; G(e,e,1) is trivial, so it becomes S1."""
    wreath = [k for k in wreath if k]
    symmetric = list(symmetric) + [1 for k in diagonal if k == 1]
    diagonal = [k for k in diagonal if k > 1]
    return PseudoparabolicShape(
        e, tuple(sorted(wreath, reverse=True)), tuple(sorted(diagonal, reverse=True)),
        tuple(sorted(symmetric, reverse=True)),
    )


def springer_type(group: GroupSpec, lattice: Lattice) -> tuple[int, int]:
    """The symbol type (r, s) attached to a group and lattice."""
    _check_table_group(group, lattice)
    e = group.m
    p = prime_power_base(e)
    if group.e == 1:
        if p is None:
            return (1, 0)
        return (p, 0) if lattice is Lattice.L1 else (p, p - 1)
    return (1, 0) if p is None else (p, 0)


def _check_table_group(group: GroupSpec, lattice: Lattice):
    if group.d > 1 and group.e > 1:
        raise ValueError(f"{group} is not spetsial")
    if group.e > 1 and group.n < 3:
        raise ValueError(f"{group} is dihedral or smaller; use the dihedral functions")
    if lattice is Lattice.L0:
        raise ValueError("lattice L0 only applies to the dihedral groups")
    if group.e > 1 and prime_power_base(group.m) is not None and lattice is Lattice.L1:
        raise ValueError(f"{group} only has the lattice L2")


def pseudoparabolics(group: GroupSpec, lattice: Lattice) -> list[PseudoparabolicShape]:
    """Shapes of the pseudoparabolic subgroups, up to conjugacy."""
    _check_table_group(group, lattice)
    e, n = group.m, group.n
    p = residue_prime(e)
    if group.e == 1:
        if p == 1:
            layout = (1, 0)
        else:
            layout = (p, 0) if lattice is Lattice.L1 else (1, p - 1)
    else:
        layout = (0, p)
    n_wreath, n_diag = layout
    out = set()
    for rest in range(n + 1):
        for sym in partitions(rest):
            big = n - rest
            for split in _splits(big, n_wreath, n_diag, group.e == 1 and lattice is Lattice.L2 and p > 1):
                out.add(_shape(e, split[:n_wreath], split[n_wreath:], sym))
    return sorted(out)


def _splits(total: int, n_wreath: int, n_diag: int, first_distinct: bool):
    """Ways to share ``total`` among the big factors, up to permuting equal kinds."""
    if first_distinct:
        for k0 in range(total + 1):
            for rest in weak_tuples(total - k0, n_diag):
                yield (k0,) + rest
        return
    slots = n_wreath + n_diag
    if slots == 0:
        if total == 0:
            yield ()
        return
    yield from weak_tuples(total, slots)


def springer_reps(group: GroupSpec, lattice: Lattice) -> set[IrrepLabel]:
    """Springer representations, read off the distinguished symbols of the table's type."""
    r, s = springer_type(group, lattice)
    e, n = group.m, group.n
    if group.e == 1:
        return {IrrepLabel(MultipartitionOrbit(x)) for x in springer_set_ge1n(e, n, r, s, None)}
    return {
        IrrepLabel(o, l)
        for o in springer_set_geen(e, n, r, None)
        for l in range(1, o.stabilizer_order + 1)
    }


def springer_reps_from_shapes(group: GroupSpec, lattice: Lattice) -> set[IrrepLabel]:
    """Springer representations the long way: j of specials of every pseudoparabolic shape."""
    e, n = group.m, group.n
    out = set()
    for shape in pseudoparabolics(group, lattice):
        choices = [_special_ge1n(e, k) for k in shape.wreath]
        choices += [_special_geen_lifts(e, k) for k in shape.diagonal]
        choices += [[j_from_symmetric(lam, e) for lam in partitions(k)] for k in shape.symmetric]
        out |= cartesian_sum(choices) if choices else {Multipartition(((),) * e, e, 1)}
    if group.e == 1:
        return {IrrepLabel(MultipartitionOrbit(x)) for x in out}
    orbits = {MultipartitionOrbit(x.with_group(1, e)) for x in out}
    return {IrrepLabel(o, l) for o in orbits for l in range(1, o.stabilizer_order + 1)}


# ------------------------------------------------------------- dihedral


@dataclass(frozen=True, order=True)
class DihedralLabel:
    """chi_k of G(e,e,2); ``primed`` marks the second character with b = e/2."""

    index: int
    primed: bool = False

    @property
    def b(self) -> int:
        return self.index

    @classmethod
    def parse(cls, text: str) -> DihedralLabel:
        body = text.strip()
        for prefix in ("χ", "chi", "x"):
            if body.startswith(prefix):
                body = body[len(prefix):]
                break
        body = body.lstrip("_")
        primed = body.endswith("'")
        return cls(int(body.rstrip("'")), primed)

    def __str__(self):
        return f"χ{self.index}" + ("'" if self.primed else "")


def _check_dihedral(e: int):
    if e < 2:
        raise ValueError("the dihedral group G(e,e,2) needs e >= 2")


def dihedral_irreps(e: int) -> list[DihedralLabel]:
    """Irreducibles of G(e,e,2); the index is the b-value."""
    _check_dihedral(e)
    out = [DihedralLabel(k) for k in range((e - 1) // 2 + 1)]
    if e % 2 == 0:
        out += [DihedralLabel(e // 2), DihedralLabel(e // 2, True)]
    out.append(DihedralLabel(e))
    return sorted(set(out))


def dihedral_irrep_dimension(e: int, label: DihedralLabel) -> int:
    if label.index in (0, e) or (e % 2 == 0 and label.index == e // 2):
        return 1
    return 2


def dihedral_specials(d: int) -> list[DihedralLabel]:
    """Trivial, reflection and sign; every irreducible when d <= 2."""
    if d <= 2:
        return dihedral_irreps(d) if d == 2 else [DihedralLabel(0), DihedralLabel(1)]
    return [DihedralLabel(0), DihedralLabel(1), DihedralLabel(d)]


def dihedral_irrep_orbit(e: int, label: DihedralLabel) -> tuple[MultipartitionOrbit, int]:
    """The multipartition orbit and component of G(e,e,2) carrying ``label``."""
    _check_dihedral(e)
    comps = [()] * e
    if label.index == 0:
        comps[0] = (2,)
    elif label.index == e:
        comps[0] = (1, 1)
    else:
        comps[0] = (1,)
        comps[label.index] = (1,)
    orbit = MultipartitionOrbit(Multipartition(tuple(comps), 1, e))
    return orbit, (2 if label.primed else 1)


@dataclass(frozen=True, order=True)
class DihedralSubgroup:
    """G(d,d,2) = <s_0, s_{e/d}>, or G'(d,d,2) = <s_1, s_{e/d+1}> when e/d is even."""

    d: int
    primed: bool = False

    def reflection_indices(self, e: int) -> frozenset[int]:
        step = e // self.d
        start = 1 if self.primed else 0
        return frozenset((start + k * step) % e for k in range(self.d))

    def __str__(self):
        prime = "'" if self.primed else ""
        return f"G{prime}({self.d},{self.d},2)"


def dihedral_pseudoparabolics(e: int, include_whole: bool = False) -> list[DihedralSubgroup]:
    """Pseudoparabolic reflection subgroups of G(e,e,2), up to conjugacy.

    The whole group (d = e) is left out unless ``include_whole`` is set.
    """
    _check_dihedral(e)
    out = []
    for d in range(1, e + 1):
        if e % d:
            continue
        if d == 1 or prime_power_base(d) is not None or (d == e and include_whole):
            if d < e or include_whole:
                out.append(DihedralSubgroup(d))
        if (e // d) % 2 == 0 and (d == 1 or (2 * d < e and prime_power_base(d) is not None)):
            out.append(DihedralSubgroup(d, True))
    return sorted(out)


def dihedral_j_induce(d: int, e: int, primed: bool, label: DihedralLabel) -> DihedralLabel:
    """Truncated induction from G(d,d,2) (or G'(d,d,2)) to G(e,e,2) of a special character."""
    if d < 1 or e % d:
        raise ValueError(f"d = {d} does not divide e = {e}")
    if primed and (e // d) % 2:
        raise ValueError("G'(d,d,2) needs e/d even")
    if d == e:
        return label
    if label not in dihedral_specials(d):
        raise ValueError(f"{label} is not special for G({d},{d},2)")
    if label.index == 0:
        return DihedralLabel(0)
    if label.index == d:
        # the sign character; for d = 1 it is the sign of a single reflection
        return DihedralLabel(d, primed and 2 * d == e)
    # the reflection representation (both halves of it when d = 2)
    return DihedralLabel(1)


def dihedral_springer(e: int) -> set[DihedralLabel]:
    """j of the specials of every pseudoparabolic subgroup, the whole group included."""
    _check_dihedral(e)
    if e == 2:
        return set(dihedral_irreps(2))
    out = set()
    for sub in dihedral_pseudoparabolics(e, include_whole=True):
        for chi in dihedral_specials(sub.d):
            out.add(dihedral_j_induce(sub.d, e, sub.primed, chi))
    return out


def dihedral_springer_formula(e: int) -> set[DihedralLabel]:
    """The closed description: chi_0, chi_1, chi_e and chi_d for prime powers d | e."""
    _check_dihedral(e)
    if e == 2:
        return set(dihedral_irreps(2))
    out = {DihedralLabel(0), DihedralLabel(1), DihedralLabel(e)}
    out |= {DihedralLabel(d) for d in range(2, e + 1) if e % d == 0 and prime_power_base(d)}
    return out


def dihedral_stabilizer(v1: CycNum) -> frozenset[int]:
    """Indices i with s_i fixing the image of v1 e_1 - conj(v1) e_2 modulo L0."""
    e = v1.m
    bar = v1.conjugate()
    return frozenset(i for i in range(e) if (v1 + CycNum.root(e, i) * bar).is_integral())


def dihedral_witness(e: int, sub: DihedralSubgroup) -> CycNum:
    """A point whose stabilizer should be exactly ``sub``.

    For d > 1 these are 1/(1 - zeta^{-e/d}) and (1 + zeta)/(1 - zeta^{-e/d}).
    That formula divides by zero when d = 1, so a purely imaginary point is
    used instead: w = (zeta - zeta^-1)/q with q a prime larger than e, which
    only s_0 fixes, and (1 + zeta) w, which only s_1 fixes.  For e = 2 the
    reflection s_1 fixes every point, so no witness exists there.
    """
    if e < 3:
        raise ValueError("witness points need e >= 3")
    one = CycNum.rational(e, 1)
    zeta = CycNum.root(e, 1)
    if sub.d == 1:
        q = next(k for k in range(e + 1, 4 * e + 4) if all(k % j for j in range(2, k)))
        w = (zeta - CycNum.root(e, -1)) / q
        return (one + zeta) * w if sub.primed else w
    base = one / (one - CycNum.root(e, -(e // sub.d)))
    return (one + zeta) * base if sub.primed else base


def classify_dihedral_reflections(indices: frozenset[int], e: int) -> DihedralSubgroup | None:
    """Conjugacy type of the subgroup generated by the s_i, i in ``indices``.

    Returns None for the trivial subgroup.  The generated group has
    reflections a + (multiples of g) with g the gcd of e and all the
    differences; conjugation shifts a by even amounts, so only the parity
    of a matters, and only when g is even.
    """
    if not indices:
        return None
    idx = sorted(indices)
    g = e
    for x in idx[1:]:
        g = gcd(g, x - idx[0])
    d = e // g
    primed = g % 2 == 0 and idx[0] % 2 == 1
    return DihedralSubgroup(d, primed)


def radical(m: int) -> int:
    out, k = 1, 2
    while m > 1:
        if m % k == 0:
            out *= k
            while m % k == 0:
                m //= k
        k += 1
    return out


def dihedral_pseudoparabolics_by_search(e: int, limit: int = 50_000) -> set[DihedralSubgroup]:
    """Stabilizer types of v1 running over (1/N) Z[zeta] modulo Z[zeta].

    Two denominators are used: the radical of e, which holds the points
    1/(1 - zeta^{e/d}), and the least prime q not dividing e, which holds
    the generic points fixed by a single reflection.  A grid larger than
    ``limit`` is skipped.  The trivial subgroup is not reported.
    """
    from itertools import product

    from .cyclotomic import degree

    _check_dihedral(e)
    q = next(k for k in range(2, 4 * e + 4) if e % k and all(k % j for j in range(2, k)))
    grids = [N for N in (radical(e), q) if N ** degree(e) <= limit]
    if not grids:
        raise ValueError(f"every search grid for e = {e} exceeds the limit {limit}")
    found = set()
    for N in grids:
        for coords in product(range(N), repeat=degree(e)):
            v1 = CycNum(e, [Fraction(c, N) for c in coords])
            sub = classify_dihedral_reflections(dihedral_stabilizer(v1), e)
            if sub is not None:
                found.add(sub)
    return found
