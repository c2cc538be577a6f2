"""Partitions, multipartitions and the rotation action on them.

A partition is stored as a weakly increasing tuple of positive integers, so
``(1, 2)`` is the partition 2+1.  Leading zeros are dropped on normalisation;
several routines pad with zeros on the left when they need a fixed length.

A multipartition of ``n`` for the group G(de, e, n) is a tuple of ``de``
partitions.  The cyclic group of order ``e`` acts on them by rotating the
components in blocks of ``d``; irreducible characters of G(de, e, n) are
indexed by the orbits together with a component label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product
from math import factorial, prod

Partition = tuple[int, ...]

DEFAULT_BOUND = 5000


def normalize(parts) -> Partition:
    """Sort ``parts`` increasingly and drop zeros."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts!r}")
    return tuple(sorted(p for p in parts if p))


def pad(part: Partition, length: int) -> Partition:
    """Left-pad with zeros up to ``length`` entries."""
    if len(part) > length:
        raise ValueError(f"{part} does not fit in {length} entries")
    return (0,) * (length - len(part)) + tuple(part)


@cache
def partitions(n: int, largest: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n`` with parts at most ``largest``, increasing tuples."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append(rest + (first,))
    return tuple(out)


def dual(part: Partition) -> Partition:
    """Conjugate partition."""
    if not part:
        return ()
    return tuple(sorted(sum(1 for p in part if p > k) for k in range(part[-1])))


def add_partitions(a: Partition, b: Partition) -> Partition:
    """Right-justified componentwise sum (largest part plus largest part)."""
    length = max(len(a), len(b))
    return tuple(x + y for x, y in zip(pad(a, length), pad(b, length)))


def hook_count(part: Partition) -> int:
    """Number of standard tableaux of shape ``part`` (hook length formula)."""
    rows = sorted(part, reverse=True)
    cols = dual(part)[::-1]
    hooks = 1
    for i, row in enumerate(rows):
        for j in range(row):
            hooks *= row - j + cols[j] - i - 1
    return factorial(sum(part)) // hooks


@dataclass(frozen=True, order=True)
class GroupSpec:
    """The imprimitive reflection group G(de, e, n), stored by (d, e, n)."""

    d: int
    e: int
    n: int

    def __post_init__(self):
        if self.d < 1 or self.e < 1 or self.n < 0:
            raise ValueError(f"invalid group parameters {self.d, self.e, self.n}")

    @classmethod
    def of(cls, m: int, p: int, n: int) -> GroupSpec:
        """Build G(m, p, n) in the usual notation; ``p`` must divide ``m``."""
        if p < 1 or m < 1 or m % p:
            raise ValueError(f"G({m},{p},{n}) needs p dividing m")
        return cls(m // p, p, n)

    @property
    def m(self) -> int:
        """Number of components of a multipartition, i.e. de."""
        return self.d * self.e

    @property
    def order(self) -> int:
        if self.n == 0:
            return 1
        return self.m ** self.n * factorial(self.n) // self.e

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(self.m * i for i in range(1, self.n)) + (self.d * self.n,) if self.n else ()

    @property
    def parent(self) -> GroupSpec:
        """The group G(de, 1, n) containing this one."""
        return GroupSpec(self.m, 1, self.n)

    def resized(self, n: int) -> GroupSpec:
        return GroupSpec(self.d, self.e, n)

    def __str__(self):
        return f"G({self.m},{self.e},{self.n})"


def check_bound(group: GroupSpec, bound: int | None = DEFAULT_BOUND):
    """Refuse groups larger than ``bound``; ``None`` disables the check."""
    if bound is not None and group.order > bound:
        raise ValueError(f"{group} has order {group.order} > bound {bound}")


@dataclass(frozen=True, order=True)
class Multipartition:
    """A de-tuple of partitions, read as a label for G(de, e, n)."""

    components: tuple[Partition, ...]
    d: int = 1
    e: int = 1

    def __post_init__(self):
        comps = tuple(normalize(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) != self.d * self.e:
            raise ValueError(f"expected {self.d * self.e} components, got {len(comps)}")

    @classmethod
    def for_group(cls, group: GroupSpec, components) -> Multipartition:
        mp = cls(tuple(components), group.d, group.e)
        if mp.n != group.n:
            raise ValueError(f"{mp} has size {mp.n}, not {group.n}")
        return mp

    @classmethod
    def parse(cls, text: str, d: int = 1, e: int | None = None) -> Multipartition:
        """Parse ``"2|-|1"``; ``e`` defaults to the number of components over ``d``."""
        comps = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            comps.append(() if chunk in ("-", "") else tuple(int(x) for x in chunk.split(",")))
        if e is None:
            if len(comps) % d:
                raise ValueError(f"{len(comps)} components not divisible by d={d}")
            e = len(comps) // d
        return cls(tuple(comps), d, e)

    @property
    def n(self) -> int:
        return sum(sum(c) for c in self.components)

    @property
    def m(self) -> int:
        return len(self.components)

    @property
    def group(self) -> GroupSpec:
        return GroupSpec(self.d, self.e, self.n)

    def sizes(self) -> tuple[int, ...]:
        return tuple(sum(c) for c in self.components)

    def rotate(self, times: int = 1) -> Multipartition:
        """Shift components by ``d`` places: (a_d, ..., a_{de-1}, a_0, ..., a_{d-1})."""
        k = (times * self.d) % self.m
        return Multipartition(self.components[k:] + self.components[:k], self.d, self.e)

    def rotations(self) -> list[Multipartition]:
        return [self.rotate(j) for j in range(self.e)]

    def stabilizer_order(self) -> int:
        """Number of rotations r^j, 0 <= j < e, fixing this multipartition."""
        if self.n == 0:
            return 1
        return sum(1 for x in self.rotations() if x == self)

    def canonical(self) -> Multipartition:
        return min(self.rotations())

    def with_group(self, d: int, e: int) -> Multipartition:
        return Multipartition(self.components, d, e)

    def __add__(self, other: Multipartition) -> Multipartition:
        if (self.d, self.e) != (other.d, other.e):
            raise ValueError("cannot add multipartitions of different groups")
        comps = tuple(add_partitions(a, b) for a, b in zip(self.components, other.components))
        return Multipartition(comps, self.d, self.e)

    def dimension(self) -> int:
        """Dimension of the G(de, 1, n) irreducible labelled by this tuple."""
        sizes = self.sizes()
        multinomial = factorial(self.n) // prod(factorial(k) for k in sizes)
        return multinomial * prod(hook_count(c) for c in self.components)

    def __str__(self):
        return "|".join(",".join(map(str, reversed(c))) if c else "-" for c in self.components)


@dataclass(frozen=True, order=True)
class MultipartitionOrbit:
    """An orbit under rotation, stored by its lexicographically least member."""

    representative: Multipartition

    def __post_init__(self):
        object.__setattr__(self, "representative", self.representative.canonical())

    @property
    def stabilizer_order(self) -> int:
        return self.representative.stabilizer_order()

    @property
    def group(self) -> GroupSpec:
        return self.representative.group

    def lifts(self) -> list[Multipartition]:
        """The distinct members of the orbit, sorted."""
        return sorted(set(self.representative.rotations()))

    def component_dimension(self) -> int:
        """Dimension of each of the ``stabilizer_order`` irreducible components."""
        return self.representative.dimension() // self.stabilizer_order

    def __str__(self):
        return str(self.representative)


def multipartitions(n: int, m: int) -> list[tuple[Partition, ...]]:
    """All m-tuples of partitions with total size n."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            for p in partitions(left):
                out.append(prefix + (p,))
            return
        for k in range(left, -1, -1):
            for p in partitions(k):
                rec(prefix + (p,), left - k, slots - 1)

    if m == 0:
        return [()] if n == 0 else []
    rec((), n, m)
    return out


def enumerate_multipartitions(group: GroupSpec, bound: int | None = DEFAULT_BOUND) -> list[Multipartition]:
    """Labels of the irreducibles of G(de, 1, n); the bound applies to G(de, e, n)."""
    check_bound(group, bound)
    return sorted(Multipartition(c, group.d, group.e) for c in multipartitions(group.n, group.m))


def enumerate_orbits(group: GroupSpec, bound: int | None = DEFAULT_BOUND) -> list[MultipartitionOrbit]:
    return sorted({MultipartitionOrbit(x) for x in enumerate_multipartitions(group, bound)})


def add_multipartitions(*mps: Multipartition) -> Multipartition:
    """Right-justified componentwise sum of several multipartitions."""
    if not mps:
        raise ValueError("nothing to add")
    total = mps[0]
    for x in mps[1:]:
        total = total + x
    return total


def compositions(n: int, parts: int, minimum: int = 0):
    """Ordered tuples of ``parts`` integers >= minimum summing to ``n``."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(minimum, n - minimum * (parts - 1) + 1):
        for rest in compositions(n - first, parts - 1, minimum):
            yield (first,) + rest


def weak_tuples(n: int, parts: int):
    """Nonincreasing tuples of ``parts`` nonnegative integers summing to ``n``."""
    for c in compositions(n, parts):
        if all(a >= b for a, b in zip(c, c[1:])):
            yield c


def sign_multipartition(m: int, k: int, size: int, d: int | None = None, e: int = 1) -> Multipartition:
    """Label of the sign character twisted by the k-th power of the linear character."""
    comps = [()] * m
    comps[k] = (1,) * size
    return Multipartition(tuple(comps), m if d is None else d, e)


def cartesian_sum(choices: list[list[Multipartition]]) -> set[Multipartition]:
    """All sums picking one multipartition from each list."""
    return {add_multipartitions(*pick) for pick in product(*choices)} if choices else set()
