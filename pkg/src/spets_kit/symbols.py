"""Symbols of type (r, s) attached to multipartitions.

A presymbol is a tuple of rows of nonnegative integers, row ``i`` strictly
increasing.  The presymbol of a multipartition ``alpha`` with row lengths
``lengths`` is ``alpha`` (zero padded on the left) plus the protosymbol
whose row 0 is ``0, r, 2r, ...`` and whose other rows are ``s, r+s, ...``.

Positions (i, j) (row, column) are totally ordered: by column first, and
inside a column row 0 comes first followed by rows de-1, de-2, ..., 1.
A presymbol is monotone when its entries are weakly increasing along that
order; a symbol is distinguished when one of its rotation representatives is
monotone.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .partitions import GroupSpec, Multipartition, MultipartitionOrbit, pad

Position = tuple[int, int]
Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Weight:
    """Row length offsets, defined up to adding a constant; stored with min 0."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("empty weight")
        low = min(self.entries)
        object.__setattr__(self, "entries", tuple(x - low for x in self.entries))

    @classmethod
    def b(cls, m: int) -> Weight:
        """(1, 0, ..., 0): row 0 one entry longer."""
        return cls((1,) + (0,) * (m - 1))

    @classmethod
    def d(cls, m: int) -> Weight:
        """(0, ..., 0): all rows of equal length."""
        return cls((0,) * m)

    @classmethod
    def spetsial(cls, d: int, e: int) -> Weight:
        """The weight (1, 0^(d-1)) repeated e times, attached to G(de, e, n)."""
        return cls(((1,) + (0,) * (d - 1)) * e)

    @classmethod
    def parse(cls, text: str) -> Weight:
        return cls(tuple(int(x) for x in text.split(",")))

    def validate(self, group: GroupSpec):
        if len(self.entries) != group.m:
            raise ValueError(f"weight {self.entries} has wrong length for {group}")
        for i, x in enumerate(self.entries):
            if x != self.entries[i % group.d]:
                raise ValueError(f"weight {self.entries} is not constant on classes mod {group.d}")

    def lengths(self, alpha: Multipartition) -> tuple[int, ...]:
        """Smallest row lengths of this weight that fit every component."""
        extra = max(len(c) - w for c, w in zip(alpha.components, self.entries))
        extra = max(extra, 0)
        return tuple(w + extra for w in self.entries)

    def __str__(self):
        return ",".join(map(str, self.entries))


def protosymbol(r: int, s: int, lengths) -> Rows:
    return tuple(
        tuple(j * r + (s if i else 0) for j in range(k)) for i, k in enumerate(lengths)
    )


def position_key(pos: Position, nrows: int) -> tuple[int, int]:
    i, j = pos
    return (j, 0 if i == 0 else nrows - i)


def precedes(p: Position, q: Position) -> bool:
    """The strict order on positions: (i, j) < (k, l)."""
    (i, j), (k, l) = p, q
    return j < l or (j == l and k > 0 and (i == 0 or i > k))


def ordered_positions(lengths) -> list[Position]:
    """All positions of a shape, increasing."""
    nrows = len(lengths)
    pos = [(i, j) for i, k in enumerate(lengths) for j in range(k)]
    return sorted(pos, key=lambda p: position_key(p, nrows))


def _check_rows(rows: Rows, s: int):
    for i, row in enumerate(rows):
        if any(a >= b for a, b in zip(row, row[1:])):
            raise ValueError(f"row {i} of {rows} is not strictly increasing")
        if row and (row[0] < 0 or (i and row[0] < s)):
            raise ValueError(f"row {i} of {rows} starts below its protosymbol")


@dataclass(frozen=True, order=True)
class Presymbol:
    """Rows of a presymbol together with its type (r, s)."""

    rows: Rows
    r: int = 1
    s: int = 0

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(row) for row in self.rows))
        if self.r < 0 or self.s < 0:
            raise ValueError("type (r, s) must be nonnegative")

    @classmethod
    def parse(cls, text: str, r: int = 1, s: int = 0) -> Presymbol:
        rows = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            rows.append(() if chunk in ("", "-") else tuple(int(x) for x in chunk.split(",")))
        return cls(tuple(rows), r, s)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @cached_property
    def proto(self) -> Rows:
        return protosymbol(self.r, self.s, self.lengths)

    def entry(self, pos: Position) -> int:
        return self.rows[pos[0]][pos[1]]

    def positions(self) -> list[Position]:
        return ordered_positions(self.lengths)

    def sequence(self) -> list[int]:
        """Entries read along the position order."""
        return [self.entry(p) for p in self.positions()]

    def is_monotone(self) -> bool:
        seq = self.sequence()
        return all(a <= b for a, b in zip(seq, seq[1:]))

    def multipartition(self, d: int = 1, e: int | None = None) -> Multipartition:
        """Subtract the protosymbol; the result is a G(de, 1, n)-style tuple."""
        comps = []
        for row, base in zip(self.rows, self.proto):
            parts = [a - b for a, b in zip(row, base)]
            if any(p < 0 for p in parts) or any(a > b for a, b in zip(parts, parts[1:])):
                raise ValueError(f"{self} is not the presymbol of a multipartition")
            comps.append(tuple(parts))
        if e is None:
            e = len(comps) // d
        return Multipartition(tuple(comps), d, e)

    def shift(self) -> Presymbol:
        """Add one column: row 0 becomes (0, x + r), other rows (s, x + r)."""
        rows = tuple(
            (0 if i == 0 else self.s,) + tuple(x + self.r for x in row)
            for i, row in enumerate(self.rows)
        )
        return Presymbol(rows, self.r, self.s)

    def unshift(self) -> Presymbol | None:
        """Inverse of ``shift`` when it exists."""
        out = []
        for i, row in enumerate(self.rows):
            if not row or row[0] != (0 if i == 0 else self.s):
                return None
            rest = tuple(x - self.r for x in row[1:])
            if rest and (rest[0] < 0 or (i and rest[0] < self.s)):
                return None
            out.append(rest)
        return Presymbol(tuple(out), self.r, self.s)

    def reduced(self) -> Presymbol:
        cur = self
        while (nxt := cur.unshift()) is not None:
            cur = nxt
        return cur

    def shifted(self, times: int) -> Presymbol:
        cur = self
        for _ in range(times):
            cur = cur.shift()
        return cur

    def a_c(self) -> int:
        """Sum over ordered pairs p < q of min(entry p, entry q) - proto p."""
        pos = self.positions()
        vals = [self.entry(p) for p in pos]
        base = [self.proto[i][j] for i, j in pos]
        total = 0
        for x in range(len(pos)):
            for y in range(x + 1, len(pos)):
                total += min(vals[x], vals[y]) - base[x]
        return total

    def c_values(self) -> dict[Position, int]:
        """Number of positions strictly above each position."""
        pos = self.positions()
        return {p: len(pos) - 1 - k for k, p in enumerate(pos)}

    def b_c(self) -> int:
        """Sum over p < q of entry p - proto p."""
        pos = self.positions()
        return sum(
            (len(pos) - 1 - k) * (self.entry(p) - self.proto[p[0]][p[1]])
            for k, p in enumerate(pos)
        )

    def content(self) -> Counter:
        return Counter(x for row in self.rows for x in row)

    def __str__(self):
        return "|".join(",".join(map(str, row)) if row else "-" for row in self.rows)


def presymbol_of(alpha: Multipartition, r: int, s: int, lengths) -> Presymbol:
    lengths = tuple(lengths)
    if len(lengths) != alpha.m:
        raise ValueError("need one row length per component")
    rows = []
    for comp, k, base in zip(alpha.components, lengths, protosymbol(r, s, lengths)):
        if len(comp) > k:
            raise ValueError(f"weight shape too small for {alpha}: row of length {k}")
        rows.append(tuple(a + b for a, b in zip(pad(comp, k), base)))
    pre = Presymbol(tuple(rows), r, s)
    if r > 0:
        _check_rows(pre.rows, s)
    return pre


@dataclass(frozen=True, order=True)
class Symbol:
    """The symbol of a multipartition orbit: all its rotation lifts at one shape."""

    orbit: MultipartitionOrbit
    r: int
    s: int
    weight: Weight = field(compare=False)

    @property
    def group(self) -> GroupSpec:
        return self.orbit.group

    @cached_property
    def lengths(self) -> tuple[int, ...]:
        return self.weight.lengths(self.orbit.representative)

    def presymbol(self, lift: Multipartition | None = None, extra: int = 0) -> Presymbol:
        lift = self.orbit.representative if lift is None else lift
        return presymbol_of(lift, self.r, self.s, [k + extra for k in self.lengths])

    def representatives(self, extra: int = 0) -> list[Presymbol]:
        return [self.presymbol(x, extra) for x in self.orbit.lifts()]

    @cached_property
    def canonical(self) -> Presymbol:
        return min(self.representatives())

    def is_distinguished(self) -> bool:
        return any(p.is_monotone() for p in self.representatives())

    def monotone_lifts(self) -> list[Multipartition]:
        return [x for x in self.orbit.lifts() if self.presymbol(x).is_monotone()]

    def a_c(self) -> int:
        return self.presymbol().a_c()

    def b_c(self) -> int:
        return self.presymbol().b_c()

    def content(self) -> Counter:
        return self.presymbol().content()

    def __str__(self):
        return str(self.canonical)


def symbol_of(mp, r: int, s: int, weight: Weight | None = None) -> Symbol:
    """Symbol of type (r, s); the weight defaults to the spetsial one of the group."""
    orbit = mp if isinstance(mp, MultipartitionOrbit) else MultipartitionOrbit(mp)
    group = orbit.group
    weight = Weight.spetsial(group.d, group.e) if weight is None else weight
    weight.validate(group)
    if r < 0 or s < 0:
        raise ValueError("type (r, s) must be nonnegative")
    return Symbol(orbit, r, s, weight)


def similar(x: Symbol, y: Symbol) -> bool:
    """Same entries with multiplicity, once both are brought to a common shape."""
    if (x.r, x.s) != (y.r, y.s) or len(x.lengths) != len(y.lengths):
        return False
    gx = [a - b for a, b in zip(x.lengths, x.weight.entries)][0]
    gy = [a - b for a, b in zip(y.lengths, y.weight.entries)][0]
    top = max(gx, gy)
    px = x.presymbol(extra=top - gx)
    py = y.presymbol(extra=top - gy)
    if px.lengths != py.lengths:
        return False
    return px.content() == py.content()


def similarity_key(sym: Symbol, depth: int) -> tuple:
    """Hashable invariant of the similarity class at a fixed excess ``depth``."""
    excess = sym.lengths[0] - sym.weight.entries[0]
    if depth < excess:
        raise ValueError("depth below the symbol's own shape")
    pre = sym.presymbol(extra=depth - excess)
    return (pre.lengths, tuple(sorted(pre.content().items())))
