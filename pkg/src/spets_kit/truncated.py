"""Truncated induction on multipartition labels.

Only the combinatorial shadows are computed here: each routine returns the
label of the truncated induced character, never the module itself.
"""

from __future__ import annotations

from .partitions import (
    DEFAULT_BOUND,
    GroupSpec,
    Multipartition,
    MultipartitionOrbit,
    Partition,
    add_multipartitions,
    cartesian_sum,
    compositions,
    dual,
    enumerate_multipartitions,
    enumerate_orbits,
)
from .symbols import Presymbol, Weight, ordered_positions, presymbol_of, protosymbol, symbol_of


def j_sum(*parts: Multipartition) -> Multipartition:
    """Label of j from G(e,1,n') x G(e,1,n'') x ... of the external product."""
    for p in parts:
        if p.e != 1:
            raise ValueError("j_sum expects G(e,1,n) labels")
    return add_multipartitions(*parts)


def decompose_irrep(mp: Multipartition) -> list[tuple[Partition, int]]:
    """E_alpha as j of sign characters: pairs (dual of alpha_i, twist i).

    The part sizes of the dual partition give the Young factors
    G(e,1,k) on which the sign character twisted by gamma^i lives.
    """
    if mp.e != 1:
        raise ValueError("decompose_irrep expects a G(e,1,n) label")
    return [(dual(c), i) for i, c in enumerate(mp.components) if c]


def recompose(blocks: list[tuple[Partition, int]], m: int) -> Multipartition:
    """Inverse of ``decompose_irrep``: sum the twisted sign labels of every block."""
    pieces = []
    for part, twist in blocks:
        for size in part:
            comps = [()] * m
            comps[twist] = (1,) * size
            pieces.append(Multipartition(tuple(comps), m, 1))
    if not pieces:
        return Multipartition(((),) * m, m, 1)
    return j_sum(*pieces)


def _digit_maps(r: int, r1: int, s1: int, r2: int, s2: int):
    s = s1 + s2

    def kappa1(i: int) -> int:
        if i <= s1:
            return i
        if i <= s:
            return s1
        if i <= s2 + r1:
            return i - s2
        return r1

    return kappa1, (lambda i: i - kappa1(i))


def split_symbol(mp: Multipartition, r: int, s: int, r1: int, s1: int, r2: int, s2: int):
    """Split a distinguished (r, s)-symbol into an (r1, s1) and an (r2, s2) one.

    Returns (beta1, beta2) with beta1 + beta2 = mp and both halves of
    distinguished symbol (weight b).
    """
    if mp.e != 1:
        raise ValueError("split_symbol expects a G(e,1,n) label")
    if not (0 <= s1 <= r1 and 0 <= s2 <= r2 and r1 + r2 == r and s1 + s2 == s and r > 0):
        raise ValueError("need 0 <= s' <= r', 0 <= s'' <= r'', r' + r'' = r, s' + s'' = s")
    weight = Weight.b(mp.m)
    lengths = weight.lengths(mp)
    lam = presymbol_of(mp, r, s, lengths)
    if not lam.is_monotone():
        raise ValueError(f"symbol of type ({r},{s}) of {mp} is not distinguished")
    k1, k2 = _digit_maps(r, r1, s1, r2, s2)
    rows1, rows2 = [], []
    for row in lam.rows:
        rows1.append(tuple((x // r) * r1 + k1(x % r) for x in row))
        rows2.append(tuple((x // r) * r2 + k2(x % r) for x in row))
    halves = []
    for rows, rr, ss in ((rows1, r1, s1), (rows2, r2, s2)):
        base = protosymbol(rr, ss, lengths)
        comps = [tuple(a - b for a, b in zip(row, brow)) for row, brow in zip(rows, base)]
        halves.append(Multipartition(tuple(comps), mp.d, 1))
    return halves[0], halves[1]


def j_to_ef(mp: Multipartition, f: int) -> Multipartition:
    """j from G(e,1,n) to G(ef,1,n).

    Read the entries of the (0,0)-symbol of weight b in position order,
    then lay them out, from the top position down, on the positions of a
    symbol with ef rows; positions left over get 0.
    """
    if mp.e != 1:
        raise ValueError("j_to_ef expects a G(e,1,n) label")
    if f < 1:
        raise ValueError("f must be positive")
    e = mp.m
    src_lengths = Weight.b(e).lengths(mp)
    src = presymbol_of(mp, 0, 0, src_lengths)
    values = src.sequence()
    top = src_lengths[1] if e > 1 else src_lengths[0] - 1
    depth = -(-top // f)
    dst_lengths = (depth + 1,) + (depth,) * (e * f - 1)
    positions = ordered_positions(dst_lengths)
    if len(positions) < len(values):
        raise AssertionError("target shape too small")
    rows = [[0] * k for k in dst_lengths]
    for pos, v in zip(reversed(positions), reversed(values)):
        rows[pos[0]][pos[1]] = v
    out = Multipartition(tuple(tuple(r) for r in rows), e * f, 1)
    for comp_in, comp_out in zip(rows, out.components):
        if any(a > b for a, b in zip(comp_in, comp_in[1:])):
            raise AssertionError(f"j_to_ef produced a non-partition row {comp_in}")
    return out


def j_to_ef_by_index(mp: Multipartition, f: int) -> Multipartition:
    """The same label from the explicit formula: component ke+i of the result
    takes the parts of alpha_i lying k, k+f, k+2f, ... places from its largest."""
    e = mp.m
    comps = []
    for k in range(f):
        for i in range(e):
            src = mp.components[i]
            comps.append(tuple(sorted(src[len(src) - 1 - t] for t in range(k, len(src), f))))
    # comps is ordered by (k, i), i.e. index k*e + i
    return Multipartition(tuple(comps), e * f, 1)


def j_from_symmetric(part: Partition, m: int) -> Multipartition:
    """j from S_n (sitting in G(m,1,n)) of the character labelled by ``part``."""
    return j_to_ef(Multipartition((part,), 1, 1), m)


def j_geen_to_ge1n(orbit, r: int = 1) -> Multipartition:
    """Label of j from G(e,e,n) to G(e,1,n) of E_{alpha,l}, for distinguished alpha.

    The answer is the unique lift whose type (r, r) weight-b symbol is
    distinguished.
    """
    orbit = orbit if isinstance(orbit, MultipartitionOrbit) else MultipartitionOrbit(orbit)
    alpha = orbit.representative
    if alpha.d != 1:
        raise ValueError("j_geen_to_ge1n expects a G(e,e,n) label")
    e = alpha.e
    if not symbol_of(orbit, r, 0, Weight.d(e)).is_distinguished():
        raise ValueError(f"type ({r},0) symbol of {orbit} is not distinguished")
    found = []
    for lift in orbit.lifts():
        tilde = lift.with_group(e, 1)
        if symbol_of(tilde, r, r, Weight.b(e)).is_distinguished():
            found.append(tilde)
    if len(found) != 1:
        raise AssertionError(f"expected exactly one distinguished lift of {orbit}, found {len(found)}")
    return found[0]


def rotated_diagonal_presymbol(mp: Multipartition, r: int, s: int = 0) -> Presymbol:
    """Weight-d presymbol of mp with its rows moved one step down (row i gets row i-1).

    This is the representative that compares entry by entry with the
    weight-b symbol of the same G(e,1,n) label.
    """
    e = mp.m
    diag = mp.with_group(1, e)
    weight = Weight.d(e)
    return presymbol_of(diag.rotate(-1), r, s, weight.lengths(diag))


def _special_ge1n(e: int, n: int) -> list[Multipartition]:
    group = GroupSpec(e, 1, n)
    return [
        x for x in enumerate_multipartitions(group, bound=None)
        if presymbol_of(x, 1, 0, Weight.b(e).lengths(x)).is_monotone()
    ]


def _special_geen_lifts(e: int, n: int) -> list[Multipartition]:
    """j to G(e,1,n) of every special representation of G(e,e,n)."""
    if n == 0:
        return [Multipartition(((),) * e, e, 1)]
    group = GroupSpec(1, e, n)
    return [
        j_geen_to_ge1n(o, 1)
        for o in enumerate_orbits(group, bound=None)
        if symbol_of(o, 1, 0, Weight.d(e)).is_distinguished()
    ]


def springer_set_ge1n(e: int, n: int, r: int, s: int, bound: int | None = DEFAULT_BOUND) -> set[Multipartition]:
    """Labels alpha of G(e,1,n) whose type (r, s) weight-b symbol is distinguished."""
    if not 0 <= s <= r or r < 1:
        raise ValueError("need 0 <= s <= r and r >= 1")
    out = set()
    for x in enumerate_multipartitions(GroupSpec(e, 1, n), bound):
        if presymbol_of(x, r, s, Weight.b(e).lengths(x)).is_monotone():
            out.add(x)
    return out


def springer_set_geen(e: int, n: int, r: int, bound: int | None = DEFAULT_BOUND) -> set[MultipartitionOrbit]:
    """Orbits of G(e,e,n) whose type (r, 0) weight-d symbol is distinguished.

    Every component E_{alpha,l} of such an orbit belongs to the set.
    """
    if r < 1:
        raise ValueError("r must be positive")
    return {
        o for o in enumerate_orbits(GroupSpec(1, e, n), bound)
        if symbol_of(o, r, 0, Weight.d(e)).is_distinguished()
    }


def _sum_over_shapes(n: int, kinds: list[str], pieces) -> set[Multipartition]:
    out = set()
    for sizes in compositions(n, len(kinds)):
        choices = [pieces(kind, k) for kind, k in zip(kinds, sizes)]
        out |= cartesian_sum(choices)
    return out


def constructive_springer_ge1n(e: int, n: int, r: int, s: int) -> set[Multipartition]:
    """j of special representations of every G(e,e,n_1) x ... x G(e,e,n_s) x G(e,1,n_{s+1}) x ... x G(e,1,n_r)."""
    if not 0 <= s <= r or r < 1:
        raise ValueError("need 0 <= s <= r and r >= 1")

    def pieces(kind, k):
        return _special_geen_lifts(e, k) if kind == "ee" else _special_ge1n(e, k)

    return _sum_over_shapes(n, ["ee"] * s + ["e1"] * (r - s), pieces)


def constructive_springer_geen(e: int, n: int, r: int) -> set[MultipartitionOrbit]:
    """Restriction to G(e,e,n) of the sums of lifts over G(e,e,n_1) x ... x G(e,e,n_r)."""
    if r < 1:
        raise ValueError("r must be positive")
    lifted = _sum_over_shapes(n, ["ee"] * r, lambda kind, k: _special_geen_lifts(e, k))
    return {MultipartitionOrbit(x.with_group(1, e)) for x in lifted}


def j_from_parabolic(alpha0: Multipartition, parts: list[Partition]) -> Multipartition:
    """j from G(e,1,n0) x S_{m_1} x ... x S_{m_k} of alpha0 times the characters ``parts``."""
    e = alpha0.m
    pieces = [alpha0] + [j_from_symmetric(p, e) for p in parts if p]
    return j_sum(*pieces)
