"""Command line front end: ``spets-kit <command> [options]``.

Exit status is 0 on success, 2 on bad input (unknown group shape, malformed
multipartition, unsupported operation) and 1 when two independent
computations disagree.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import invariants, oracle, springer, truncated
from .partitions import DEFAULT_BOUND, GroupSpec, Multipartition, MultipartitionOrbit, enumerate_orbits
from .symbols import Weight, symbol_of


class Inconsistency(Exception):
    """Two computations that must agree did not."""


def parse_group(text: str) -> GroupSpec:
    try:
        m, p, n = (int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected a group as m,p,n, got {text!r}") from None
    return GroupSpec.of(m, p, n)


def parse_multipartition(text: str, group: GroupSpec | None = None) -> Multipartition:
    """Parse "2|-|1"; with ``group`` also check the component count and the size."""
    try:
        if group is None:
            return Multipartition.parse(text)
        mp = Multipartition.parse(text, group.d, group.e)
    except ValueError as exc:
        raise ValueError(f"malformed multipartition {text!r}: {exc}") from None
    if mp.m != group.m or mp.e != group.e:
        raise ValueError(f"{text!r} has {mp.m} components, {group} needs {group.m}")
    if mp.n != group.n:
        raise ValueError(f"{text!r} has size {mp.n}, {group} needs n = {group.n}")
    return mp


def parse_pair(text: str) -> tuple[int, int]:
    try:
        r, s = (int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"expected r,s, got {text!r}") from None
    return r, s


def _bound(args) -> int:
    if args.bound is not None:
        return args.bound
    return int(os.environ.get("SPETS_KIT_BOUND", DEFAULT_BOUND))


def _default_weight(group: GroupSpec) -> Weight:
    return Weight.spetsial(group.d, group.e)


# ---------------------------------------------------------------- commands


def cmd_symbols(args):
    group = parse_group(args.group)
    r, s = parse_pair(args.type)
    weight = Weight.parse(args.weight) if args.weight else _default_weight(group)
    rows = []
    for orbit in enumerate_orbits(group, _bound(args)):
        sym = symbol_of(orbit, r, s, weight)
        pre = sym.canonical
        rows.append({
            "multipartition": str(orbit),
            "symbol": str(pre),
            "type": [r, s],
            "weight": list(weight.entries),
            "rows": [list(row) for row in pre.rows],
            "distinguished": sym.is_distinguished(),
        })
    count = sum(row["distinguished"] for row in rows)
    if args.json:
        return {"group": str(group), "symbols": rows, "distinguished": count}
    lines = [f"{row['multipartition']:<16} {row['symbol']:<20} {'*' if row['distinguished'] else ''}" for row in rows]
    lines.append(f"{len(rows)} symbols, {count} distinguished")
    return "\n".join(lines)


def cmd_families(args):
    group = parse_group(args.group)
    fams = invariants.families(group, _bound(args))
    out = []
    for fam in fams:
        specials = [str(x) for x in fam if invariants.is_special(x.orbit)]
        weight = Weight.b(group.m) if group.e == 1 else Weight.d(group.m)
        has_dist = any(symbol_of(x.orbit, 1, 0, weight).is_distinguished() for x in fam)
        out.append({"members": [str(x) for x in fam], "specials": specials, "has_distinguished": has_dist})
    if args.json:
        return {"group": str(group), "families": out}
    lines = []
    for i, fam in enumerate(out):
        flag = "" if fam["has_distinguished"] else "  (no distinguished member)"
        lines.append(f"{i}: {' '.join(fam['members'])}  special: {' '.join(fam['specials']) or '-'}{flag}")
    lines.append(f"{len(out)} families")
    return "\n".join(lines)


def cmd_special(args):
    group = parse_group(args.group)
    rows = []
    for label in invariants.irreps(group, _bound(args)):
        a = invariants.a_value(label.orbit)
        b = invariants.b_value(label.orbit)
        rows.append({"irrep": str(label), "a": a, "b": b, "special": a == b})
    spetsial = all(row["a"] <= row["b"] for row in rows)
    if args.json:
        return {"group": str(group), "irreps": rows, "spetsial": spetsial}
    lines = [f"{row['irrep']:<16} a={row['a']:<3} b={row['b']:<3} {'special' if row['special'] else ''}" for row in rows]
    lines.append(f"a <= b everywhere: {spetsial}")
    return "\n".join(lines)


def _dihedral_e(group: GroupSpec) -> int | None:
    return group.m if group.d == 1 and group.n == 2 and group.e > 1 else None


def cmd_springer(args):
    group = parse_group(args.group)
    lattice = springer.Lattice.parse(args.lattice)
    e = _dihedral_e(group)
    if e is not None:
        if lattice is not springer.Lattice.L0:
            raise ValueError(f"{group} is dihedral; use --lattice L0")
        labels = [str(x) for x in sorted(springer.dihedral_springer(e))]
        if args.json:
            return {"group": str(group), "lattice": "L0", "springer": labels}
        return " ".join(labels)
    if args.type:
        r, s = parse_pair(args.type)
    else:
        r, s = springer.springer_type(group, lattice)
    if group.e == 1:
        reps = sorted(truncated.springer_set_ge1n(group.m, group.n, r, s, _bound(args)))
        labels = [str(x) for x in reps]
        counts = [1] * len(labels)
    else:
        orbits = sorted(truncated.springer_set_geen(group.m, group.n, r, _bound(args)))
        labels = [str(o) for o in orbits]
        counts = [o.stabilizer_order for o in orbits]
    if args.json:
        return {
            "group": str(group), "lattice": lattice.value, "type": [r, s],
            "springer": [{"multipartition": x, "components": c} for x, c in zip(labels, counts)],
        }
    lines = [x + (f"  (x{c})" if c > 1 else "") for x, c in zip(labels, counts)]
    lines.append(f"{len(labels)} labels, type ({r},{s})")
    return "\n".join(lines)


def cmd_pseudoparabolic(args):
    group = parse_group(args.group)
    lattice = springer.Lattice.parse(args.lattice)
    e = _dihedral_e(group)
    if e is not None:
        shapes = [str(x) for x in springer.dihedral_pseudoparabolics(e, include_whole=args.include_whole)]
    else:
        shapes = [str(x) for x in springer.pseudoparabolics(group, lattice)]
    if args.json:
        return {"group": str(group), "lattice": lattice.value, "pseudoparabolics": shapes}
    return "\n".join(shapes)


def cmd_jinduce(args):
    group = parse_group(args.group)
    if args.add:
        # external product: --group gives the total size of the summands
        if group.e != 1:
            raise ValueError("--add needs a group G(e,1,n)")
        parts = [_summand(text, group) for text in [args.mp] + args.add]
        out = truncated.j_sum(*parts)
        if out.n != group.n:
            raise ValueError(f"summands have total size {out.n}, {group} needs n = {group.n}")
        if args.json:
            return {"from": [str(x) for x in parts], "to": str(group), "result": str(out)}
        return f"{out}  in {group}"
    mp = parse_multipartition(args.mp, group)
    if group.e > 1:
        if group.d != 1:
            raise ValueError("j to G(e,1,n) is only defined from G(e,e,n)")
        out = truncated.j_geen_to_ge1n(MultipartitionOrbit(mp), args.r)
        target = GroupSpec(group.m, 1, group.n)
    else:
        f = args.f or 1
        out = truncated.j_to_ef(mp, f)
        target = GroupSpec(group.m * f, 1, group.n)
    if args.json:
        return {"from": str(group), "to": str(target), "input": str(mp), "result": str(out)}
    return f"{out}  in {target}"


def _summand(text: str, group: GroupSpec) -> Multipartition:
    try:
        mp = Multipartition.parse(text, group.m, 1)
    except ValueError as exc:
        raise ValueError(f"malformed multipartition {text!r}: {exc}") from None
    return mp


def cmd_fakedeg(args):
    group = parse_group(args.group)
    mp = parse_multipartition(args.mp, group)
    orbit = MultipartitionOrbit(mp)
    poly = invariants.fake_degree(orbit)
    status = None
    if args.check_oracle:
        got = oracle.fake_degree_oracle(orbit, group, _bound(args))
        status = got == poly * orbit.stabilizer_order
        if not status:
            raise Inconsistency(f"closed formula {poly} vs oracle {got} (stabilizer {orbit.stabilizer_order})")
    if args.json:
        out = {"group": str(group), "multipartition": str(orbit), "fake_degree": [list(p) for p in poly.pairs()]}
        if status is not None:
            out["oracle"] = status
        return out
    return f"{poly}" + (" [oracle OK]" if status else "")


def cmd_oracle_check(args):
    group = parse_group(args.group)
    bound = _bound(args)
    rng = random.Random(args.seed)
    elements = oracle.enumerate_group(group, bound)
    mismatches = []
    rows = []
    for orbit in enumerate_orbits(group, bound):
        poly = invariants.fake_degree(orbit)
        got = oracle.fake_degree_oracle(orbit, group, bound)
        ok = got == poly * orbit.stabilizer_order
        rows.append({"multipartition": str(orbit), "fake_degree": str(poly), "oracle": ok})
        if not ok:
            mismatches.append(str(orbit))
    # spot check that characters are class functions on random conjugates
    table = oracle.wreath_character_table(group.m, group.n)
    parent = oracle.enumerate_group(GroupSpec(group.m, 1, group.n), None)
    for _ in range(args.samples):
        g = rng.choice(elements)
        x = rng.choice(parent)
        mp = rng.choice(sorted(table.values))
        a = oracle.character_value(mp, g, parent)
        b = oracle.character_value(mp, x * g * x.inverse(), parent)
        if a != b:
            mismatches.append(f"class function check {mp} at {g}")
    total = invariants.poincare(group)
    summed = sum(
        (invariants.fake_degree(o) * (o.component_dimension() * o.stabilizer_order) for o in enumerate_orbits(group, bound)),
        start=type(total)(),
    )
    if summed != total:
        mismatches.append("sum of dim * R differs from the Poincare polynomial")
    if mismatches:
        raise Inconsistency("; ".join(mismatches))
    if args.json:
        return {"group": str(group), "irreps": rows, "poincare": str(total), "ok": True}
    lines = [f"{row['multipartition']:<16} {row['fake_degree']:<30} OK" for row in rows]
    lines.append(f"{len(rows)} orbits agree with the oracle; sum dim R = P_W = {total}")
    return "\n".join(lines)


def cmd_dihedral(args):
    e = args.e
    irreps = springer.dihedral_irreps(e)
    specials = springer.dihedral_specials(e)
    pp = springer.dihedral_pseudoparabolics(e, include_whole=args.include_whole)
    spr = sorted(springer.dihedral_springer(e))
    if args.json:
        return {
            "group": f"G({e},{e},2)",
            "irreps": [{"label": str(x), "b": x.b, "special": x in specials} for x in irreps],
            "pseudoparabolics": [str(x) for x in pp],
            "springer": [str(x) for x in spr],
        }
    return "\n".join([
        "irreps: " + " ".join(f"{x}(b={x.b})" for x in irreps),
        "special: " + " ".join(map(str, specials)),
        "pseudoparabolic: " + " ".join(map(str, pp)),
        "springer: " + " ".join(map(str, spr)),
    ])


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spets-kit", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="print JSON instead of text")
    parser.add_argument("--bound", type=int, default=None, help=f"largest group order allowed (default {DEFAULT_BOUND}, or $SPETS_KIT_BOUND)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized spot checks")
    sub = parser.add_subparsers(dest="command", required=True)

    def group_cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--group", required=True, help="m,p,n for G(m,p,n)")
        p.set_defaults(func=func)
        return p

    p = group_cmd("symbols", cmd_symbols, "list symbols of every multipartition orbit")
    p.add_argument("--type", default="1,0", help="r,s (default 1,0)")
    p.add_argument("--weight", default=None, help="comma separated weight (default: spetsial)")

    group_cmd("families", cmd_families, "families from similarity classes of type (1,0) symbols")
    group_cmd("special", cmd_special, "a- and b-values and special irreducibles")

    p = group_cmd("springer", cmd_springer, "Springer representations for a lattice")
    p.add_argument("--lattice", default="L1", help="L1, L2, or L0 for G(e,e,2)")
    p.add_argument("--type", default=None, help="override the symbol type r,s")

    p = group_cmd("pseudoparabolic", cmd_pseudoparabolic, "pseudoparabolic subgroup shapes")
    p.add_argument("--lattice", default="L1", help="L1, L2, or L0 for G(e,e,2)")
    p.add_argument("--include-whole", action="store_true", help="list the whole dihedral group too")

    p = group_cmd("jinduce", cmd_jinduce, "truncated induction of a multipartition label")
    p.add_argument("--mp", required=True, help='multipartition, e.g. "2|-|1"')
    p.add_argument("--f", type=int, default=None, help="induce from G(e,1,n) to G(ef,1,n)")
    p.add_argument("--add", action="append", default=None, help="further G(e,1,k) labels to add (external product)")
    p.add_argument("--r", type=int, default=1, help="type (r,0) used for G(e,e,n) -> G(e,1,n)")

    p = group_cmd("fakedeg", cmd_fakedeg, "fake degree of an irreducible")
    p.add_argument("--mp", required=True, help='multipartition, e.g. "1|1"')
    p.add_argument("--check-oracle", action="store_true", help="compare with the brute-force oracle")

    p = group_cmd("oracle-check", cmd_oracle_check, "compare every fake degree with the oracle")
    p.add_argument("--samples", type=int, default=20, help="random class-function spot checks")

    p = sub.add_parser("dihedral", help="the dihedral group G(e,e,2)")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--include-whole", action="store_true")
    p.set_defaults(func=cmd_dihedral)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except Inconsistency as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        print(result)
    else:
        print(json.dumps(result, indent=2, ensure_ascii=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
