"""Springer representations from symbols versus from pseudoparabolic shapes."""

from dataclasses import dataclass

from _config import parse_config
from spets_kit.invariants import irreps, is_special
from spets_kit.partitions import GroupSpec
from spets_kit.springer import Lattice, prime_power_base, springer_reps, springer_reps_from_shapes, springer_type


@dataclass
class Config:
    """Table of Springer counts for G(e,1,n) and G(e,e,n)."""

    e_max: int = 6
    n_max: int = 4


def _groups(cfg):
    for e in range(1, cfg.e_max + 1):
        for n in range(cfg.n_max + 1):
            for lattice in (Lattice.L1, Lattice.L2):
                if lattice is Lattice.L2 and e > 1 and prime_power_base(e) is None:
                    continue
                yield GroupSpec(e, 1, n), lattice
        if e > 1:
            for n in range(3, cfg.n_max + 1):
                yield GroupSpec(1, e, n), Lattice.L2 if prime_power_base(e) else Lattice.L1


def main(cfg: Config) -> int:
    bad = 0
    print(f"{'group':<10} {'lat':<3} {'type':<6} {'irr':>4} {'spec':>4} {'spr':>4}  agree")
    for group, lattice in _groups(cfg):
        reps = springer_reps(group, lattice)
        built = springer_reps_from_shapes(group, lattice)
        labels = irreps(group, None)
        specials = sum(is_special(x.orbit) for x in labels)
        r, s = springer_type(group, lattice)
        ok = reps == built
        bad += not ok
        print(f"{str(group):<10} {lattice.value:<3} ({r},{s})  {len(labels):>4} {specials:>4} {len(reps):>4}  {ok}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(Config)))
