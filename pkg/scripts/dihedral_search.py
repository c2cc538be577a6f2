"""Search stabilizers of points of V over the dihedral lattice and compare
with the classified pseudoparabolic subgroups of G(e,e,2)."""

import time
from dataclasses import dataclass

from _config import parse_config
from spets_kit.springer import dihedral_pseudoparabolics, dihedral_pseudoparabolics_by_search


@dataclass
class Config:
    """Brute-force check of the dihedral pseudoparabolic list."""

    e_min: int = 3
    e_max: int = 12
    limit: int = 50_000


def main(cfg: Config) -> int:
    bad = 0
    for e in range(cfg.e_min, cfg.e_max + 1):
        start = time.perf_counter()
        found = dihedral_pseudoparabolics_by_search(e, cfg.limit)
        expected = set(dihedral_pseudoparabolics(e, include_whole=True))
        ok = found == expected
        bad += not ok
        names = " ".join(sorted(str(x) for x in found))
        print(f"e={e:3d}  {'ok ' if ok else 'BAD'}  {time.perf_counter() - start:6.2f}s  {names}")
        if not ok:
            print("   expected:", " ".join(sorted(str(x) for x in expected)))
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(Config)))
