"""Fake degrees from the closed formulas against the brute-force oracle."""

import time
from dataclasses import dataclass

from _config import parse_config
from spets_kit.invariants import fake_degree
from spets_kit.oracle import fake_degree_oracle
from spets_kit.partitions import GroupSpec, enumerate_orbits


@dataclass
class Config:
    """Groups are given as m p n triples, flattened."""

    groups: tuple = (2, 1, 2, 3, 1, 2, 2, 1, 3, 4, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3)
    bound: int = 5000


def main(cfg: Config) -> int:
    flat = cfg.groups
    bad = 0
    for i in range(0, len(flat) - 2, 3):
        group = GroupSpec.of(*flat[i:i + 3])
        start = time.perf_counter()
        orbits = enumerate_orbits(group, cfg.bound)
        wrong = [
            str(o) for o in orbits
            if fake_degree_oracle(o, group, cfg.bound) != fake_degree(o) * o.stabilizer_order
        ]
        bad += len(wrong)
        status = "ok" if not wrong else "BAD " + " ".join(wrong)
        print(f"{str(group):<10} |G|={group.order:<5} {len(orbits):3d} orbits  {time.perf_counter() - start:5.2f}s  {status}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(Config)))
