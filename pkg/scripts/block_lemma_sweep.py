"""Compare stabilizer reflection sets with the block lemma's prediction."""

from collections import Counter
from dataclasses import dataclass

from _config import parse_config
from spets_kit.springer import (
    Lattice,
    block_pattern_cases,
    identify_reflection_subgroup,
    predicted_reflections,
    stabilizer_reflections,
)


@dataclass
class Config:
    """Sweep all block patterns for the given e and n."""

    es: tuple = (2, 3, 4)
    ns: tuple = (2, 3)
    show: bool = False


def main(cfg: Config) -> int:
    mismatches = 0
    for e in cfg.es:
        for n in cfg.ns:
            shapes = Counter()
            cases = 0
            for point, blocks, orders, names in block_pattern_cases(e, n):
                for lattice in (Lattice.L1, Lattice.L2):
                    got = stabilizer_reflections(point, lattice)
                    cases += 1
                    if got != predicted_reflections(blocks, orders, e, lattice):
                        mismatches += 1
                        print(f"mismatch e={e} n={n} {lattice.value} {names}")
                    factors = identify_reflection_subgroup(got, e, n)
                    shapes[(lattice.value, " x ".join(sorted(str(f) for f in factors)))] += 1
            print(f"e={e} n={n}: {cases} cases")
            if cfg.show:
                for (lat, shape), count in sorted(shapes.items()):
                    print(f"    {lat} {shape}: {count}")
    print("mismatches:", mismatches)
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main(parse_config(Config)))
