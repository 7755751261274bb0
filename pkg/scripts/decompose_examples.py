"""Shadow-basis coordinates of a few small polytopes, with a reassembly check."""

import argparse
import itertools
from dataclasses import dataclass

from polygroup.basis_decomp import decompose, equivalent, reassemble
from polygroup.exact_geometry import extreme_points
from polygroup.group import element, eq
from polygroup.polytope_ops import minkowski_sum, reflect

T = extreme_points([(0, 0), (1, 0), (0, 1)])
SQUARE = extreme_points([(0, 0), (1, 0), (0, 1), (1, 1)])

EXAMPLES = {
    "segment [0,3]": extreme_points([(0, 0), (3, 0)]),
    "T": T,
    "*T": reflect(T),
    "unit square": SQUARE,
    "hexagon T + *T": minkowski_sum(T, reflect(T)),
    "pentagon": extreme_points([(0, 0), (4, 0), (0, 2), (2, 3), (4, 2)]),
    "unit cube": extreme_points(list(itertools.product((0, 1), repeat=3))),
    "standard simplex": extreme_points([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]),
}


@dataclass
class Config:
    collapse_3d: bool = False  # collapsing Z^3 reassemblies is slow; default to the support test


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--collapse-3d", action="store_true")
    cfg = Config(**vars(ap.parse_args()))
    for name, P in EXAMPLES.items():
        d = decompose(P)
        x = element(P, quotient=True)
        if P.ambient_dim <= 2 or cfg.collapse_3d:
            ok = eq(reassemble(d), x)
        else:
            ok = equivalent(d, x)
        print(f"{name:16s} {'ok ' if ok else 'BAD'} {d}")


if __name__ == "__main__":
    main()
