"""Check *P = -chi_F(P) on random lattice polytopes and report face counts.

Prints one row per polytope: dimension, f-vector, and whether the identity holds.
"""

import argparse
from dataclasses import dataclass

from polygroup.group import element, eq, face_euler_characteristic, involution
from polygroup.verify import random_polytope, trial_rng


@dataclass
class Config:
    count: int = 10
    dim: int = 3
    bound: int = 4
    seed: int = 0


def f_vector(P):
    counts = [0] * (P.dim + 1)
    for f in P.faces:
        counts[f.dim] += 1
    return counts


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    for k, v in vars(Config()).items():
        ap.add_argument(f"--{k}", type=int, default=v)
    cfg = Config(**vars(ap.parse_args()))
    bad = 0
    for i in range(cfg.count):
        P = random_polytope(trial_rng("euler-script", cfg.seed, i), cfg.dim, cfg.bound)
        ok = eq(involution(element(P)), -face_euler_characteristic(P))
        bad += not ok
        print(f"{i:3d} dim={P.dim} f={f_vector(P)} {'ok' if ok else 'FAILED'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
