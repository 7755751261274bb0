"""Run every verify suite over a grid of dimensions and print a table.

    python3 scripts/run_suites.py --trials 20 --dims 1 2 --seed 3
"""

import argparse
import json
from dataclasses import asdict, dataclass, field

from polygroup.verify import SUITES, run_suite


@dataclass
class GridConfig:
    trials: int = 20
    seed: int = 0
    dims: list = field(default_factory=lambda: [1, 2])
    bound: int = 5
    trials_3d: int = 3  # Z^3 trials are slow; keep this small
    parallel: bool = False


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=GridConfig.trials)
    ap.add_argument("--seed", type=int, default=GridConfig.seed)
    ap.add_argument("--dims", type=int, nargs="+", default=[1, 2])
    ap.add_argument("--bound", type=int, default=GridConfig.bound)
    ap.add_argument("--trials-3d", type=int, default=GridConfig.trials_3d)
    ap.add_argument("--parallel", action="store_true")
    ap.add_argument("--json", action="store_true", help="one JSON report per line")
    args = vars(ap.parse_args())
    as_json = args.pop("json")
    cfg = GridConfig(**args)

    failures = 0
    for n in cfg.dims:
        trials = cfg.trials_3d if n >= 3 else cfg.trials
        for suite in SUITES:
            r = run_suite(suite, trials, cfg.seed, n, cfg.bound, cfg.parallel)
            failures += not r.ok
            if as_json:
                print(json.dumps(asdict(r)))
            else:
                print(f"n={n}  {suite:18s} {r.passed:4d}/{r.trials:<4d} {r.wall_time:7.2f}s")
                if r.counterexample:
                    print("    replay:", r.counterexample["replay"])
    if not as_json:
        print(f"config: {asdict(cfg)}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
