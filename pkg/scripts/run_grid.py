"""Hub/authority recovery on the 4x4 grid motif versus directed betweenness."""

import argparse
import json

from incidence_centrality.experiments import run_grid_experiment
from incidence_centrality.spectral import RegularizationConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--alpha", type=float, default=0.0)
    ap.add_argument("--reg-mode", choices=["matrix", "tikhonov", "none"], default="tikhonov")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    result = run_grid_experiment(args.alpha, RegularizationConfig(mode=args.reg_mode))
    if args.json:
        print(json.dumps(result.as_dict(), indent=2))
        return
    for key, value in result.metrics.items():
        print(f"{key:20s} {value:.4f}" if isinstance(value, float) else f"{key:20s} {value}")


if __name__ == "__main__":
    main()
