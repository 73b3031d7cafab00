#!/usr/bin/env python3
"""Run the registered scaling experiments and print a verdict scorecard.

Writes one CSV + fit-summary JSON pair per experiment when --out-dir is
given.  Exit code 0 iff every fit and hard check passes.
"""

import argparse
import os
import sys
import time

from tritrunc import EXPERIMENT_IDS, ExperimentConfig, run_experiment
from tritrunc.experiments import DEFAULT_SEED, experiment_description


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", help="directory for per-experiment CSV/JSON output")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--only", choices=EXPERIMENT_IDS, help="run a single experiment")
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)

    ids = [args.only] if args.only else list(EXPERIMENT_IDS)
    ok = True
    for exp in ids:
        out = os.path.join(args.out_dir, f"{exp}.csv") if args.out_dir else None
        cfg = ExperimentConfig(exp, seed=args.seed, out=out)
        t0 = time.perf_counter()
        result = run_experiment(cfg)
        wall = time.perf_counter() - t0
        print(f"[{exp}] {experiment_description(exp)} ({wall:.1f}s)")
        for fr in result.fits:
            fit = fr.fit
            band = (
                f"<= {fit.target + fit.tolerance:g}"
                if fit.one_sided
                else f"{fit.target:g} +- {fit.tolerance:g}"
            )
            status = "pass" if fit.passed else "FAIL"
            print(f"  p={fr.p:g}: slope {fit.slope:+.4f} (want {band}) -> {status}")
        for check in result.checks:
            print(f"  check {check.name}: {'pass' if check.ok else 'FAIL'} ({check.detail})")
        ok = ok and result.verdict
    print(f"overall: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
