"""Run every verification suite on every config in configs/."""

import argparse
from pathlib import Path

from skewconvex import verify
from skewconvex.cli import load_config
from skewconvex.errors import Unsupported

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=50)
    args = ap.parse_args()
    failed = 0
    for path in sorted(CONFIGS.glob("*.ini")):
        F = load_config(path).field
        for name in verify.SUITES:
            try:
                checks = verify.run_suite(name, F, seed=args.seed, samples=args.samples)
            except Unsupported as e:
                print(f"{path.stem:14s} {name:15s} skipped ({e})")
                continue
            bad = [c for c in checks if not c.passed]
            failed += len(bad)
            print(f"{path.stem:14s} {name:15s} {'FAIL' if bad else 'ok'}  {len(checks)} checks")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
