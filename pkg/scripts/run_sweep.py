"""Run a seeded sweep and write the full JSON report."""
import argparse
import json
import sys
import time
from dataclasses import fields

from partition_crt.sweep import SweepConfig, run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for f in fields(SweepConfig):
        if f.type in ("int", int):
            ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    cfg = SweepConfig(**{f.name: getattr(args, f.name) for f in fields(SweepConfig)
                         if hasattr(args, f.name)})
    t = time.perf_counter()
    summary = run_sweep(cfg, args.workers)
    text = json.dumps(summary, sort_keys=True, indent=1)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(f"{summary['passed']}/{summary['total']} passed in "
          f"{time.perf_counter() - t:.1f} s", file=sys.stderr)
    return 0 if summary["failed"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
