"""Extended verification beyond the default ceiling.

Runs every suite up to --max-n (default 7) and the endomorphism suite up to
--endo-n (default 8), then prints a summary and writes the reports as JSON.
"""

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from cthecke.verify import run


@dataclass
class SweepConfig:
    max_n: int = 7
    endo_n: int = 8
    seed: int = 0
    out: str = "extended_sweep.json"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    for name, default in asdict(SweepConfig()).items():
        parser.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    cfg = SweepConfig(**vars(parser.parse_args()))

    reports = {}
    for label, suites, n in [("all", ["all"], cfg.max_n), ("endo", ["endo"], cfg.endo_n)]:
        start = time.perf_counter()
        reports[label] = run(suites, n, seed=cfg.seed)
        print(f"{label} up to n={n}: {time.perf_counter() - start:.1f}s", file=sys.stderr)
        for p in reports[label]["properties"]:
            status = "PASS" if p["passed"] else "FAIL"
            notes = f" {p['notes']}" if p.get("notes") else ""
            print(f"  {status} {p['name']:<26} checked {p['checked']}{notes}")

    with open(cfg.out, "w", encoding="utf-8") as fh:
        json.dump({"schema": 1, "config": asdict(cfg), "reports": reports}, fh, sort_keys=True, indent=2)
    return 0 if all(r["passed"] for r in reports.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
