#!/usr/bin/env python3
"""Classify candidate quivers for n = 3..5 and check against the reference
lists, in both tsp4 and gqt modes."""

import argparse
import pathlib
import time

from qshadow import reconstruction as rc


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    failed = False
    for n in (3, 4, 5):
        for mode in ("tsp4", "gqt"):
            started = time.time()
            result = rc.classify(n, mode=mode, threads=args.threads)
            path = out / ("classify_n%d_%s.json" % (n, mode))
            rc.write_result(path, result)
            line = ("n=%d mode=%-4s quivers=%-3d exclusions=%-5d %.1fs -> %s"
                    % (n, mode, len(result.quivers), len(result.exclusions),
                       time.time() - started, path))
            if mode == "tsp4":
                report = rc.verify_against_reference(n, mode=mode, threads=args.threads)
                line += "  verified" if report.passed else "  MISMATCH"
                failed = failed or not report.passed
            print(line)
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
