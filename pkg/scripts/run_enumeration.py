#!/usr/bin/env python3
"""Enumerate shadows for n = 3..5 and persist the stretch run at n = 6.

Writes one JSON result file per (n, mode) into the output directory.
The n = 6 basic run has no reference count; it is persisted and reported
only.
"""

import argparse
import pathlib
import time

from qshadow import search


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", default="results")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--stretch", action="store_true",
                        help="also run the n=6 basic enumeration")
    args = parser.parse_args()

    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    runs = [(n, mode) for n in (3, 4, 5) for mode in ("basic_tame", "essential")]
    if args.stretch:
        runs.append((6, "basic_tame"))
    for n, mode in runs:
        started = time.time()
        found = search.enumerate_shadows(n, mode=mode, threads=args.threads)
        path = out / ("shadows_n%d_%s.json" % (n, mode))
        search.write_result(path, n, mode, found)
        print("n=%d mode=%-10s count=%-4d %.1fs -> %s"
              % (n, mode, len(found), time.time() - started, path))


if __name__ == "__main__":
    main()
