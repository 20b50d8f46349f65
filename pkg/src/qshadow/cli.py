"""Command-line front end.

Subcommands: shadows, classify, reconstruct, mutate, recognize, canon.
Exit codes: 0 success (or verified), 1 verification mismatch, 2 argument
error, 3 I/O error, 4 domain error.  All commands are deterministic given
their arguments and input files; --threads never changes output bytes.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import blocks, fixtures, quivers as qv, reconstruction as rc
from . import search, shadows as sh
from .errors import QShadowError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_ARGS = 2
EXIT_IO = 3
EXIT_DOMAIN = 4

# named inputs usable wherever a quiver file is expected
NAMED_QUIVERS = {
    "MARKOV3": fixtures.G3_MARKOV,
    "TRI3": fixtures.G3_TRIANGLE,
    "Q17": fixtures.Q17_FIXTURE,
    "Q13": fixtures.Q13_FIXTURE,
}


class _CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read_text(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise _CliError(EXIT_IO, "cannot read %s: %s" % (path, exc))


def _load_quiver(arg):
    if arg in NAMED_QUIVERS:
        return NAMED_QUIVERS[arg]
    return qv.from_json(_read_text(arg))


def _content_hash(parts):
    h = hashlib.sha1()
    for part in parts:
        h.update(part.encode())
        h.update(b"\0")
    return h.hexdigest()


def _write_manifest(out_path, command, args_list, inputs, threads, started):
    manifest = {
        "command": command,
        "arguments": args_list,
        "input_hash": _content_hash(inputs),
        "workers": threads,
        "wall_time_s": round(time.time() - started, 3),
        "output": out_path,
    }
    with open(out_path + ".manifest.json", "w") as fh:
        json.dump(manifest, fh, indent=1, sort_keys=True)
        fh.write("\n")


def _emit_quiver(q, fmt):
    if fmt == "dot":
        sys.stdout.write(qv.to_dot(q))
    else:
        print(qv.to_json(q))


def cmd_shadows(args, argv):
    if not 1 <= args.n <= search.MAX_N:
        raise _CliError(EXIT_ARGS, "--n must be between 1 and %d" % search.MAX_N)
    mode = {"basic": "basic_tame", "essential": "essential"}[args.mode]
    started = time.time()
    found = search.enumerate_shadows(args.n, mode=mode, threads=args.threads)
    print(len(found))
    if args.out:
        search.write_result(args.out, args.n, mode, found)
        _write_manifest(args.out, "shadows", argv,
                        ["%d" % args.n, mode], args.threads, started)
    return EXIT_OK


def cmd_classify(args, argv):
    if not 3 <= args.n <= rc.MAX_N:
        raise _CliError(
            EXIT_ARGS, "UnsupportedSize: classification covers 3 <= n <= %d" % rc.MAX_N
        )
    started = time.time()
    result = rc.classify(args.n, mode=args.mode, threads=args.threads)
    print("%d quivers" % len(result.quivers))
    if args.out:
        rc.write_result(args.out, result)
        _write_manifest(args.out, "classify", argv,
                        ["%d" % args.n, args.mode], args.threads, started)
    if args.verify:
        report = rc.verify_against_reference(args.n, mode=args.mode, threads=args.threads)
        if not report.passed:
            print("verification mismatch: missing=%d extra=%d"
                  % (len(report.missing), len(report.extra)))
            return EXIT_MISMATCH
        print("verified: %d matched" % report.matched)
    return EXIT_OK


def cmd_reconstruct(args, argv):
    a = sh.from_json(_read_text(args.shadow))
    results = rc.reconstruct(a, mode=args.mode)
    survivors = [c.assembled for c, rep in results if not rep.excluded]
    payload = {
        "n": a.n,
        "mode": args.mode,
        "survivors": [[list(x) for x in q.arrows()] for q in survivors],
    }
    if args.report:
        payload["reports"] = [
            {
                "candidate": [list(x) for x in c.assembled.arrows()],
                "verdict": rep.verdict,
                "rule": rep.rule,
                "reason": rep.reason,
                "witness": json.loads(json.dumps(rep.witness)),
            }
            for c, rep in results
        ]
    print(json.dumps(payload, indent=1, sort_keys=True))
    return EXIT_OK


def cmd_mutate(args, argv):
    q = _load_quiver(args.quiver)
    _emit_quiver(blocks.mutate_block(q, args.vertex), args.format)
    return EXIT_OK


def cmd_recognize(args, argv):
    q = _load_quiver(args.quiver)
    dec = blocks.recognize_gwsa_gabriel(q)
    if dec is None:
        print("null")
    else:
        print(blocks.decomposition_to_json(dec))
    return EXIT_OK


def cmd_canon(args, argv):
    q = _load_quiver(args.quiver)
    _emit_quiver(qv.canonical_form(q)[0], args.format)
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(prog="qshadow")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shadows", help="enumerate admissible shadows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("basic", "essential"), default="basic")
    p.add_argument("--out")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_shadows)

    p = sub.add_parser("classify", help="classify candidate quivers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("gqt", "tsp4"), default="tsp4")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reconstruct", help="candidates of one shadow")
    p.add_argument("--shadow", required=True)
    p.add_argument("--mode", choices=("gqt", "tsp4"), default="tsp4")
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("mutate", help="block rewrite at a vertex")
    p.add_argument("--quiver", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("recognize", help="block decomposition of a quiver")
    p.add_argument("--quiver", required=True)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("canon", help="canonical form of a quiver")
    p.add_argument("--quiver", required=True)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_canon)

    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ARGS if exc.code else EXIT_OK
    try:
        return args.func(args, argv)
    except _CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code
    except QShadowError as exc:
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
