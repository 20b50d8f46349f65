"""Exhaustive enumeration of admissible shadows up to relabelling and sign.

The upper triangle is filled row by row with entries in {-2..2}.  Once row i
is assigned the whole matrix row i is known (earlier entries are forced by
skew-symmetry), so the per-row sign tests prune early.  A symmetry test on
the completed rows (permutations of the already-filled vertices, optionally
composed with global negation) discards non-minimal prefixes; survivors are
deduplicated by canonical form.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor

from . import shadows as sh
from .errors import TooLarge

MAX_N = 6
ENTRY_RANGE = (-2, -1, 0, 1, 2)


def _row_ok(row):
    """Sign tests on one complete matrix row."""
    pos = neg = 0
    has2 = has_m2 = False
    for x in row:
        if x > 0:
            pos += 1
            if x == 2:
                has2 = True
        elif x < 0:
            neg += 1
            if x == -2:
                has_m2 = True
    if pos > 4 or neg > 4:
        return False
    if has2 and pos > 1:
        return False
    if has_m2 and neg > 1:
        return False
    if (pos and not neg) or (neg and not pos):
        return False  # nonzero one-signed row
    return True


def _fill_key(mat, upto, perm, sign):
    """Fill-order key of the relabelled matrix restricted to rows <= upto.

    perm acts on vertices 0..upto; columns beyond upto keep their labels.
    Yields entries lazily in fill order.
    """
    n = len(mat)
    k = upto + 1
    inv = [0] * k
    for a, b in enumerate(perm):
        inv[b] = a
    for i in range(k):
        src_i = inv[i]
        for j in range(i + 1, n):
            src_j = inv[j] if j < k else j
            yield sign * mat[src_i][src_j]


def _prefix_minimal(mat, upto):
    n = len(mat)
    current = [
        mat[i][j] for i in range(upto + 1) for j in range(i + 1, n)
    ]
    for sign in (1, -1):
        for perm in itertools.permutations(range(upto + 1)):
            if sign == 1 and all(perm[i] == i for i in range(upto + 1)):
                continue
            for a, b in zip(_fill_key(mat, upto, perm, sign), current):
                if a < b:
                    return False
                if a > b:
                    break
    return True


def _search(n, first_rows):
    """Enumerate completed matrices whose first row is in first_rows."""
    out = []
    mat = [[0] * n for _ in range(n)]

    def assign_row(i):
        if i == n - 1:
            if _row_ok(mat[n - 1]):
                out.append(tuple(tuple(r) for r in mat))
            return
        cells = list(range(i + 1, n))

        def fill(k):
            if k == len(cells):
                if _row_ok(mat[i]) and _prefix_minimal(mat, i):
                    assign_row(i + 1)
                return
            j = cells[k]
            for v in ENTRY_RANGE:
                mat[i][j] = v
                mat[j][i] = -v
                fill(k + 1)
            mat[i][j] = 0
            mat[j][i] = 0

        fill(0)

    for row in first_rows:
        for j, v in enumerate(row, start=1):
            mat[0][j] = v
            mat[j][0] = -v
        if _row_ok(mat[0]):
            assign_row(1)
    return out


def _first_row_candidates(n):
    """Sorted first rows, minimal against negation (global symmetry cut)."""
    rows = []
    for row in itertools.combinations_with_replacement(ENTRY_RANGE, n - 1):
        neg = tuple(sorted(-x for x in row))
        if row <= neg:
            rows.append(row)
    return rows


def _classify_leaves(leaves, mode):
    """Apply the leaf predicates and deduplicate by canonical form."""
    kept = {}
    for rows in leaves:
        a = sh.Shadow(len(rows), rows)
        if not sh.det_is_zero(a):
            continue
        if mode == "essential":
            if not sh.check_ps5(a).passed:
                continue
            if not sh.check_ps4(a).passed:
                if a.n != 3 or sh.canonical_shadow(a) != sh.canonical_shadow(sh.MARKOV_SHADOW):
                    continue
        canon = sh.canonical_shadow(a)
        if canon.rows in kept:
            continue
        kept[canon.rows] = canon
    # the LP is the expensive predicate: run it once per class
    final = [a for a in kept.values() if sh.ps3_feasible(a) is not None]
    final.sort(key=lambda s: s.rows)
    return final


def _worker(args):
    n, chunk = args
    return _search(n, chunk)


def enumerate_shadows(n, mode="basic_tame", threads=1):
    if not (1 <= n <= MAX_N):
        raise TooLarge("enumeration supports 1 <= n <= %d" % MAX_N)
    if mode not in ("basic_tame", "essential"):
        raise ValueError("mode must be basic_tame or essential")
    if n == 1:
        return [sh.make_shadow([[0]])]
    first = _first_row_candidates(n)
    if threads <= 1:
        leaves = _search(n, first)
    else:
        chunks = [first[k::threads] for k in range(threads)]
        leaves = []
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_worker, [(n, c) for c in chunks if c]):
                leaves.extend(part)
        leaves.sort()
    return _classify_leaves(leaves, mode)


def result_payload(n, mode, found):
    return {
        "n": n,
        "mode": mode,
        "count": len(found),
        "shadows": [[list(r) for r in a.rows] for a in found],
    }


def write_result(path, n, mode, found):
    with open(path, "w") as fh:
        json.dump(result_payload(n, mode, found), fh, indent=1, sort_keys=True)
        fh.write("\n")
