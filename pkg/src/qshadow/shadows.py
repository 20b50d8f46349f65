"""Skew-symmetric shadow matrices and their admissibility predicates.

A shadow is the signed adjacency matrix of a quiver: a_ij counts arrows
i -> j minus arrows j -> i.  The report bundles the verdicts of the
singularity test (ps1), the sign tests (ps2, t1-t3, ps4, ps5) and the
symmetric-kernel feasibility test (ps3).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from . import ratlp
from .errors import NotSkewSymmetric, ParseError, TooLarge
from .quivers import Quiver, validate_quiver


@dataclass(frozen=True, order=True)
class Shadow:
    n: int
    rows: tuple

    def entry(self, i, j):
        return self.rows[i - 1][j - 1]


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness: tuple = ()


@dataclass(frozen=True)
class CartanWitness:
    """Symmetric nonnegative integer matrix C with A C = 0, nonzero columns."""

    rows: tuple

    def check(self, shadow: "Shadow") -> bool:
        n = shadow.n
        c = self.rows
        for i in range(n):
            for j in range(n):
                if c[i][j] != c[j][i] or c[i][j] < 0:
                    return False
        for j in range(n):
            if not any(c[i][j] for i in range(n)):
                return False
        for i in range(n):
            for j in range(n):
                if sum(shadow.rows[i][k] * c[k][j] for k in range(n)) != 0:
                    return False
        return True


@dataclass(frozen=True)
class ShadowReport:
    ps1: Verdict
    ps2: Verdict
    ps3: Verdict
    t1: Verdict
    t2: Verdict
    t3: Verdict
    ps4: Verdict
    ps5: Verdict
    markov_exception: bool
    cartan: CartanWitness | None

    @property
    def is_tame(self):
        return all(v.passed for v in (self.ps1, self.ps2, self.ps3, self.t1, self.t2, self.t3))

    @property
    def is_essential(self):
        return self.is_tame and (self.ps4.passed or self.markov_exception) and self.ps5.passed


def make_shadow(rows) -> Shadow:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSkewSymmetric("matrix is not square")
    for i in range(n):
        for j in range(n):
            if rows[i][j] != -rows[j][i]:
                raise NotSkewSymmetric("entry (%d, %d) breaks skew-symmetry" % (i + 1, j + 1))
    return Shadow(n, rows)


def shadow_of(q: Quiver) -> Shadow:
    rows = [
        [q.mult[i][j] - q.mult[j][i] for j in range(q.n)]
        for i in range(q.n)
    ]
    return make_shadow(rows)


def quiver_of_shadow(a: Shadow) -> Quiver:
    rows = [[max(a.rows[i][j], 0) for j in range(a.n)] for i in range(a.n)]
    return validate_quiver(rows, tame_mode=False)


MARKOV_SHADOW = make_shadow(
    [
        [0, -2, 2],
        [2, 0, -2],
        [-2, 2, 0],
    ]
)


def det_is_zero(a: Shadow) -> bool:
    return ratlp.det_bareiss(a.rows) == 0


def _row_signs(row):
    pos = sum(1 for x in row if x > 0)
    neg = sum(1 for x in row if x < 0)
    return pos, neg


def check_ps2(a: Shadow) -> Verdict:
    for i, row in enumerate(a.rows):
        pos, neg = _row_signs(row)
        if (pos and not neg) or (neg and not pos):
            return Verdict(False, (i + 1,))
    return Verdict(True)


def check_t1(a: Shadow) -> Verdict:
    for i in range(a.n):
        for j in range(a.n):
            if abs(a.rows[i][j]) > 2:
                return Verdict(False, (i + 1, j + 1))
    return Verdict(True)


def check_t2(a: Shadow) -> Verdict:
    for i, row in enumerate(a.rows):
        for j, x in enumerate(row):
            if x == 2:
                for k, y in enumerate(row):
                    if k != j and y >= 1:
                        return Verdict(False, (i + 1, j + 1, k + 1))
            if x == -2:
                for k, y in enumerate(row):
                    if k != j and y <= -1:
                        return Verdict(False, (i + 1, j + 1, k + 1))
    return Verdict(True)


def check_t3(a: Shadow) -> Verdict:
    for i, row in enumerate(a.rows):
        pos, neg = _row_signs(row)
        if pos > 4 or neg > 4:
            return Verdict(False, (i + 1,))
    return Verdict(True)


def check_ps4(a: Shadow) -> Verdict:
    for i, row in enumerate(a.rows):
        if 2 in row and -2 in row:
            return Verdict(False, (i + 1,))
    return Verdict(True)


def check_ps5(a: Shadow) -> Verdict:
    n = a.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if a.rows[i][j] == 2 and a.rows[j][k] == 1 and a.rows[k][i] <= 0:
                    return Verdict(False, (i + 1, j + 1, k + 1))
                if a.rows[i][j] == -2 and a.rows[j][k] == -1 and a.rows[k][i] >= 0:
                    return Verdict(False, (i + 1, j + 1, k + 1))
    return Verdict(True)


def sign_conditions(a: Shadow):
    """The purely sign-based verdicts, as a dict."""
    return {
        "ps2": check_ps2(a),
        "t1": check_t1(a),
        "t2": check_t2(a),
        "t3": check_t3(a),
        "ps4": check_ps4(a),
        "ps5": check_ps5(a),
    }


def ps3_feasible(a: Shadow):
    """Cartan-style witness: symmetric C >= 0, nonzero columns, A C = 0.

    Existence over the nonnegative integers is equivalent (by scaling) to
    rational feasibility with column sums >= 1; decided by exact simplex.
    Returns a CartanWitness or None.
    """
    n = a.n
    # variables: c_kl for k <= l (0-based), symmetric completion implied
    idx = {}
    for k in range(n):
        for l in range(k, n):
            idx[(k, l)] = len(idx)
    nvars = len(idx)

    def var(k, l):
        return idx[(k, l)] if k <= l else idx[(l, k)]

    eq_rows = []
    eq_rhs = []
    for i in range(n):
        for j in range(n):
            row = [0] * nvars
            for k in range(n):
                if a.rows[i][k]:
                    row[var(k, j)] += a.rows[i][k]
            if any(row):
                eq_rows.append(row)
                eq_rhs.append(0)
    lb_rows = []
    lb_rhs = []
    for j in range(n):
        row = [0] * nvars
        for i in range(n):
            row[var(i, j)] += 1
        lb_rows.append(row)
        lb_rhs.append(1)
    sol = ratlp.feasible_eq_lb(eq_rows, eq_rhs, lb_rows, lb_rhs)
    if sol is None:
        return None
    ints = ratlp.scale_to_integers(sol)
    rows = [[0] * n for _ in range(n)]
    for (k, l), v in idx.items():
        rows[k][l] = ints[v]
        rows[l][k] = ints[v]
    witness = CartanWitness(tuple(tuple(r) for r in rows))
    assert witness.check(a)
    return witness


def full_report(a: Shadow) -> ShadowReport:
    signs = sign_conditions(a)
    ps1 = Verdict(det_is_zero(a))
    witness = ps3_feasible(a)
    ps3 = Verdict(witness is not None)
    markov = canonical_shadow(a) == canonical_shadow(MARKOV_SHADOW) if a.n == 3 else False
    return ShadowReport(
        ps1=ps1,
        ps2=signs["ps2"],
        ps3=ps3,
        t1=signs["t1"],
        t2=signs["t2"],
        t3=signs["t3"],
        ps4=signs["ps4"],
        ps5=signs["ps5"],
        markov_exception=markov,
        cartan=witness,
    )


def is_tame_shadow(a: Shadow) -> ShadowReport:
    return full_report(a)


def is_essential(a: Shadow) -> ShadowReport:
    return full_report(a)


CANONICAL_MAX_N = 8


def canonical_shadow(a: Shadow) -> Shadow:
    """Lex-min over simultaneous row/column permutations and global negation."""
    if a.n > CANONICAL_MAX_N:
        raise TooLarge("canonical shadow limited to n <= %d" % CANONICAL_MAX_N)
    best = None
    for perm in itertools.permutations(range(a.n)):
        base = tuple(tuple(a.rows[pi][pj] for pj in perm) for pi in perm)
        neg = tuple(tuple(-x for x in row) for row in base)
        for cand in (base, neg):
            if best is None or cand < best:
                best = cand
    return Shadow(a.n, best)


def to_json(a: Shadow) -> str:
    return json.dumps({"n": a.n, "rows": [list(r) for r in a.rows]}, separators=(", ", ": "))


def from_json(text: str) -> Shadow:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc)
    if not isinstance(payload, dict) or "n" not in payload or "rows" not in payload:
        raise ParseError("expected an object with 'n' and 'rows'")
    rows = payload["rows"]
    if len(rows) != payload["n"]:
        raise ParseError("row count does not match 'n'")
    return make_shadow(rows)
