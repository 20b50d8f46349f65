"""Finite quivers as multiplicity matrices.

A quiver on n vertices (labelled 1..n) is stored as an n x n matrix of
nonnegative integers; mult[i][j] counts arrows i -> j and the diagonal
counts loops.  In tame mode at most 2 parallel arrows are allowed between
distinct vertices and at most 1 loop per vertex.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .errors import (
    NegativeEntry,
    NonSquare,
    ParseError,
    TameBoundViolated,
    TooLarge,
    VertexOutOfRange,
)

CANONICAL_MAX_N = 8


@dataclass(frozen=True, order=True)
class Quiver:
    n: int
    mult: tuple  # tuple of n tuples of n ints

    def arrow_count(self):
        return sum(sum(row) for row in self.mult)

    def arrows(self):
        """Sorted list of (source, target, multiplicity), 1-based."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if self.mult[i][j]:
                    out.append((i + 1, j + 1, self.mult[i][j]))
        return out

    def has_arrow(self, i, j):
        return self.mult[i - 1][j - 1] > 0


class VertexDegree(NamedTuple):
    indeg: int
    outdeg: int


def _freeze(rows):
    return tuple(tuple(int(x) for x in row) for row in rows)


def validate_quiver(rows, tame_mode=True) -> Quiver:
    rows = _freeze(rows)
    n = len(rows)
    if n < 1 or any(len(r) != n for r in rows):
        raise NonSquare("expected a square matrix with n >= 1")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if v < 0:
                raise NegativeEntry("negative multiplicity at (%d, %d)" % (i + 1, j + 1))
            if tame_mode:
                bound = 1 if i == j else 2
                if v > bound:
                    raise TameBoundViolated(i + 1, j + 1, v)
    return Quiver(n, rows)


def from_arrows(n, arrows, tame_mode=True) -> Quiver:
    """Build a quiver from (source, target[, multiplicity]) triples, 1-based."""
    rows = [[0] * n for _ in range(n)]
    for a in arrows:
        if len(a) == 2:
            s, t, m = a[0], a[1], 1
        else:
            s, t, m = a
        if not (1 <= s <= n and 1 <= t <= n):
            raise VertexOutOfRange("arrow (%d, %d) outside 1..%d" % (s, t, n))
        rows[s - 1][t - 1] += m
    return validate_quiver(rows, tame_mode=tame_mode)


def degrees(q: Quiver, i: int) -> VertexDegree:
    if not (1 <= i <= q.n):
        raise VertexOutOfRange(str(i))
    k = i - 1
    indeg = sum(q.mult[j][k] for j in range(q.n))
    outdeg = sum(q.mult[k][j] for j in range(q.n))
    return VertexDegree(indeg, outdeg)


def regularity(q: Quiver, i: int):
    """('regular', r) if the vertex is (r, r); otherwise ('pq', p, q)."""
    d = degrees(q, i)
    if d.indeg == d.outdeg:
        return ("regular", d.indeg)
    return ("pq", d.indeg, d.outdeg)


def is_biregular(q: Quiver) -> bool:
    """All vertices 1- or 2-regular."""
    for i in range(1, q.n + 1):
        d = degrees(q, i)
        if d.indeg != d.outdeg or d.indeg not in (1, 2):
            return False
    return True


def is_two_regular(q: Quiver) -> bool:
    return all(degrees(q, i) == (2, 2) for i in range(1, q.n + 1))


def loop_free(q: Quiver) -> Quiver:
    rows = [list(r) for r in q.mult]
    for i in range(q.n):
        rows[i][i] = 0
    return Quiver(q.n, _freeze(rows))


def reduced_quiver(q: Quiver) -> Quiver:
    """Delete loops and cancel 2-cycles: entry max(mult[i][j] - mult[j][i], 0)."""
    rows = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        for j in range(q.n):
            if i != j:
                rows[i][j] = max(q.mult[i][j] - q.mult[j][i], 0)
    return Quiver(q.n, _freeze(rows))


def opposite(q: Quiver) -> Quiver:
    rows = [[q.mult[j][i] for j in range(q.n)] for i in range(q.n)]
    return Quiver(q.n, _freeze(rows))


def relabel(q: Quiver, perm) -> Quiver:
    """perm[k] is the new 0-based label of old vertex k."""
    rows = [[0] * q.n for _ in range(q.n)]
    for i in range(q.n):
        for j in range(q.n):
            rows[perm[i]][perm[j]] = q.mult[i][j]
    return Quiver(q.n, _freeze(rows))


def canonical_form(q: Quiver):
    """Lex-minimal relabelling; returns (quiver, permutation)."""
    if q.n > CANONICAL_MAX_N:
        raise TooLarge("canonical form limited to n <= %d" % CANONICAL_MAX_N)
    best = None
    best_perm = None
    for perm in itertools.permutations(range(q.n)):
        inv = _inverse(perm)
        cand = tuple(tuple(q.mult[pi][pj] for pj in inv) for pi in inv)
        if best is None or cand < best:
            best = cand
            best_perm = perm
    return Quiver(q.n, best), best_perm


def _inverse(perm):
    inv = [0] * len(perm)
    for k, v in enumerate(perm):
        inv[v] = k
    return tuple(inv)


def is_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    if q1.n != q2.n:
        return False
    return canonical_form(q1)[0] == canonical_form(q2)[0]


def is_isomorphic_or_opposite(q1: Quiver, q2: Quiver) -> bool:
    return is_isomorphic(q1, q2) or is_isomorphic(q1, opposite(q2))


def is_connected(q: Quiver) -> bool:
    """Weak connectivity of the underlying graph."""
    if q.n == 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(q.n):
            if w not in seen and (q.mult[v][w] or q.mult[w][v]):
                seen.add(w)
                stack.append(w)
    return len(seen) == q.n


# ---------------------------------------------------------------------------
# pattern matching

@dataclass(frozen=True)
class PatternSpec:
    """Template quiver plus per-vertex constraints.

    closed: template vertices (1-based) that may receive no arrows besides
    the template's own (the filled-dot role in a block).
    degree: optional map vertex -> ("exact"|"min", indeg, outdeg) checked
    against the host quiver.
    exact_multiplicity: if set, mult[map(u)][map(v)] must equal the template
    entry for all template pairs; otherwise >= is enough.
    """

    template: Quiver
    closed: frozenset = frozenset()
    degree: tuple = ()  # tuple of (vertex, kind, indeg, outdeg)
    exact_multiplicity: bool = False


def find_pattern(q: Quiver, spec: PatternSpec):
    """All injective matches, as tuples of host vertices (1-based) indexed by
    template vertex.  Deterministic lex order."""
    t = spec.template
    m = t.n
    closed0 = {v - 1 for v in spec.closed}
    degree = {v - 1: (kind, di, do) for (v, kind, di, do) in spec.degree}
    matches = []

    def vertex_ok(u, host):
        if u in degree:
            kind, di, do = degree[u]
            d = degrees(q, host + 1)
            if kind == "exact" and (d.indeg != di or d.outdeg != do):
                return False
            if kind == "min" and (d.indeg < di or d.outdeg < do):
                return False
        return True

    def pair_ok(u, v, hu, hv):
        need = t.mult[u][v]
        have = q.mult[hu][hv]
        if have < need:
            return False
        if (spec.exact_multiplicity or u in closed0 or v in closed0) and have != need:
            return False
        return True

    def closed_ok(mapping):
        # closed vertices see no arrows outside the template image
        image = set(mapping)
        inv = {h: u for u, h in enumerate(mapping)}
        for u in closed0:
            h = mapping[u]
            for w in range(q.n):
                expect_out = t.mult[u][inv[w]] if w in inv else 0
                expect_in = t.mult[inv[w]][u] if w in inv else 0
                if q.mult[h][w] != expect_out or q.mult[w][h] != expect_in:
                    return False
        return True

    def extend(mapping):
        u = len(mapping)
        if u == m:
            if closed_ok(mapping):
                matches.append(tuple(h + 1 for h in mapping))
            return
        for host in range(q.n):
            if host in mapping:
                continue
            if not vertex_ok(u, host):
                continue
            ok = True
            for v, hv in enumerate(mapping):
                if not (pair_ok(u, v, host, hv) and pair_ok(v, u, hv, host)):
                    ok = False
                    break
            if ok and pair_ok(u, u, host, host):
                extend(mapping + [host])

    extend([])
    matches.sort()
    return matches


# ---------------------------------------------------------------------------
# serialization

def to_json(q: Quiver) -> str:
    payload = {"n": q.n, "arrows": [list(a) for a in q.arrows()]}
    return json.dumps(payload, separators=(", ", ": "))


def from_json(text: str, tame_mode=True) -> Quiver:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON: %s" % exc, location="offset %d" % exc.pos)
    if not isinstance(payload, dict) or "n" not in payload or "arrows" not in payload:
        raise ParseError("expected an object with 'n' and 'arrows'")
    n = payload["n"]
    if not isinstance(n, int) or n < 1:
        raise ParseError("'n' must be a positive integer")
    arrows = payload["arrows"]
    if not isinstance(arrows, list):
        raise ParseError("'arrows' must be a list")
    triples = []
    for k, a in enumerate(arrows):
        if (not isinstance(a, list)) or len(a) != 3 or not all(isinstance(x, int) for x in a):
            raise ParseError("bad arrow entry", location="arrows[%d]" % k)
        s, t, mlt = a
        if mlt < 1:
            raise ParseError("multiplicity must be >= 1", location="arrows[%d]" % k)
        if not (1 <= s <= n and 1 <= t <= n):
            raise ParseError("vertex out of range", location="arrows[%d]" % k)
        triples.append((s, t, mlt))
    return from_arrows(n, triples, tame_mode=tame_mode)


def to_dot(q: Quiver) -> str:
    lines = ["digraph quiver {"]
    for i in range(1, q.n + 1):
        lines.append('  v%d [label="%d"];' % (i, i))
    for s, t, m in q.arrows():
        for _ in range(m):
            lines.append("  v%d -> v%d;" % (s, t))
    lines.append("}")
    return "\n".join(lines) + "\n"
