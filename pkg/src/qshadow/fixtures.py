"""Reference data for the small-rank classifications.

Shadows are given through their positive parts (the arrows of the associated
quiver); goldens are the expected classification outputs.  Everything here is
fixed data used by the pipeline tests and by verify-mode runs.
"""

from __future__ import annotations

from . import quivers as qv
from . import shadows as sh


def _shadow(n, arrows):
    rows = [[0] * n for _ in range(n)]
    for a in arrows:
        s, t = a[0], a[1]
        m = a[2] if len(a) > 2 else 1
        rows[s - 1][t - 1] += m
        rows[t - 1][s - 1] -= m
    return sh.make_shadow(rows)


def _quiver(n, arrows, loops=(), cycles=()):
    full = [tuple(a) for a in arrows]
    for v in loops:
        full.append((v, v))
    for a, b in cycles:
        full.append((a, b))
        full.append((b, a))
    return qv.from_arrows(n, full)


# ---------------------------------------------------------------------------
# n = 3: five basic shadows, four essential, three surviving (plus zero)

SHADOWS_3 = {
    1: _shadow(3, [(1, 3, 2), (2, 1, 2), (3, 2, 2)]),
    2: _shadow(3, [(1, 3), (2, 1), (3, 2)]),
    3: _shadow(3, [(1, 3), (2, 1), (3, 2, 2)]),
    4: _shadow(3, [(1, 3, 2), (2, 1), (3, 2, 2)]),
    5: _shadow(3, []),
}
ESSENTIAL_3 = (1, 2, 3, 5)

# n = 3 classification: six quivers in four families (keyed by loop-free part)
G3_TRIPLE = _quiver(3, [], cycles=[(1, 2), (2, 3), (1, 3)])
G3_CHAIN = _quiver(3, [], cycles=[(1, 2), (2, 3)])
G3_CHAIN_1 = _quiver(3, [], loops=[1], cycles=[(1, 2), (2, 3)])
G3_CHAIN_2 = _quiver(3, [], loops=[1, 3], cycles=[(1, 2), (2, 3)])
G3_MARKOV = _quiver(3, [(1, 3, 2), (2, 1, 2), (3, 2, 2)])
G3_TRIANGLE = _quiver(3, [(1, 2), (2, 3), (3, 1)], loops=[1, 2, 3])

GOLDEN_3 = [G3_TRIPLE, G3_CHAIN, G3_CHAIN_1, G3_CHAIN_2, G3_MARKOV, G3_TRIANGLE]
GOLDEN_3_FAMILIES = [
    [G3_TRIPLE],
    [G3_CHAIN, G3_CHAIN_1, G3_CHAIN_2],
    [G3_MARKOV],
    [G3_TRIANGLE],
]

# ---------------------------------------------------------------------------
# n = 4: twelve basic shadows, seven essential

SHADOWS_4 = {
    1: _shadow(4, [(1, 4), (4, 2), (2, 1, 2)]),
    2: _shadow(4, [(1, 4), (4, 3), (3, 2), (2, 1)]),
    3: _shadow(4, [(1, 4), (4, 2), (2, 1)]),
    4: _shadow(4, [(1, 4), (1, 3), (4, 2), (2, 1, 2), (3, 2)]),
    5: _shadow(4, [(1, 4), (4, 3), (3, 2), (3, 1), (2, 1)]),
    6: _shadow(4, [(1, 4), (4, 3), (4, 2), (2, 1), (3, 1)]),
    7: _shadow(4, []),
    8: _shadow(4, [(1, 4), (4, 3), (2, 1, 2), (3, 2, 2)]),
    9: _shadow(4, [(1, 4), (4, 2, 2), (2, 1, 2)]),
    10: _shadow(4, [(1, 4, 2), (4, 3, 2), (3, 2, 2), (2, 1, 2)]),
    11: _shadow(4, [(1, 4, 2), (4, 2, 2), (2, 1, 2)]),
    12: _shadow(4, [(1, 4, 2), (4, 3), (4, 2), (2, 1, 2), (3, 2)]),
}
ESSENTIAL_4 = (1, 2, 3, 4, 5, 6, 7)

# n = 4 classification: six quivers
G4_1 = _quiver(4, [(1, 4), (4, 3), (3, 2), (2, 1)], loops=[1, 3])
G4_2 = _quiver(4, [(1, 4), (4, 3), (3, 2), (2, 1)], loops=[1, 3], cycles=[(2, 4)])
G4_3 = _quiver(4, [(1, 2), (2, 3), (3, 1)], loops=[1, 2], cycles=[(3, 4)])
G4_4 = _quiver(4, [(1, 2), (2, 3), (3, 1)], loops=[1, 2, 4], cycles=[(3, 4)])
G4_5 = _quiver(4, [(2, 1, 2), (3, 2), (4, 2), (1, 3), (1, 4)], loops=[3, 4])
G4_6 = _quiver(4, [(1, 4), (4, 3), (4, 2), (3, 1), (2, 1)], loops=[1, 4])

GOLDEN_4 = [G4_1, G4_2, G4_3, G4_4, G4_5, G4_6]

# ---------------------------------------------------------------------------
# n = 5: twenty-six essential shadows, ten surviving

SHADOWS_5 = {
    1: _shadow(5, [(1, 5), (5, 2), (5, 4), (2, 1, 2), (4, 3, 2), (3, 5)]),
    2: _shadow(5, [(1, 5), (5, 2), (5, 4), (2, 1, 2), (4, 3), (3, 5)]),
    3: _shadow(5, [(1, 5), (5, 2), (2, 1, 2)]),
    4: _shadow(5, [(1, 5), (1, 4), (5, 2), (5, 4), (2, 1, 2), (4, 2), (4, 3), (3, 5)]),
    5: _shadow(5, [(1, 5), (1, 4), (1, 3), (5, 2), (5, 4), (2, 1, 2), (4, 2), (4, 3), (3, 2), (3, 5)]),
    6: _shadow(5, [(1, 5), (5, 2), (5, 3), (5, 4), (2, 1), (2, 4), (4, 1), (4, 3), (3, 1), (3, 2)]),
    7: _shadow(5, [(1, 5), (5, 2), (5, 3), (2, 1), (2, 4), (4, 3), (3, 1), (3, 2)]),
    8: _shadow(5, [(1, 5), (5, 2), (2, 1), (2, 4), (4, 3), (3, 1), (3, 2)]),
    9: _shadow(5, [(1, 5), (5, 3), (2, 1), (4, 2), (3, 1), (3, 4)]),
    10: _shadow(5, [(1, 4), (1, 5), (5, 3), (5, 4), (2, 1), (2, 5), (4, 2), (4, 3), (3, 1), (3, 2)]),
    11: _shadow(5, [(1, 4), (1, 5), (5, 3), (2, 1), (4, 2), (3, 1)]),
    12: _shadow(5, [(1, 5), (5, 4), (2, 1), (4, 3), (3, 2)]),
    13: _shadow(5, [(1, 5), (5, 3), (2, 1), (3, 2)]),
    14: _shadow(5, [(1, 5), (5, 2), (2, 1)]),
    15: _shadow(5, []),
    16: _shadow(5, [(1, 4), (1, 5), (5, 2), (2, 1, 2), (4, 2)]),
    17: _shadow(5, [(1, 3), (1, 4), (1, 5), (5, 2), (2, 1, 2), (4, 2), (3, 2)]),
    18: _shadow(5, [(1, 5), (5, 3), (5, 4), (2, 1), (4, 1), (4, 2), (3, 1), (3, 2)]),
    19: _shadow(5, [(1, 5), (5, 3), (2, 1), (4, 1), (3, 1), (3, 2), (3, 4)]),
    20: _shadow(5, [(1, 5), (5, 2), (5, 3), (5, 4), (2, 1), (4, 1), (3, 1)]),
    21: _shadow(5, [(1, 5), (5, 3), (5, 4), (2, 1), (4, 2), (4, 3), (3, 1), (3, 2)]),
    22: _shadow(5, [(1, 5), (5, 3), (2, 1), (3, 1), (3, 2)]),
    23: _shadow(5, [(1, 5), (5, 4), (2, 1), (4, 2), (4, 3), (3, 1)]),
    24: _shadow(5, [(1, 5), (5, 2), (5, 3), (2, 1), (3, 1)]),
    25: _shadow(5, [(1, 5), (5, 2), (5, 3), (2, 1), (2, 4), (4, 5), (3, 1), (3, 4)]),
    26: _shadow(5, [(1, 5), (1, 4), (5, 3), (2, 1), (4, 3), (3, 1), (3, 2)]),
}
SURVIVING_5 = (4, 11, 13, 14, 16, 17, 23, 24, 25, 26)

# n = 5 classification: nineteen quivers
G5_1 = _quiver(
    5, [(1, 5), (1, 4), (5, 2), (5, 4), (2, 1, 2), (4, 2), (4, 3), (3, 5)], loops=[3]
)
G5_2 = _quiver(5, [(1, 4), (1, 5), (5, 3), (2, 1), (4, 2), (3, 1)], loops=[2, 3, 4, 5])
G5_3 = _quiver(5, [(1, 5), (5, 3), (2, 1), (3, 2)], loops=[1], cycles=[(3, 4)])
G5_4 = _quiver(5, [(1, 5), (5, 3), (2, 1), (3, 2)], loops=[1, 4], cycles=[(3, 4)])
G5_5 = _quiver(5, [(1, 5), (5, 3), (2, 1), (3, 2)], loops=[1], cycles=[(3, 4), (2, 5)])
G5_6 = _quiver(5, [(1, 5), (5, 3), (2, 1), (3, 2)], loops=[1, 4], cycles=[(3, 4), (2, 5)])
G5_7 = _quiver(5, [(1, 5), (5, 2), (2, 1)], loops=[1], cycles=[(3, 5), (2, 4)])
G5_8 = _quiver(5, [(1, 5), (5, 2), (2, 1)], loops=[1, 3], cycles=[(3, 5), (2, 4)])
G5_9 = _quiver(5, [(1, 5), (5, 2), (2, 1)], loops=[1, 3, 4], cycles=[(3, 5), (2, 4)])
G5_10 = _quiver(5, [(1, 4), (1, 5), (5, 2), (2, 1, 2), (4, 2)], loops=[5], cycles=[(3, 4)])
G5_11 = _quiver(5, [(1, 4), (1, 5), (5, 2), (2, 1, 2), (4, 2)], loops=[3, 5], cycles=[(3, 4)])
G5_12 = _quiver(
    5, [(1, 3), (1, 4), (1, 5), (5, 2), (2, 1, 2), (4, 2), (3, 2)], loops=[5]
)
G5_13 = _quiver(5, [(1, 5), (5, 4), (2, 1), (4, 2), (4, 3), (3, 1)], loops=[5])
G5_14 = _quiver(
    5, [(1, 5), (5, 4), (2, 1), (4, 2), (4, 3), (3, 1)], loops=[5], cycles=[(1, 4)]
)
G5_15 = _quiver(5, [(1, 5), (5, 2), (5, 3), (2, 1), (3, 1)], loops=[1], cycles=[(4, 5)])
G5_16 = _quiver(5, [(1, 5), (5, 2), (5, 3), (2, 1), (3, 1)], loops=[1, 4], cycles=[(4, 5)])
G5_17 = _quiver(
    5, [(1, 5), (5, 2), (5, 3), (2, 1), (2, 4), (4, 5), (3, 1), (3, 4)], loops=[5]
)
G5_18 = _quiver(5, [(1, 5), (1, 4), (5, 3), (2, 1), (4, 3), (3, 1), (3, 2)], loops=[5])
G5_19 = _quiver(
    5, [(1, 5), (1, 4), (5, 3), (2, 1), (4, 3), (3, 1), (3, 2)], loops=[5], cycles=[(2, 4)]
)

GOLDEN_5 = [
    G5_1, G5_2, G5_3, G5_4, G5_5, G5_6, G5_7, G5_8, G5_9, G5_10,
    G5_11, G5_12, G5_13, G5_14, G5_15, G5_16, G5_17, G5_18, G5_19,
]

# goldens grouped by the shadow they come from (index into SHADOWS_5)
GOLDEN_5_BY_SHADOW = {
    4: [G5_1],
    11: [G5_2],
    13: [G5_3, G5_4, G5_5, G5_6],
    14: [G5_7, G5_8, G5_9],
    16: [G5_10, G5_11],
    17: [G5_12],
    23: [G5_13, G5_14],
    24: [G5_15, G5_16],
    25: [G5_17],
    26: [G5_18, G5_19],
}

# ---------------------------------------------------------------------------
# mutation fixtures

# five-cycle block on closed vertices 1..4 with outlet 5, plus a loop at 5
Q17_FIXTURE = qv.from_arrows(
    5,
    [(2, 1), (2, 3), (4, 1), (4, 3), (1, 5), (3, 5), (5, 4), (5, 2), (5, 5)],
)

# the shadow-23 golden with the loop: six-arrow block plus a loop at the outlet
Q13_FIXTURE = G5_13


def golden_shadow_keys(n):
    if n == 3:
        return [k for k in ESSENTIAL_3 if SHADOWS_3[k].rows != SHADOWS_3[5].rows or k == 5]
    if n == 4:
        return list(ESSENTIAL_4)
    if n == 5:
        return sorted(SHADOWS_5)
    raise ValueError("no reference data for n=%d" % n)


def canonical_set(shadow_list):
    return {sh.canonical_shadow(a).rows for a in shadow_list}


def basic_reference(n):
    """Canonical forms of the transcribed basic tame shadows (n = 3, 4)."""
    if n == 3:
        return canonical_set(SHADOWS_3.values())
    if n == 4:
        return canonical_set(SHADOWS_4.values())
    raise ValueError("basic reference lists exist only for n=3 and n=4")


def essential_reference(n):
    if n == 3:
        return canonical_set(SHADOWS_3[k] for k in ESSENTIAL_3)
    if n == 4:
        return canonical_set(SHADOWS_4[k] for k in ESSENTIAL_4)
    if n == 5:
        return canonical_set(SHADOWS_5.values())
    raise ValueError("essential reference lists exist only for n=3,4,5")


def surviving_reference(n):
    """Canonical forms of the shadows that admit classified quivers."""
    if n == 3:
        return canonical_set([SHADOWS_3[1], SHADOWS_3[2], SHADOWS_3[5]])
    if n == 4:
        return canonical_set(SHADOWS_4[k] for k in (2, 3, 4, 6))
    if n == 5:
        return canonical_set(SHADOWS_5[k] for k in SURVIVING_5)
    raise ValueError("surviving reference lists exist only for n=3,4,5")
