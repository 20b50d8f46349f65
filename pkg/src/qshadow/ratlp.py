"""Exact rational linear algebra: Bareiss determinants, row-space tests and
a phase-1 simplex (Bland's rule) over fractions.Fraction.

Everything here is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def det_bareiss(rows) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def row_space_contains(rows, vec) -> bool:
    """Whether vec lies in the rational span of the given rows."""
    basis = []
    for r in rows:
        basis.append([Fraction(x) for x in r])
    target = [Fraction(x) for x in vec]
    # reduce basis to echelon form
    echelon = []
    pivots = []
    for r in basis:
        r = r[:]
        for p, pr in zip(pivots, echelon):
            if r[p]:
                f = r[p]
                r = [x - f * y for x, y in zip(r, pr)]
        for p, x in enumerate(r):
            if x:
                r = [y / x for y in r]
                echelon.append(r)
                pivots.append(p)
                break
    for p, pr in zip(pivots, echelon):
        if target[p]:
            f = target[p]
            target = [x - f * y for x, y in zip(target, pr)]
    return not any(target)


def phase_one_feasible(a_rows, b):
    """Find x >= 0 with A x = b, or None.

    a_rows: list of rows (numbers convertible to Fraction); b: list.
    Phase-1 simplex with artificial variables and Bland's rule.
    """
    m = len(a_rows)
    if m == 0:
        return []
    n = len(a_rows[0])
    a = [[Fraction(x) for x in row] for row in a_rows]
    rhs = [Fraction(x) for x in b]
    for i in range(m):
        if rhs[i] < 0:
            a[i] = [-x for x in a[i]]
            rhs[i] = -rhs[i]
    # tableau columns: n structural + m artificial
    tab = [a[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    ncols = n + m
    # cost row for min sum of artificials, in reduced form
    cost = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for j in range(ncols + 1):
            cost[j] -= tab[i][j]
    for i in range(m):
        cost[n + i] += Fraction(1)

    while True:
        enter = -1
        for j in range(ncols):
            if cost[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][ncols] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # unbounded phase-1 objective cannot happen; treat as infeasible
            return None
        _pivot(tab, cost, basis, leave, enter, ncols)

    if cost[ncols] != 0:
        return None
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if tab[i][j] != 0:
                    _pivot(tab, cost, basis, i, j, ncols)
                    break
    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tab[i][ncols]
    return x


def _pivot(tab, cost, basis, row, col, ncols):
    m = len(tab)
    piv = tab[row][col]
    tab[row] = [x / piv for x in tab[row]]
    for i in range(m):
        if i != row and tab[i][col]:
            f = tab[i][col]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
    if cost[col]:
        f = cost[col]
        for j in range(ncols + 1):
            cost[j] -= f * tab[row][j]
    basis[row] = col


def feasible_eq_lb(eq_rows, eq_rhs, lb_rows, lb_rhs):
    """Find x >= 0 with Aeq x = beq and Alb x >= blb, or None.

    Inequalities get surplus variables and everything goes through
    phase_one_feasible.
    """
    nvars = len(eq_rows[0]) if eq_rows else (len(lb_rows[0]) if lb_rows else 0)
    nsur = len(lb_rows)
    rows = []
    rhs = []
    for r, v in zip(eq_rows, eq_rhs):
        rows.append(list(r) + [0] * nsur)
        rhs.append(v)
    for k, (r, v) in enumerate(zip(lb_rows, lb_rhs)):
        sur = [0] * nsur
        sur[k] = -1
        rows.append(list(r) + sur)
        rhs.append(v)
    sol = phase_one_feasible(rows, rhs)
    if sol is None:
        return None
    return sol[:nvars]


def scale_to_integers(values):
    """Multiply rationals by the lcm of denominators, divide by common gcd."""
    fracs = [Fraction(v) for v in values]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints
