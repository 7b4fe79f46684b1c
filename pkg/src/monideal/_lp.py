"""Exact phase-one simplex for membership in conv(V) + N^d.

Decides whether some convex combination p of the points V satisfies
p <= a.  Variables are the convex weights lambda_i and slacks s_k:

    sum_i lambda_i v_i + s = a,   sum_i lambda_i = 1,   lambda, s >= 0.

A basic solution has at most d + 1 nonzero weights, so a feasible answer
is a Caratheodory witness.  When the system is infeasible the final dual
vector yields an integer inequality  w . p >= c  that holds on the whole
polyhedron but fails at a; callers cache these as cutting planes.

The tableau is kept fraction free: integer entries over one common
denominator, with Edmonds' pivot rule (every update divides exactly by
the previous pivot), so all arithmetic is on Python ints.
"""

from fractions import Fraction
from math import gcd


def convex_dominance(points, a):
    """Return ``(True, {i: lambda_i})`` or ``(False, (w, c))``."""
    d = len(a)
    n = len(points)
    ncols = n + d
    m = d + 1
    # rows: d coordinate rows, then the convexity row; columns: lambda, slack,
    # artificials, rhs.  Every rhs is >= 0 so artificials start feasible.
    rows = []
    for k in range(d):
        row = [p[k] for p in points]
        row += [1 if j == k else 0 for j in range(d)]
        row += [1 if j == k else 0 for j in range(m)]
        row.append(a[k])
        rows.append(row)
    rows.append([1] * n + [0] * d + [1 if j == d else 0 for j in range(m)] + [1])
    basis = [ncols + i for i in range(m)]

    # reduced costs for minimising the sum of artificials
    cost = [0 if ncols <= j < ncols + m else -sum(r[j] for r in rows)
            for j in range(ncols + m + 1)]
    denom = 1  # the true tableau is rows / denom and cost / denom

    degenerate = 0
    while True:
        if degenerate < 50:
            # Dantzig pricing; Bland's rule after a run of degenerate pivots
            enter = min(range(ncols), key=cost.__getitem__)
            if cost[enter] >= 0:
                enter = None
        else:
            enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                if leave is None:
                    leave = i
                    continue
                # compare r[-1] / r[enter] with the best ratio so far
                lhs = r[-1] * rows[leave][enter]
                rhs = rows[leave][-1] * r[enter]
                if lhs < rhs or (lhs == rhs and basis[i] < basis[leave]):
                    leave = i
        if leave is None:  # cannot happen: phase one is bounded below by 0
            raise AssertionError("unbounded phase-one simplex")
        piv = rows[leave]
        degenerate = degenerate + 1 if piv[-1] == 0 else 0
        pv = piv[enter]
        for r in rows + [cost]:
            f = r[enter]
            if r is piv or (f == 0 and pv == denom):
                continue
            r[:] = [(x * pv - f * y) // denom for x, y in zip(r, piv)]
        denom = pv
        basis[leave] = enter

    if cost[-1] == 0:
        weights = {}
        for i, b in enumerate(basis):
            if b < n and rows[i][-1] != 0:
                weights[b] = Fraction(rows[i][-1], denom)
        return True, weights

    # dual y_j = 1 - (reduced cost of artificial j); y = (u, y0), w = -u
    y = [denom - cost[ncols + j] for j in range(m)]  # scaled by denom
    w = [-u for u in y[:d]]
    c = y[d]
    g = gcd(*w, c) or 1
    return False, (tuple(x // g for x in w), c // g)
