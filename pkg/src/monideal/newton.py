"""
Newton polyhedra of monomial ideals.

The Newton polyhedron of I is conv(Delta(I)) + R^d_{>=0}.  Its lattice
points are the exponents of the integral closure, and for an m-primary
ideal its bounded facets are the Rees valuations (as monomial weight
vectors).  Closure and facets are computed by two unrelated routes on
purpose: closure membership goes through an exact LP, facets through
integer vertex-subset enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as cartesian
from math import gcd, lcm
from typing import List, Sequence, Tuple

from ._lp import convex_dominance
from .errors import DimensionMismatch, MonomialIdealError
from .monomial import (ExponentVector, MonomialIdeal, contains, divides,
                       minimal_elements, minimalize, product,
                       require_m_primary)

WeightVector = Tuple[int, ...]

FACET_DIM_LIMIT = 4


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    vertices: Tuple[ExponentVector, ...]
    # (normal, offset) meaning normal . p >= offset
    facets: Tuple[Tuple[WeightVector, int], ...]

    def __contains__(self, p):
        return all(dot(w, p) >= c for w, c in self.facets)


def dot(w: Sequence[int], a: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(w, a))


def weight_value(w: Sequence[int], I: MonomialIdeal) -> int:
    """Value of the monomial valuation with weights w on I."""
    if len(w) != I.dim:
        raise DimensionMismatch(f"weight {tuple(w)} does not match dimension {I.dim}",
                                "weight_value", I)
    return min(dot(w, g) for g in I.gens)


def in_newton_polyhedron(I: MonomialIdeal, a: Sequence[int]) -> bool:
    if len(a) != I.dim:
        raise DimensionMismatch(f"monomial {tuple(a)} does not match dimension {I.dim}",
                                "in_newton_polyhedron", I)
    if contains(I, a):
        return True
    ok, _ = convex_dominance(I.gens, tuple(a))
    return ok


def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    """Minimal lattice points of the Newton polyhedron of I.

    Candidates live in the box [0, M_1] x ... x [0, M_d] where M_i is the
    largest i-th exponent among the generators: if p is a lattice point of
    the polyhedron with p_i > M_i, then p - e_i still dominates the same
    convex combination, so p is not minimal.

    Points are visited by increasing degree.  A point with a member just
    below it is a (non-minimal) member; a point violating a cached cut is
    not a member; a point lying over the midpoint of two generators is a member; only the rest
    reach the LP.  Each infeasible LP
    contributes its separating inequality to the cache.
    """
    if I.is_unit():
        return I
    d = I.dim
    box = [max(g[i] for g in I.gens) for i in range(d)]
    r = min(sum(g) for g in I.gens)
    cuts = [((1,) * d, r)]
    gens = set(I.gens)
    in_I = {}
    member = {}
    minimal = []
    points = sorted(cartesian(*(range(M + 1) for M in box)), key=sum)
    for p in points:
        below = in_ideal = False
        for k in range(d):
            if p[k]:
                q = p[:k] + (p[k] - 1,) + p[k + 1:]
                in_ideal = in_ideal or in_I[q]
                below = below or member[q]
        in_I[p] = in_ideal = in_ideal or p in gens
        if below:
            member[p] = True
            continue
        if in_ideal:
            inside = True
        elif any(dot(w, p) < c for w, c in cuts):
            inside = False
        elif _midpoint_below(I.gens, p):
            inside = True
        else:
            inside, cert = convex_dominance(I.gens, p)
            if not inside:
                cuts.append(cert)
        member[p] = inside
        if inside:
            minimal.append(p)
    return MonomialIdeal(d, tuple(sorted(minimal, reverse=True)))


def _midpoint_below(gens, p):
    """Some (g + h) / 2 <= p, i.e. x^{2p} in I^2."""
    two_p = tuple(2 * e for e in p)
    near = [g for g in gens if divides(g, two_p)]
    return any(divides(tuple(a + b for a, b in zip(g, h)), two_p)
               for i, g in enumerate(near) for h in near[i + 1:])


def is_complete(I: MonomialIdeal) -> bool:
    return integral_closure(I) == I


def star_product(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Completion of the ordinary product."""
    if not ideals:
        raise MonomialIdealError("star product of nothing", "star_product")
    result = ideals[0]
    for J in ideals[1:]:
        result = product(result, J)
    return integral_closure(result)


def star_power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k == 0:
        return MonomialIdeal.unit(I.dim)
    return star_product(*([I] * k))


def newton_vertices(I: MonomialIdeal) -> Tuple[ExponentVector, ...]:
    """Generators of I that are not dominated by a convex combination of
    the others."""
    gens = I.gens
    if len(gens) == 1:
        return gens
    verts = []
    for i, g in enumerate(gens):
        others = gens[:i] + gens[i + 1:]
        if not convex_dominance(others, g)[0]:
            verts.append(g)
    return tuple(verts)


def _det(M):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def hyperplane_normal(points) -> WeightVector:
    """Primitive integer normal to the affine hull of d points in Z^d, or
    the zero vector when the points are affinely dependent."""
    base = points[0]
    rows = [[p[k] - base[k] for k in range(len(base))] for p in points[1:]]
    d = len(base)
    normal = []
    for k in range(d):
        minor = [r[:k] + r[k + 1:] for r in rows]
        normal.append((-1) ** k * _det(minor))
    g = gcd(*normal)
    if g == 0:
        return tuple(normal)
    return tuple(x // g for x in normal)


def bounded_facets(I: MonomialIdeal, max_dim: int = FACET_DIM_LIMIT) -> List[Tuple[WeightVector, int]]:
    require_m_primary(I, "rees_valuations")
    d = I.dim
    if d > max_dim:
        raise MonomialIdealError(
            f"facet enumeration is limited to dimension {max_dim}, got {d}", "rees_valuations", I)
    verts = newton_vertices(I)
    found = {}
    for subset in combinations(verts, d):
        w = hyperplane_normal(subset)
        if not any(w):
            continue
        if all(x < 0 for x in w):
            w = tuple(-x for x in w)
        if not all(x > 0 for x in w):
            continue
        c = dot(w, subset[0])
        if all(dot(w, v) >= c for v in verts):
            found[w] = c
    return sorted(found.items())


def rees_valuations(I: MonomialIdeal, max_dim: int = FACET_DIM_LIMIT) -> List[WeightVector]:
    """Rees valuations of an m-primary monomial ideal, as primitive weight
    vectors: the normals of the bounded facets of its Newton polyhedron."""
    return [w for w, _ in bounded_facets(I, max_dim)]


def newton_polyhedron(I: MonomialIdeal, max_dim: int = FACET_DIM_LIMIT) -> NewtonPolyhedron:
    facets = bounded_facets(I, max_dim)
    d = I.dim
    coordinate = [(tuple(1 if k == i else 0 for k in range(d)), 0) for i in range(d)]
    return NewtonPolyhedron(d, newton_vertices(I), tuple(facets + coordinate))


# -- power-test oracle --------------------------------------------------------

POWER_TEST_LIMIT = 8


def in_power(I: MonomialIdeal, a: Sequence[int], k: int) -> bool:
    """True iff x^a lies in I^k, without expanding I^k: grow partial sums
    of generators, keeping only minimal ones that stay below a."""
    a = tuple(a)
    layer = [(0,) * I.dim]
    for _ in range(k):
        grown = {tuple(s + g for s, g in zip(v, h)) for v in layer for h in I.gens}
        layer = [v for v in grown if divides(v, a)]
        if not layer:
            return False
        layer = minimal_elements(layer)
    return True


def power_test(I: MonomialIdeal, a: Sequence[int], kmax: int = POWER_TEST_LIMIT) -> bool:
    """One-sided closure test: True means x^a is integral over I (some
    x^{ka} lies in I^k with k <= kmax); False is inconclusive."""
    return any(in_power(I, tuple(k * e for e in a), k) for k in range(1, kmax + 1))


def power_certificate(I: MonomialIdeal, a: Sequence[int]):
    """(k, multiplicities) with sum_i n_i = k and sum_i n_i g_i <= k a, read
    off the LP witness; it exhibits x^{ka} in I^k.  None if a is not integral."""
    ok, weights = convex_dominance(I.gens, tuple(a))
    if not ok:
        return None
    k = lcm(*(q.denominator for q in weights.values()))
    return k, {i: int(q * k) for i, q in weights.items()}


def _certificate_holds(I, a, cert):
    k, mult = cert
    if k < 1 or sum(mult.values()) != k or any(n < 0 for n in mult.values()):
        return False
    total = [0] * I.dim
    for i, n in mult.items():
        for c in range(I.dim):
            total[c] += n * I.gens[i][c]
    return all(t <= k * e for t, e in zip(total, a))


def standard_corners(J: MonomialIdeal):
    """Monomials outside J whose every successor x_i * a lies in J."""
    require_m_primary(J, "standard_corners")
    d = J.dim
    box = [J.pure_power(i) - 1 for i in range(d)]
    for p in cartesian(*(range(M + 1) for M in box)):
        if contains(J, p):
            continue
        if all(contains(J, p[:i] + (p[i] + 1,) + p[i + 1:]) for i in range(d)):
            yield p


def check_closure(I: MonomialIdeal, J: MonomialIdeal):
    """Cross-check a claimed closure J of an m-primary I.

    Every generator g of J must carry a power certificate: k generators of
    I whose product divides x^{kg}, checked in integers.  Every corner of
    the complement of J must come with a separating inequality w . p >= c,
    w >= 0, re-checked in integers against all generators of I.
    Membership is upward closed, so the corners cover the complement.
    """
    for g in J.gens:
        cert = power_certificate(I, g)
        if cert is None or not _certificate_holds(I, g, cert):
            raise AssertionError(f"closure generator {g} has no power certificate over {I}")
    for p in standard_corners(J):
        ok, cut = convex_dominance(I.gens, p)
        if ok:
            raise AssertionError(f"{p} is integral over {I} but missing from {J}")
        w, c = cut
        if any(x < 0 for x in w) or dot(w, p) >= c or any(dot(w, g) < c for g in I.gens):
            raise AssertionError(f"bad separating inequality {cut} at {p}")
