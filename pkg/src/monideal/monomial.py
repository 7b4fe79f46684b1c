"""
Monomial ideals of a regular local ring with a fixed regular system of
parameters x, y, ..., z.

A monomial is stored as its exponent vector (a tuple of d nonnegative
ints).  An ideal is stored as the antichain of its minimal monomial
generators, sorted in descending lexicographic order, so two ideals are
equal exactly when their representations are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product as cartesian
from typing import Iterable, Sequence, Tuple

from .errors import DimensionMismatch, MonomialIdealError, NotPrimaryError

ExponentVector = Tuple[int, ...]

DEFAULT_VARS = {2: ("x", "y"), 3: ("x", "y", "z"), 4: ("x", "y", "z", "w")}


def default_vars(d: int) -> Tuple[str, ...]:
    if d in DEFAULT_VARS:
        return DEFAULT_VARS[d]
    return tuple(f"x{i + 1}" for i in range(d))


def divides(g: Sequence[int], a: Sequence[int]) -> bool:
    """True iff x^g divides x^a, i.e. g <= a componentwise."""
    return all(gi <= ai for gi, ai in zip(g, a))


def degree(a: Sequence[int]) -> int:
    return sum(a)


def minimal_elements(vectors: Iterable[ExponentVector]) -> list:
    """The <=-minimal elements of a finite set of exponent vectors, sorted
    by (degree, vector)."""
    vs = set(vectors)
    if len(vs) > 64:
        kept = _staircase_minimal(vs)
        if kept is not None:
            return sorted(kept, key=lambda v: (sum(v), v))
    kept = []
    for v in sorted(vs, key=lambda v: (sum(v), v)):
        if not any(divides(g, v) for g in kept):
            kept.append(v)
    return kept


def _staircase_minimal(vs):
    # Take the coordinate c with the widest range as the value and index
    # the other coordinates b by a box.  With low[b] the smallest value
    # present at b and below[b] the smallest value at any b' <= b, a vector
    # is minimal iff it equals low[b] and below[b - e_k] exceeds it for all k.
    d = len(next(iter(vs)))
    if d == 1:
        return [min(vs)]
    ranges = [max(v[k] for v in vs) + 1 for k in range(d)]
    c = max(range(d), key=ranges.__getitem__)
    others = [k for k in range(d) if k != c]
    size, strides = 1, []
    for k in others:
        strides.append(size)
        size *= ranges[k]
    if size > 32 * len(vs) + 4096:
        return None
    inf = ranges[c]
    low = [inf] * size
    cell = {}
    for v in vs:
        idx = sum(v[k] * s for k, s in zip(others, strides))
        cell[v] = idx
        if v[c] < low[idx]:
            low[idx] = v[c]
    below = low[:]
    for k, s in zip(others, strides):
        span = s * ranges[k]
        for idx in range(size):
            if idx % span >= s and below[idx - s] < below[idx]:
                below[idx] = below[idx - s]
    kept = []
    for v in vs:
        idx = cell[v]
        if low[idx] != v[c]:
            continue
        if all(v[k] == 0 or below[idx - s] > v[c] for k, s in zip(others, strides)):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    dim: int
    gens: Tuple[ExponentVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise MonomialIdealError("dimension must be positive", "MonomialIdeal")
        if not self.gens:
            raise MonomialIdealError("an ideal needs at least one generator", "MonomialIdeal")
        for g in self.gens:
            if len(g) != self.dim:
                raise DimensionMismatch(
                    f"generator {g} has length {len(g)}, expected {self.dim}",
                    "MonomialIdeal")
            if any(e < 0 for e in g):
                raise MonomialIdealError(f"negative exponent in {g}", "MonomialIdeal")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_generators(cls, raw, dim=None) -> "MonomialIdeal":
        return minimalize(raw, dim)

    @classmethod
    def maximal(cls, d: int) -> "MonomialIdeal":
        return cls(d, tuple(_unit_vector(d, i) for i in range(d)))

    @classmethod
    def unit(cls, d: int) -> "MonomialIdeal":
        return cls(d, ((0,) * d,))

    # -- predicates -------------------------------------------------------

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __pow__(self, k: int):
        return power(self, k)

    def colon(self, other):
        return colon(self, other)

    def order(self) -> int:
        return ord_(self)

    def pure_power(self, i: int):
        """Exponent n with x_i^n in Delta(I), or None."""
        for g in self.gens:
            if g[i] == sum(g):
                return g[i]
        return None

    def format(self, names=None) -> str:
        names = names or default_vars(self.dim)
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __str__(self):
        return self.format()


def _unit_vector(d, i, n=1):
    return tuple(n if k == i else 0 for k in range(d))


def _check_dims(op, *ideals):
    d = ideals[0].dim
    for J in ideals[1:]:
        if J.dim != d:
            raise DimensionMismatch(f"dimensions {d} and {J.dim} differ", op, J)
    return d


def minimalize(raw, dim=None) -> MonomialIdeal:
    """Canonical ideal generated by the exponent vectors in ``raw``."""
    vectors = [tuple(int(e) for e in v) for v in raw]
    if not vectors:
        raise MonomialIdealError("empty generating set", "minimalize")
    lengths = {len(v) for v in vectors}
    if len(lengths) != 1:
        raise DimensionMismatch(f"generators of mismatched lengths {sorted(lengths)}", "minimalize")
    d = lengths.pop()
    if dim is not None and d != dim:
        raise DimensionMismatch(f"generators have length {d}, expected {dim}", "minimalize")
    gens = minimal_elements(vectors)
    return MonomialIdeal(d, tuple(sorted(gens, reverse=True)))


def contains(I: MonomialIdeal, a: Sequence[int]) -> bool:
    if len(a) != I.dim:
        raise DimensionMismatch(f"monomial {tuple(a)} has length {len(a)}, ideal has dimension {I.dim}",
                                "contains", I)
    return any(divides(g, a) for g in I.gens)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_dims("sum", I, J)
    return minimalize(I.gens + J.gens)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_dims("product", I, J)
    return minimalize({tuple(p + q for p, q in zip(g, h)) for g in I.gens for h in J.gens})


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_dims("intersect", I, J)
    return minimalize({tuple(max(p, q) for p, q in zip(g, h)) for g in I.gens for h in J.gens})


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """(I : J) = intersection over g in Delta(J) of (I : x^g)."""
    _check_dims("colon", I, J)
    result = None
    for g in J.gens:
        part = minimalize({tuple(max(0, hi - gi) for hi, gi in zip(h, g)) for h in I.gens})
        result = part if result is None else intersect(result, part)
    return result


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise MonomialIdealError("negative ideal power", "power", I)
    if len(I.gens) == 1:
        return MonomialIdeal(I.dim, (tuple(k * e for e in I.gens[0]),))
    result = MonomialIdeal.unit(I.dim)
    base = I
    while k:
        if k & 1:
            result = product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def ord_(I: MonomialIdeal) -> int:
    """Order: largest r with I inside m^r."""
    return min(sum(g) for g in I.gens)


order = ord_


def mu(I: MonomialIdeal) -> int:
    return len(I.gens)


def is_m_primary(I: MonomialIdeal) -> bool:
    """Proper and containing a pure power of every variable."""
    if I.is_unit():
        return False
    return all(I.pure_power(i) is not None for i in range(I.dim))


def require_m_primary(I: MonomialIdeal, op: str):
    if not is_m_primary(I):
        raise NotPrimaryError(f"{I} is not m-primary", op, I)


def monomials_of_degree(d: int, s: int):
    """All exponent vectors of total degree s in d variables."""
    for combo in combinations_with_replacement(range(d), s):
        v = [0] * d
        for i in combo:
            v[i] += 1
        yield tuple(v)


def index(I: MonomialIdeal) -> int:
    """Smallest s with m^s inside I, i.e. one more than the largest degree
    of a monomial outside I.

    For each choice of the first d-1 exponents (below their pure powers) the
    monomials outside I are those whose last exponent is below the least
    last exponent t of a generator dividing it; t is a prefix minimum.
    """
    require_m_primary(I, "index")
    d = I.dim
    least = {}
    for g in I.gens:
        key = g[:-1]
        least[key] = min(least.get(key, g[-1]), g[-1])
    best = 0
    for rest in cartesian(*(range(I.pure_power(k)) for k in range(d - 1))):
        t = least.get(rest)
        for i, e in enumerate(rest):
            if e:
                below = least.get(rest[:i] + (e - 1,) + rest[i + 1:])
                if below is not None and (t is None or below < t):
                    t = below
        least[rest] = t
        if t:
            # x^rest * x_d^(t-1) is the top monomial outside I over this cell
            best = max(best, sum(rest) + t)
    return best


def maximal_ideal(d: int) -> MonomialIdeal:
    return MonomialIdeal.maximal(d)


def m_power(d: int, k: int) -> MonomialIdeal:
    if k == 0:
        return MonomialIdeal.unit(d)
    return MonomialIdeal(d, tuple(sorted(monomials_of_degree(d, k), reverse=True)))


def format_monomial(a: Sequence[int], names) -> str:
    parts = []
    for e, name in zip(a, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
