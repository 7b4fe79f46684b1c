"""
Local monomial quadratic transforms.

Blowing up m in the direction of variable j substitutes x_k -> x_j x_k
for every k != j.  A monomial a therefore becomes the monomial with j-th
exponent |a| and other exponents unchanged; dividing by x_j^{ord I}
gives the transform of I.  The complete inverse transform goes the other
way: it is the unique complete ideal, not a *-multiple of m, whose
transform in that direction is the given ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Sequence, Tuple

from .errors import MonomialIdealError, NotCompleteError
from .monomial import (MonomialIdeal, default_vars, minimalize,
                       ord_, require_m_primary)
from .newton import integral_closure, is_complete

Matrix = Tuple[Tuple[int, ...], ...]


def _check_direction(I_or_dim, j, op):
    d = I_or_dim if isinstance(I_or_dim, int) else I_or_dim.dim
    if not 0 <= j < d:
        raise MonomialIdealError(f"direction {j} out of range for dimension {d}", op)


def transform_dir(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """Transform of an m-primary monomial ideal in the j-direction."""
    require_m_primary(I, "transform")
    _check_direction(I, j, "transform")
    r = ord_(I)
    images = []
    for a in I.gens:
        b = list(a)
        b[j] = sum(a) - r
        images.append(b)
    return minimalize(images)


def delta(I1: MonomialIdeal, j: int) -> int:
    """max over Delta(I1) of (sum of the non-j exponents) - (j-th exponent)."""
    require_m_primary(I1, "delta")
    _check_direction(I1, j, "delta")
    return max(sum(a) - 2 * a[j] for a in I1.gens)


def inverse_transform_generators(I1: MonomialIdeal, j: int):
    """Generators x^delta * alpha for alpha in Delta(I1), written in the
    variables of the base ring, followed by the pure powers x_k^delta."""
    dl = delta(I1, j)
    gens = []
    for a in I1.gens:
        b = list(a)
        b[j] = dl + a[j] - (sum(a) - a[j])
        gens.append(tuple(b))
    for k in range(I1.dim):
        if k != j:
            gens.append(tuple(dl if i == k else 0 for i in range(I1.dim)))
    return gens


def cit_by_membership(I1: MonomialIdeal, j: int) -> MonomialIdeal:
    """Complete inverse transform read off by membership.

    A monomial a lies in CIT(I1) iff |a| >= delta and the vector with j-th
    entry |a| - delta (other entries unchanged) lies in I1.  Minimal
    generators have non-j degree <= delta, so for each such pattern of
    non-j exponents only the smallest admissible j-th exponent is kept.
    """
    require_m_primary(I1, "cit")
    _check_direction(I1, j, "cit")
    dl = delta(I1, j)
    d = I1.dim
    others = [k for k in range(d) if k != j]
    # least[rest] = smallest t with (t, rest) in I1, as a prefix minimum
    # over the box of non-j exponents (non-j pure powers are <= delta)
    least = {}
    for g in I1.gens:
        key = tuple(g[k] for k in others)
        least[key] = min(least.get(key, g[j]), g[j])
    found = []
    for rest in cartesian(*(range(dl + 1) for _ in others)):
        t = least.get(rest)
        for i, e in enumerate(rest):
            if e:
                below = least.get(rest[:i] + (e - 1,) + rest[i + 1:])
                if below is not None and (t is None or below < t):
                    t = below
        if t is not None:
            least[rest] = t
        r = sum(rest)
        if r > dl:
            continue
        a = [0] * d
        for k, e in zip(others, rest):
            a[k] = e
        # |a| - delta = t once a_j = t + delta - r, and a_j >= 0 covers the rest
        a[j] = max(0, t + dl - r)
        found.append(tuple(a))
    return minimalize(found)


def cit(I1: MonomialIdeal, j: int, verify: bool = False) -> MonomialIdeal:
    """Complete inverse transform of a complete m-primary monomial ideal of
    the j-direction quadratic transform."""
    require_m_primary(I1, "cit")
    _check_direction(I1, j, "cit")
    if not is_complete(I1):
        raise NotCompleteError(f"{I1} is not complete", "cit", I1)
    I = integral_closure(minimalize(inverse_transform_generators(I1, j)))
    if verify:
        other = cit_by_membership(I1, j)
        if other != I:
            raise AssertionError(f"CIT routes disagree: {I} vs {other}")
    return I


# -- direction sequences ----------------------------------------------------


@dataclass(frozen=True)
class DirectionSequence:
    dim: int
    dirs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "dirs", tuple(self.dirs))
        for j in self.dirs:
            if not 0 <= j < self.dim:
                raise MonomialIdealError(f"direction {j} out of range for dimension {self.dim}",
                                         "DirectionSequence")

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "DirectionSequence":
        """Comma separated variable names, root first; '-' or '' is empty."""
        text = text.strip()
        if text in ("", "-", "()"):
            return cls(len(names), ())
        dirs = []
        for tok in text.strip("()").split(","):
            tok = tok.strip()
            if tok not in names:
                raise MonomialIdealError(f"unknown direction {tok!r}", "DirectionSequence")
            dirs.append(list(names).index(tok))
        return cls(len(names), tuple(dirs))

    def __len__(self):
        return len(self.dirs)

    def prefix(self, i: int) -> "DirectionSequence":
        return DirectionSequence(self.dim, self.dirs[:i])

    def suffix(self, i: int) -> "DirectionSequence":
        return DirectionSequence(self.dim, self.dirs[i:])

    def format(self, names=None) -> str:
        names = names or default_vars(self.dim)
        return ",".join(names[j] for j in self.dirs) or "-"


def _step(d, j):
    # row k: the old variable k as a monomial in the new variables
    return tuple(tuple(1 if (c == k or (c == j and k != j)) else 0 for c in range(d))
                 for k in range(d))


def _step_inverse(d, j):
    # row k: the new variable k as a Laurent monomial in the old variables
    return tuple(tuple(1 if c == k else (-1 if c == j and k != j else 0) for c in range(d))
                 for k in range(d))


def _matmul(A, B):
    n = len(B)
    return tuple(tuple(sum(row[t] * B[t][c] for t in range(n)) for c in range(len(B[0])))
                 for row in A)


def identity(d) -> Matrix:
    return tuple(tuple(1 if r == c else 0 for c in range(d)) for r in range(d))


def expansion_matrix(seq: DirectionSequence) -> Matrix:
    """Row i: exponents of the original variable i in the variables of R_n."""
    E = identity(seq.dim)
    for j in seq.dirs:
        E = _matmul(E, _step(seq.dim, j))
    return E


def inverse_expansion_matrix(seq: DirectionSequence) -> Matrix:
    """Row i: the i-th variable of R_n as a Laurent monomial in the original
    variables."""
    F = identity(seq.dim)
    for j in seq.dirs:
        F = _matmul(_step_inverse(seq.dim, j), F)
    return F


def ord_weights(seq: DirectionSequence, i: int) -> Tuple[int, ...]:
    """Weights of ord_{R_i} on the original variables."""
    if not 0 <= i <= len(seq):
        raise MonomialIdealError(f"stage {i} outside 0..{len(seq)}", "ord_weights")
    return tuple(sum(row) for row in expansion_matrix(seq.prefix(i)))


def is_change_of_direction(seq: DirectionSequence) -> bool:
    """True iff m_0 lies in m_n^2, i.e. every original variable has degree
    at least 2 in the variables of R_n."""
    if not seq.dirs:
        raise MonomialIdealError("change of direction needs a nonempty sequence",
                                 "is_change_of_direction")
    return all(sum(row) >= 2 for row in expansion_matrix(seq))


def is_proximate(seq: DirectionSequence) -> bool:
    """True iff R_n lies in the order valuation ring of R_0."""
    if not seq.dirs:
        raise MonomialIdealError("proximity needs a nonempty sequence", "is_proximate")
    return all(sum(row) >= 0 for row in inverse_expansion_matrix(seq))


def exponent_tables(I1: MonomialIdeal, j: int):
    """The two exponent grids for CIT(I1) in direction j, for d = 2 or 3.

    Cell [r][c] holds the j-exponent of the generator whose other exponents
    are (c, r) (the first non-j variable indexes columns, the second rows),
    or None.  The first grid is the image of Delta(I1) under
    x^a y^b z^c -> x^(delta + a - b - c) y^b z^c, the second is Delta(CIT).
    """
    d = I1.dim
    if d not in (2, 3):
        raise MonomialIdealError(f"tables are drawn for dimension 2 or 3, not {d}", "table", I1)
    dl = delta(I1, j)
    others = [k for k in range(d) if k != j]

    def grid(points):
        rows = dl + 1 if d == 3 else 1
        cells = [[None] * (dl + 1) for _ in range(rows)]
        for p in points:
            col = p[others[0]]
            row = p[others[1]] if d == 3 else 0
            cells[row][col] = p[j]
        return cells

    image = []
    for a in I1.gens:
        b = list(a)
        b[j] = dl + a[j] - (sum(a) - a[j])
        image.append(tuple(b))
    return grid(image), grid(cit(I1, j).gens)
