"""
Base points, point bases and the *-factorization for finitely
supported complete monomial ideals.

A base point is addressed by its direction path from the root: the path
(j_1, ..., j_k) is the point reached by blowing up in direction j_1, then
in direction j_2 of the new variables, and so on.  Distinct paths are
distinct points.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Tuple

from .errors import NotCompleteError, NotFinitelySupported, ReconstructionError
from .monomial import (MonomialIdeal, default_vars, index, is_m_primary, maximal_ideal,
                       ord_, product, require_m_primary)
from .newton import integral_closure, is_complete
from .transform import DirectionSequence, cit_by_membership, transform_dir

Path = Tuple[int, ...]

DEFAULT_MAX_DEPTH = 12


@dataclass(frozen=True)
class BasePointTree:
    dim: int
    ideals: Dict[Path, MonomialIdeal]

    def orders(self) -> Dict[Path, int]:
        return {p: ord_(I) for p, I in self.ideals.items()}

    def paths(self) -> List[Path]:
        """Breadth-first, children in direction order."""
        return sorted(self.ideals, key=lambda p: (len(p), p))

    def children(self, path: Path) -> List[Path]:
        return [p for p in self.paths() if len(p) == len(path) + 1 and p[:-1] == path]

    def leaves(self) -> List[Path]:
        return [p for p in self.paths() if not self.children(p)]

    def is_chain(self) -> bool:
        return all(len(self.children(p)) <= 1 for p in self.ideals)


def _require_complete_primary(I, op):
    require_m_primary(I, op)
    if not is_complete(I):
        raise NotCompleteError(f"{I} is not complete", op, I)


def base_point_tree(I: MonomialIdeal, max_depth: int = DEFAULT_MAX_DEPTH) -> BasePointTree:
    _require_complete_primary(I, "basepoints")
    ideals = {(): I}
    queue = deque([()])
    while queue:
        path = queue.popleft()
        J = ideals[path]
        for j in range(I.dim):
            T = transform_dir(J, j)
            if T.is_unit():
                continue
            child = path + (j,)
            if not is_m_primary(T):
                names = default_vars(I.dim)
                raise NotFinitelySupported(
                    f"transform along {','.join(names[k] for k in child)} is {T}, "
                    f"which has height < {I.dim}; "
                    "the ideal has infinitely many base points", "basepoints", I)
            if len(child) > max_depth:
                raise NotFinitelySupported(
                    f"base points continue past depth {max_depth}", "basepoints", I)
            ideals[child] = T
            queue.append(child)
    return BasePointTree(I.dim, ideals)


def point_basis(I: MonomialIdeal, max_depth: int = DEFAULT_MAX_DEPTH) -> Dict[Path, int]:
    return base_point_tree(I, max_depth).orders()


@lru_cache(maxsize=4096)
def _special_p(d: int, dirs: Tuple[int, ...]) -> MonomialIdeal:
    if not dirs:
        return maximal_ideal(d)
    # every stage is complete, so the cheap membership route applies
    return cit_by_membership(_special_p(d, dirs[1:]), dirs[0])


def special_p(seq: DirectionSequence) -> MonomialIdeal:
    """The special *-simple ideal P_{R_0 R_n} of a monomial sequence, built
    by complete inverse transforms starting from the maximal ideal of R_n."""
    return _special_p(seq.dim, seq.dirs)


class IndexOrderPair(NamedTuple):
    index_s: int
    order_r: int


def index_order(I: MonomialIdeal) -> IndexOrderPair:
    require_m_primary(I, "indexorder")
    return IndexOrderPair(index(I), ord_(I))


@dataclass(frozen=True)
class PairNode:
    pair: IndexOrderPair
    # children[0] follows a change of direction, children[1] does not
    children: Tuple["PairNode", ...] = ()


def index_order_tree(depth: int) -> PairNode:
    """Possible (index, order) pairs of special *-simple monomial ideals,
    level n holding the pairs for sequences of length n."""

    def grow(pair, level):
        if level == depth:
            return PairNode(pair)
        s, r = pair
        if level == 0:
            kids = (IndexOrderPair(2, 1),)
        else:
            kids = (IndexOrderPair(s + r, s), IndexOrderPair(s + r, r))
        return PairNode(pair, tuple(grow(k, level + 1) for k in kids))

    return grow(IndexOrderPair(1, 1), 0)


def tree_levels(root: PairNode) -> List[List[IndexOrderPair]]:
    levels, frontier = [], [root]
    while frontier:
        levels.append([n.pair for n in frontier])
        frontier = [c for n in frontier for c in n.children]
    return levels


def pair_branch(seq: DirectionSequence) -> List[bool]:
    """Branch choices (True = change of direction) leading from the root of
    the index/order tree to the pair of special_p(seq)."""
    dirs = seq.dirs
    n = len(dirs)
    return [dirs[i] != dirs[i + 1] for i in range(n - 2, -1, -1)]


def pair_at(root: PairNode, seq: DirectionSequence) -> IndexOrderPair:
    """The tree pair at level len(seq) on the branch chosen by seq."""
    if not seq.dirs:
        return root.pair
    node = root.children[0]
    for change in pair_branch(seq):
        node = node.children[0 if change else 1]
    return node.pair


@dataclass(frozen=True)
class FactorizationResult:
    dim: int
    exponents: Dict[Path, int]
    tree: BasePointTree = field(repr=False)

    def nonzero(self) -> Dict[Path, int]:
        return {p: n for p, n in self.exponents.items() if n}

    def positive(self) -> Dict[Path, int]:
        return {p: n for p, n in self.exponents.items() if n > 0}

    def negative(self) -> Dict[Path, int]:
        return {p: -n for p, n in self.exponents.items() if n < 0}


def star_monomial(d: int, powers: Dict[Path, int]) -> MonomialIdeal:
    """*-product of P_path^k over the given paths."""
    prod = MonomialIdeal.unit(d)
    for path, k in sorted(powers.items()):
        P = special_p(DirectionSequence(d, path))
        for _ in range(k):
            prod = product(prod, P)
    return integral_closure(prod)


def lipman_factor(I: MonomialIdeal, max_depth: int = DEFAULT_MAX_DEPTH,
                  check: bool = True) -> FactorizationResult:
    """Exponents n_beta with (prod_{n<0} P^{-n}) * I = prod_{n>0} P^{n}.

    The point basis of P_beta at a prefix gamma of beta is the order of
    P_{gamma beta}, which is 1 when gamma = beta; so the point-basis system
    is unitriangular and is solved from the deepest nodes upward.  The
    result is then checked by rebuilding both sides as *-products.
    """
    tree = base_point_tree(I, max_depth)
    d = I.dim
    basis = tree.orders()
    paths = tree.paths()
    n = {}
    for gamma in sorted(paths, key=len, reverse=True):
        total = basis[gamma]
        for beta, nb in n.items():
            if nb and len(beta) > len(gamma) and beta[:len(gamma)] == gamma:
                total -= nb * ord_(special_p(DirectionSequence(d, beta[len(gamma):])))
        n[gamma] = total
    result = FactorizationResult(d, {p: n[p] for p in paths}, tree)
    if check:
        left = integral_closure(product(star_monomial(d, result.negative()), I))
        right = star_monomial(d, result.positive())
        if left != right:
            raise ReconstructionError(
                f"factorization {result.nonzero()} does not rebuild the ideal",
                "factor", I)
    return result


def is_special_star_simple(I: MonomialIdeal, max_depth: int = DEFAULT_MAX_DEPTH
                           ) -> Tuple[bool, Optional[Path]]:
    """(True, path) when I = P_{R, path}; (False, None) otherwise."""
    nz = lipman_factor(I, max_depth).nonzero()
    if len(nz) == 1:
        (path, k), = nz.items()
        if k == 1:
            return True, path
    return False, None


def is_coprime_pair(pair: IndexOrderPair) -> bool:
    return gcd(pair.index_s, pair.order_r) == 1
