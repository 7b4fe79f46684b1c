"""Exact computations with complete monomial ideals of a regular local ring:
integral closure, Rees valuations, monomial quadratic transforms, complete
inverse transforms, point bases and *-factorization."""

from .errors import (DimensionMismatch, MonomialIdealError, NotCompleteError,
                     NotFinitelySupported, NotPrimaryError, ParseError,
                     ReconstructionError)
from .factor import (BasePointTree, FactorizationResult, IndexOrderPair, PairNode,
                     base_point_tree, index_order, index_order_tree,
                     is_coprime_pair, is_special_star_simple, lipman_factor,
                     pair_at, pair_branch, point_basis, special_p, star_monomial,
                     tree_levels)
from .monomial import (MonomialIdeal, colon, contains, ideal_sum, index,
                       intersect, is_m_primary, m_power, maximal_ideal,
                       minimalize, mu, ord_, power, product)
from .newton import (NewtonPolyhedron, check_closure, in_newton_polyhedron,
                     integral_closure, is_complete, newton_polyhedron,
                     newton_vertices, power_test, rees_valuations,
                     star_power, star_product, weight_value)
from .parser import Workspace, parse_ideal
from .serialize import dumps, ideal_from_dict, ideal_to_dict, loads
from .transform import (DirectionSequence, cit, cit_by_membership, delta,
                        expansion_matrix, exponent_tables,
                        inverse_expansion_matrix, is_change_of_direction,
                        is_proximate, ord_weights, transform_dir)

__version__ = "0.1.0"
