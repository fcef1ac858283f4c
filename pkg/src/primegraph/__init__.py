"""Prime ideal graphs of finite rings and the edge ideals of their powers."""

from ._accel import USE_NUMBA, backend_name
from .edgeideal import (
    EdgeIdealModel,
    closed_form_generators,
    count_generators,
    edge_ideal,
    edge_ideal_ab,
    primary_decomposition,
    verify_primary_decomposition,
)
from .graph import SplitGraph, abstract_split_graph, build_graph
from .monomial import Monomial, MonomialIdeal, intersect, power, product
from .polymatroid import is_polymatroidal, linear_quotients, regularity_report
from .ring import PrimeIdeal, RingElement, RingSpec, make_ring, prime_ideals, verify_prime

__version__ = "0.1.0"
