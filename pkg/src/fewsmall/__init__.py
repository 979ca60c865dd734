"""Exact solvers for vector bin packing with few small items.

The packing question is lowered onto exact-weight perfect matching in a
multigraph and decided either with a Pfaffian polynomial identity test over
the integers or with a characteristic-2 sieve over GF(2^q).
"""

from .applications import (CoveringGuess, EngineUnsupported, knapsack_max_profit, solve_covering,
                           solve_hitting, solve_knapsack)
from .graph import Edge, WeightedMultigraph, parse_edge_list
from .hardness import CnfFormula, cnf_to_packing_family, parse_dimacs, verify_family
from .matching import (Engine, EngineConfig, IsolationBase, exact_matching_decide,
                       exact_matching_max_cost)
from .model import (CoveringInstance, CoveringPredicate, HittingInstance, InstanceError, KnapsackInstance,
                    PackingInstance, PromiseError, parse_hitting, parse_instance, serialize_instance, validate)
from .reduction import reduce_packing_to_matching
from .solver import binary_search_bins, solve_packing, solve_packing_detailed

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
