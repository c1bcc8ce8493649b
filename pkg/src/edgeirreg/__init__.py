"""Group edge irregularity strength: constructions, verification and exact search."""

from .abelian import (
    AbelianGroup,
    GroupElement,
    GroupMismatch,
    cyclic,
    direct_sum,
    enumerate_groups,
    parse_element,
    parse_group,
)
from .constructors import (
    Stuck,
    WeightPlan,
    compose_components,
    compose_four_set,
    label_complete_bipartite,
    label_components,
    label_dag_greedy,
    label_forest,
    label_greedy_col,
    label_greedy_injective,
)
from .graphs import (
    Digraph,
    FourSetPartition,
    Graph,
    coloring_number,
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
    topological_order,
    validate_four_set_partition,
)
from .labeling import Labeling, arc_weights, edge_weights, is_edge_irregular, is_injective
from .primes import is_prime, next_prime
from .solvers import (
    bounds_report,
    conjecture_sweep,
    exact_es,
    exact_esg,
    exact_har,
    max_sidon,
    parity_obstruction,
)

__version__ = "0.1.0"
