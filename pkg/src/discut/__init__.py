"""Distributed Max-Cut/Max-Dicut approximation toolkit.

Simulates the synchronous LOCAL and CONGEST message-passing models and
provides clustering-based and coloring-based approximation algorithms for
Max-Cut and Max-Dicut, together with exact oracles and an experiment
harness that makes their guarantees checkable at desk scale.
"""

from .clustering import (ClusterSolveReport, OddCycleError, bipartite_maxcut,
                         decomposition_maxcut, decomposition_maxdicut)
from .coloring import distributed_coloring, verify_proper
from .cutfun import (cut_value, dicut_value, local_marginal_add,
                     local_marginal_remove, marginal_add, marginal_remove)
from .decomposition import (CenterAssignment, DecompositionParams,
                            cluster_diameters, distributed_decomposition,
                            exterior_edges, sample_exponential)
from .graph import (Graph, build_graph, connected_components, gen_even_cycle,
                    gen_gnp, gen_random_bipartite, load_edge_list, max_degree,
                    serialize_edge_list)
from .greedy import (degree_split, distributed_greedy_maxcut,
                     distributed_greedy_maxdicut,
                     distributed_randomized_maxdicut, fast_greedy_maxcut,
                     fast_greedy_maxdicut, sequential_greedy_maxdicut)
from .kernels import BACKEND as KERNEL_BACKEND
from .oracles import (OracleResult, brute_force_maxcut, brute_force_maxdicut,
                      random_cut, sequential_greedy_maxcut)
from .simulator import (CONGEST, LOCAL, Blob, CongestViolation,
                        ExecutionMetrics, ModelMode, SimulationTimeout,
                        VertexContext, VertexProgram, message_bits, run)

__version__ = "0.1.0"
