"""Edge colorings of bipartite graphs that are interval on one part."""
from .coloring import (EdgeColoring, VerificationReport, chromatic_index_biregular, is_interval_at,
                       is_interval_on, is_persistent_interval_at, is_proper, spectrum, verify)
from .constructions import (block_partition, kmn_w, max_coloring, persistent_interval_coloring,
                            range_coloring, theorem3_coloring, theorem3_y_coloring)
from .errors import (BudgetExceeded, ConstructionFailed, GenerationFailed, InvalidArgument, OutOfRange,
                     ParseError, PreconditionFailed)
from .graph import (BipartiteGraph, BiregularSignature, classify_biregular, complete_bipartite, emit_graph,
                    even_cycle, induced_subgraph, parse_graph, random_biregular)
from .matrix import (BinaryMatrix, census_min_width, epsilon, is_b_regular, is_c_compressed, is_collected,
                     lemma1_bound, lemma_reduce, matrix_from_coloring)
from .solver import SearchBudget, exact_w, feasibility_profile, feasible

__version__ = "0.1.0"
