"""Exact order sequences of iterated line digraphs.

The number of vertices n_k of L^k(G) is computed three independent ways:
by explicit construction, by counting k-walks (j A^k j^T), and through a
regular partition of G, whose quotient matrix B gives n_k = s B^k j^T and,
through its minimal polynomial, a linear recurrence for n_k.
"""
from .digraph import (Digraph, adjacency_matrix, build_digraph, iterate_line_digraph,
                      line_digraph, order_bruteforce, regular_degree)
from .errors import (DimensionMismatch, HorizonTooSmall, IndexOutOfRange, InsufficientPrefix,
                     LineDigraphError, NotRegular, ParameterOutOfRange, ParseError,
                     PartitionMismatch, SizeLimitExceeded, UnsupportedFormat)
from .families import (FamilySpec, build_family, ck4_shape_partition, ck24_partition,
                       ckd4_closed_form, cycle, cyclic_kautz, fixture_quotients, kautz,
                       parse_family_spec, random_dag, random_digraph, squarefree_count,
                       unicyclic, unicyclic_partition)
from .linalg import (MonicPolynomial, characteristic_polynomial, mat_pow, minimal_polynomial,
                     sandwich)
from .partition import (Partition, RegularityCheck, characteristic_matrix, check_commutation,
                        coarsest_regular_partition, is_regular_partition, quotient_matrix,
                        walk_count_check)
from .recurrence import (Behaviour, Classification, LinearRecurrence, classify, extend,
                         recurrence_from_quotient, shortest_recurrence, theorem_recurrence)

__version__ = "0.1.0"
