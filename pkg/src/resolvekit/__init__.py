"""Resolving sets and identifying codes for Cartesian graph powers.

The pipeline: a connected graph (or any integer matrix with no two rows
differing by a constant) admits a zero-sum integer witness whose image
has distinct coordinates; the witness and a radix above its spread
drive an explicit code whose rows resolve every finite power, with an
exact digit-peeling decoder.  Everything is integer/rational exact.
"""

from . import analysis, codec, exactmath, graphs, mobius, witness
from .codec import Code, CodePlan, build, decode, decode_many, dump_code, encode, \
    parse_code, plan, row_queries, verify_identities
from .errors import (Graph6ParseError, InconsistentDistanceVector,
                     InfiniteDimensionError, NotConnectedError, ResolveKitError,
                     ResourceCapExceeded, WitnessError)
from .graphs import (DistMatrix, Graph, complete, complete_bipartite,
                     complete_minus_clique, cycle, distance_matrix,
                     enumerate_connected_labeled, generator, iter_graph6,
                     parse_graph6, path, write_graph6)
from .witness import (RBound, WitnessInfo, ap_check, bordered_matrix,
                      feasible_permutation, named_witness, r_bound,
                      search_witness, statement3, validate)

__version__ = "0.1.0"
