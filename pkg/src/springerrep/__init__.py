"""Exact combinatorics of the two-row Springer fiber.

Standard dotted noncrossing matchings index the homology basis in each
degree; this package enumerates them, rewrites arbitrary dotted matchings
into the basis, expands them into signed line diagrams, realizes the
symmetric-group action, and certifies in exact arithmetic that the action
is the irreducible Springer representation degree by degree.
"""

from .errors import VerificationError
from .formal import FormalSum
from .matchings import (
    DottedMatching,
    NoncrossingMatching,
    TwoRowTableau,
    catalan,
    enumerate_noncrossing,
    enumerate_standard,
    is_standard,
    kostka_two_row,
    partitions_of,
    phi,
    springer_dimension,
    syt_count,
    theta,
)
from .linediagrams import (
    UndotSet,
    compare_undot_sets,
    echelon_certificate,
    expand,
    insert_arc_consistency,
    left_count,
    permute_diagram,
    undot_sets,
)
from .perms import Permutation, parse_permutation
from .rewriting import (
    RewriteSite,
    apply_type1,
    apply_type2,
    find_sites,
    quotient_project_oracle,
    reduce_to_standard,
)
from .snaction import (
    RepMatrix,
    act_permutation,
    act_simple,
    character,
    chart_diagram_consistency,
    irreducibility_check,
    rep_matrix,
    verify_coxeter,
)
from .specht import (
    Tabloid,
    emit_top_degree_basis,
    graded_decomposition,
    matching_generator,
    polytabloid,
    psi,
    span_rank,
    verify_module_equality,
)

__version__ = "0.1.0"
