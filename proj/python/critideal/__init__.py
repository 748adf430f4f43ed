"""Critical ideals, algebraic co-rank and critical groups of simple graphs.

Thin wrapper around the compiled extension; everything public lives there.
"""

from ._critideal import (  # noqa: F401
    BudgetExhausted,
    CapacityError,
    Graph,
    blowup,
    blowup_ideal_trivial,
    canonical_form,
    clique_number,
    complete,
    complete_multipartite,
    contains_induced,
    critical_group_factors,
    critical_ideal_basis,
    critical_ideal_generators,
    critical_ideal_trivial,
    cycle,
    delete_vertex,
    disjoint_union,
    enumerate_connected,
    f1,
    f3_free,
    f3_members,
    find_minimal_forbidden,
    gamma,
    in_family_f1,
    in_family_f2,
    induced_subgraph,
    is_connected,
    is_gamma_critical,
    join,
    laplacian_snf,
    parse_graph6,
    path,
    phi,
    stability_number,
    trivial_graph,
    verify_gamma_equals_f3_free,
    verify_omega_classification,
    write_graph6,
)

__all__ = [name for name in dir() if not name.startswith("_")]
