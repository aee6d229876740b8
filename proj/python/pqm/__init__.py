"""Persistence finite posets, order-complex homology over prime fields, and
the mapping-cylinder reduction with its interleaving bounds."""

from ._core import (  # noqa: F401
    Barcode,
    FinitePoset,
    LedgerEntry,
    MappingCylinder,
    MonotoneMap,
    PersistenceMappingCylinder,
    PersistenceModule,
    PersistencePoint,
    PersistencePoset,
    PersistencePosetMap,
    PqmError,
    ReductionLedger,
    SimplicialComplex,
    SimplicialMap,
    StepCheck,
    VerdictReport,
    __version__,
    acyclicity_measure,
    barcode_module,
    betti_numbers,
    bottleneck_distance,
    boundary_matrices,
    brute_force_interleaving_check,
    cylinder_equivalence_check,
    emit_barcode,
    emit_map,
    emit_module,
    emit_poset_diagram,
    enumerate_persistence_points,
    generate_cone_collapse,
    generate_fibered_map,
    generate_random_filtration,
    induced_homology_map,
    induced_simplicial_map,
    interval_decomposition,
    is_contiguous,
    join,
    make_persistence_point,
    mapping_cylinder,
    min_interleaving_eps,
    order_complex,
    parse_instance,
    parse_instance_file,
    persistence_fiber,
    persistence_mapping_cylinder,
    persistence_module_of,
    point_module,
    principal_persistence_set,
    rank_invariant,
    reducibility_measure,
    reduction_schedule,
    remove_persistence_point,
    render_diagram_svg,
    star_link,
    validate_persistence_poset,
    validate_poset,
    verify_main_bound,
    verify_step_bound,
)
