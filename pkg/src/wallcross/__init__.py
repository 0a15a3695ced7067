"""Exact wall-crossing toolkit: cohomology rings, central charges, alcove
walls, graded characters, and truncated mutation of quiver algebras."""

from .exactcore import (
    MPoly,
    QSeries,
    RatFunc,
    dumps_canonical,
    expand,
    factor_multiplicity,
    poly_arith,
)
from .cohomology import (
    CohBasis,
    CohClass,
    FixedPointTable,
    ch_line_bundle,
    ch_tautological,
    geometric_from_ch,
    localization_sum,
    ring_mul,
)
from .ktheory import (
    ExtTable,
    KClass,
    class_matrix,
    cross_wall_b2,
    double_tilt_classes,
    dual_basis,
    euler_form,
    general_crossed_classes,
    gram_transform,
    permutation_equivalent,
)
from .charge import (
    central_charge,
    charge_table,
    crossed_charges,
    dimension_polynomial,
    solve_functionals,
)
from .alcoves import (
    Alcove,
    Hyperplane,
    b2_walls,
    positivity_on_alcove,
    rvsc_check_pair,
    vanishing_order_on_wall,
    walls_from_charges,
)
from .poincare import (
    fake_degree,
    kc_identity_check,
    koszul_closed_form,
    koszul_trivial_sum,
    tau_i_alternating_sum,
    closed_form_tau_i,
    verma_series,
)
from .quiver import (
    ExtUndecidable,
    GradedAlgebra,
    GradedModule,
    MutationError,
    MutationState,
    Quiver,
    build_algebra,
    ext_simples,
    minimal_resolution,
    projective,
    simple,
    tilted_simples,
    truncated_mutation,
    verify_dual_pairing,
)
from .fixtures import fixtures_dir, load_fixture, manifest

__version__ = "0.1.0"
