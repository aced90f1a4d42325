"""Volumes of compact simple Lie groups under the Cartan-Killing metric.

Three independent routes: a universal semi-infinite integral over the
group's parameter triple, a product of sine factors over positive roots,
and factorial/Barnes-G closed forms on the unitary family. The package
cross-validates all routes to tight numerical tolerance and exposes them
through a library API and the `lievol` command-line tool.
"""

from .errors import (
    DivergenceSetError,
    IntegrandEvaluationError,
    InvariantViolationError,
    LievolError,
    ParameterDomainError,
    QuadratureError,
    UnsupportedGroupError,
)
from .quad import QuadResult, Tolerance, integrate_phi, integrate_semiinfinite
from .rootsys import (
    Family,
    RootSystem,
    SimpleLieType,
    build_root_system,
    exponents,
    rho_pairings_killing,
    sp,
    spin,
    su,
)
from .special import (
    SpecialValue,
    barnesG_integer_oracle,
    euler_reflection_residual,
    log_barnesG_integral,
    log_gamma_malmsten,
    phi_unitary_closed_form,
)
from .vogel import (
    VogelPoint,
    VogelTableRow,
    dim_from_vogel,
    in_divergence_set,
    key_relation_residual,
    sinh_product_excess,
    spin_row_point,
    table_rows,
    vogel_point,
)
from .volume import (
    LOG_VOLUME_BASE,
    CheckItem,
    VolumeReport,
    cross_check,
    default_groups,
    implied_chevalley_covolume,
    isomorphism_checks,
    phi_kp,
    run_check_suite,
    volume_macdonald_sun,
    volume_universal,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Family",
    "SimpleLieType",
    "RootSystem",
    "VogelPoint",
    "VogelTableRow",
    "Tolerance",
    "QuadResult",
    "SpecialValue",
    "VolumeReport",
    "CheckItem",
    "LievolError",
    "UnsupportedGroupError",
    "ParameterDomainError",
    "DivergenceSetError",
    "IntegrandEvaluationError",
    "QuadratureError",
    "InvariantViolationError",
    "build_root_system",
    "exponents",
    "rho_pairings_killing",
    "su",
    "spin",
    "sp",
    "vogel_point",
    "spin_row_point",
    "table_rows",
    "dim_from_vogel",
    "in_divergence_set",
    "sinh_product_excess",
    "key_relation_residual",
    "integrate_semiinfinite",
    "integrate_phi",
    "log_gamma_malmsten",
    "euler_reflection_residual",
    "log_barnesG_integral",
    "barnesG_integer_oracle",
    "phi_unitary_closed_form",
    "LOG_VOLUME_BASE",
    "phi_kp",
    "volume_universal",
    "volume_macdonald_sun",
    "implied_chevalley_covolume",
    "cross_check",
    "isomorphism_checks",
    "default_groups",
    "run_check_suite",
]
