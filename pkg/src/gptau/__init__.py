"""Exact workbench for finite-dimensional algebras and their modules:
Gorenstein projectivity, tau-rigidity, relative approximation theory,
and bounded classification, all with certified three-valued verdicts."""

from .algebra import (
    Algebra,
    AlgebraError,
    Quiver,
    Relation,
    bound_quiver_algebra,
    cyclic_nakayama,
    example_loop_flag_algebra,
    linear_a_n,
    loop_algebra,
    t2,
    tensor,
    triangular,
    trivial_algebra,
)
from .field import GF, QQ, FieldSpec
from .module import (
    Module,
    ModuleError,
    ModuleMap,
    direct_sum,
    dual_D,
    hom,
    hom_dim,
    injective_modules,
    is_isomorphic,
    is_projective,
    projective_modules,
    regular_module,
    simple_modules,
)
from .homalg import (
    ext_dim,
    global_dimension,
    inj_dim,
    is_tau_rigid,
    proj_dim,
    syzygy,
    tau,
    tau_inverse,
    transpose_Tr,
)
from .gorenstein import (
    gorenstein_algebra,
    gorenstein_injective,
    gorenstein_projective,
    self_injective,
    semi_gp,
    tachikawa_probe,
    theorem_report,
)
from .approx import (
    bijection_table,
    e_gorenstein_projective,
    e_rigid,
    gamma,
    generator_data,
    minimal_addE_presentation,
)
from .classify import (
    cm_e_free,
    cm_e_finite,
    cm_tau_tilting_free,
    enumerate_indecomposables,
    support_tau_tilting_quiver,
)
from .tristate import NO, UNKNOWN, YES, TriState

__all__ = [
    "Algebra",
    "AlgebraError",
    "FieldSpec",
    "GF",
    "Module",
    "ModuleError",
    "ModuleMap",
    "NO",
    "QQ",
    "Quiver",
    "Relation",
    "TriState",
    "UNKNOWN",
    "YES",
    "bijection_table",
    "bound_quiver_algebra",
    "cm_e_free",
    "cm_e_finite",
    "cm_tau_tilting_free",
    "cyclic_nakayama",
    "direct_sum",
    "dual_D",
    "e_gorenstein_projective",
    "e_rigid",
    "enumerate_indecomposables",
    "example_loop_flag_algebra",
    "ext_dim",
    "gamma",
    "generator_data",
    "global_dimension",
    "gorenstein_algebra",
    "gorenstein_injective",
    "gorenstein_projective",
    "hom",
    "hom_dim",
    "inj_dim",
    "injective_modules",
    "is_isomorphic",
    "is_projective",
    "is_tau_rigid",
    "linear_a_n",
    "loop_algebra",
    "minimal_addE_presentation",
    "proj_dim",
    "projective_modules",
    "regular_module",
    "self_injective",
    "semi_gp",
    "simple_modules",
    "support_tau_tilting_quiver",
    "syzygy",
    "t2",
    "tachikawa_probe",
    "tau",
    "tau_inverse",
    "tensor",
    "theorem_report",
    "transpose_Tr",
    "triangular",
    "trivial_algebra",
]

__version__ = "0.1.0"
