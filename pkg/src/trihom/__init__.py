"""trihom: exact homological algebra for finite-dimensional triangular
matrix algebras over prime fields.

The package decides projectivity, injectivity and their Ding/Gorenstein
refinements for triple modules over T = [[A,0],[U,B]], computes the
associated dimensions, and checks the structural laws relating the
triple level to the assembled algebra against a brute-force oracle.
"""

__version__ = "0.1.0"

from .linfield import FieldPrime, FMatrix, Subspace, kernel, quotient_basis, rank, solve
from .algcore import Algebra, make_algebra, opposite, regular_module, validate
from .modrep import (
    Bimodule,
    FdModule,
    ModuleMorphism,
    check_morphism,
    cokernel_module,
    direct_sum,
    dual_module,
    hom_space,
    image_module,
    is_isomorphic,
    kernel_module,
    tensor_from_bimodule,
    tensor_into_bimodule,
    zero_module,
)
from .homalg import (
    HomDim,
    ext_dim,
    fd,
    fp_id,
    free_cover,
    id_dim,
    is_injective,
    is_projective,
    iwanaga_gorenstein_bound,
    pd,
    syzygy,
)
from .trimat import (
    LeftTriple,
    RightTriple,
    TriMatRing,
    adjunction_check,
    build_ring,
    dual_triple,
    functor_h,
    functor_p,
    functor_q,
    is_injective_triple,
    is_projective_triple,
    make_left_triple,
    make_right_triple,
    module_to_triple,
    phi_tilde,
    phi_tilde_left,
    triple_to_module,
)
from .dinghom import (
    DingReport,
    classify_ding_injective_triple,
    classify_ding_projective_triple,
    did,
    dpd,
    global_estimate,
    is_ding_injective,
    is_ding_projective,
)
