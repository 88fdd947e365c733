"""Distributive-law factorisations and exact (twisted) cyclic homology
over finite-dimensional vector spaces.

The layers, bottom up: exact linear algebra (linalg, field), structure
constants and axiom checkers (structures), tensoring functors (functors),
distributive laws and factorisations (laws), coalgebras over a law and
the module-category actions (admissible), the bar-resolution duplicial
construction (duplicial), homology (homology), the lifted bimodule
realization with twisted cyclic objects (bimodcat), and the bundle text
format plus CLI (bundle, cli).
"""

from .errors import (
    BundleParseError,
    CentralityError,
    CyclicityError,
    DlfError,
    DomainError,
    InternalError,
    RangeError,
    SingularError,
    ValidationError,
)
from .field import QQ, Field, prime_field
from .linalg import (
    LinMap,
    Space,
    compose,
    flip_map,
    invert,
    kernel_basis,
    quotient,
    rank,
    tensor,
    tensor_space,
    unit_space,
)
from .structures import (
    Algebra,
    AlgebraMorphism,
    Bimodule,
    Coalgebra,
    DoubleModule,
    HopfAlgebra,
    RightModule,
    builtin,
    check_algebra,
    check_algebra_morphism,
    check_bimodule,
    check_coalgebra,
    check_double_module,
    check_hopf,
    check_right_module,
    commutator_quotient,
    cyclic_group_algebra,
    field_algebra,
    group_algebra,
    matrix_algebra,
    regular_bimodule,
    regular_right_module,
    tensor_algebra,
    trivial_right_module,
    truncated_poly,
)
from .functors import (
    TensorComonad,
    TensorFunctor,
    TensorMonad,
    TensorNat,
    comonad_from_coalgebra,
    compose_functors,
    identity_functor,
    monad_from_algebra,
    monad_from_right_tensoring,
    whisker,
)
from .laws import (
    DistLaw,
    Factorisation,
    FactorisationMorphism,
    check_bd_law,
    check_braided,
    check_comonoid,
    check_distlaw,
    check_factorisation_morphism,
    check_two_cycle,
    check_yang_baxter,
    hopf2_laws,
    hopf_laws,
    make_factorisation,
    monad_morphism_factorisation,
    qd_chi,
    qd_factorisation,
    tensor_factorisations,
    tensor_morphisms,
    trivial_factorisation,
    two_cycle_inverse,
)
from .admissible import (
    AdmissibleDatum,
    LeftCoalg,
    RightCoalg,
    RightCoalgMorphism,
    TensorLeftRealization,
    act_datum,
    act_left,
    act_right,
    act_right_morphism,
    check_left_coalg,
    check_right_coalg,
    check_right_coalg_morphism,
)
from .duplicial import (
    DuplicialModule,
    build_duplicial,
    check_cyclic,
    check_duplicial,
    invariant_subobject,
)
from .homology import (
    ChainComplex,
    HomologyTable,
    cyclic_bicomplex,
    hc_table,
    hochschild_complex,
    homology_dims,
)
from .bimodcat import (
    ConnectionDatum,
    EMRealization,
    check_connection,
    check_flat,
    free_bimodule,
    free_module_connection,
    twist_connection,
)
