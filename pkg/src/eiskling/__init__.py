"""eiskling: exact local Fourier coefficients of Siegel sections on unitary
groups, their assembly into normalized q-expansion coefficients, and the
p-adic congruence checks that interpolation in families forces.

All arithmetic is exact (rationals, cyclotomic integers, formal prime powers
and Gauss symbols); p-adic results carry explicit precision.
"""

__version__ = "0.1.0"

from .errors import (
    EisklingError,
    UnsupportedEmbeddingError,
    NotRationalError,
    InsufficientPrecisionError,
    PoleError,
    ConductorError,
    UnsupportedBetaError,
    UniquenessError,
    ResourceBoundError,
    NonIntegralExponentError,
    ConfigError,
)
from .exact_arith import (
    CycNumber,
    QuadFieldElem,
    HermitianMatrix,
    sqrt_minus_d,
    quad_to_cyc,
    enumerate_hermitian,
)
from .padic import PadicElem, UnramElem, embed_cyclotomic, congruent_mod
from .characters import (
    DirichletChar,
    SplitPCharPair,
    gauss_sum,
    euler_factor,
    chi_K,
    kronecker_symbol,
)
from .values import ExactValue
from .bernoulli_kl import (
    bernoulli_number,
    gen_bernoulli,
    L_at_nonpositive,
    kl_specialization,
)
from .hecke import WeightTuple, kappa_set, up_eigenvalues, klingen_eigenvalues
from .pullback import (
    SatakeParams,
    klingen_ratio_unramified,
    aux_ell_scalar,
    p_constant_lfun,
    p_constant_klingen,
    interpolation_p_factor,
)
from .qexp_diff import (
    multiplier_klingen,
    multiplier_lfun,
    QExpansion,
    apply_to_expansion,
)
from .siegel_fourier import (
    SiegelDatum,
    additive_char,
    coeff_unramified,
    coeff_aux_ell,
    coeff_p,
    coeff_arch_normalized,
    CoefficientReport,
    assemble_global,
)
from .interpolation import (
    ArithmeticPoint,
    CharFamilySpec,
    specialize,
    coefficient_family,
    check_congruences,
    constant_term_divisibility,
)
