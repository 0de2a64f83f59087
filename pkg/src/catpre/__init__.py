"""Finite categories, CatMon-prekernels and precokernels, and the
(CatEquiv, CatOrd) pretorsion theory on Cat, with brute-force law checks."""

from catpre.core import (
    FiniteCategory,
    Functor,
    RawCategory,
    RawFunctor,
    category,
    compose_functors,
    functor,
    hom_set,
    identity_functor,
    is_antisymmetric,
    is_monoid_class,
    is_symmetric,
    is_trivial_functor,
    trivial_factorization,
    validate_category,
    validate_functor,
)
from catpre.pretorsion import (
    PathWord,
    PresentedCategory,
    compose_words,
    enumerate_hom,
    hom_inhabited,
    is_finite,
    precokernel,
    prekernel,
    quotient_graph,
    reduce,
    short_preexact,
    torsion_part,
    zeta,
)

__version__ = "0.1.0"
