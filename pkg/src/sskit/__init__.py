"""sskit: exact desk-scale computations with finite simplicial sets,
dg-nerves, Dold-Kan machinery, twisted arrow categories and Cech/loop-group
constructions."""

from .simplicial import (
    SimplexRef,
    SimplicialSet,
    SimplicialMap,
    MarkedSimplicialSet,
    BisimplicialSet,
    FiniteCategory,
    standard_simplex,
    boundary,
    horn,
    nerve,
    product,
    join,
    opposite,
    pushout,
    find_isomorphism,
)

__all__ = [
    "SimplexRef",
    "SimplicialSet",
    "SimplicialMap",
    "MarkedSimplicialSet",
    "BisimplicialSet",
    "FiniteCategory",
    "standard_simplex",
    "boundary",
    "horn",
    "nerve",
    "product",
    "join",
    "opposite",
    "pushout",
    "find_isomorphism",
]
