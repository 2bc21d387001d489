from ._deltarig import (
    BiPoly,
    DeltaMatroid,
    RibbonGraph,
    factor,
    is_irreducible,
    profile,
    verify_ribbon,
    verify_theorem,
)

__all__ = [
    "BiPoly",
    "DeltaMatroid",
    "RibbonGraph",
    "factor",
    "is_irreducible",
    "profile",
    "verify_ribbon",
    "verify_theorem",
]
