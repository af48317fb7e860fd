"""Exact verification of extended peripheric twists on truncated enveloping algebras."""

from .scalars import GaussianRational, gr, gr_format, gr_parse
from .liealg import (
    LieAlgebraDef,
    EmbeddingRecipe,
    build_abstract,
    build_concrete,
    build_embedding,
    dualize,
    embedding_check,
    jacobi_check,
)
from .uea import EnvelopingAlgebra, UEAElement, normal_order, series_apply
from .hopf import TensorElement, coproduct, counit, flip21, leg_embed
from .twistengine import TwistContext, build_twist, cocycle_check, twisted_coproduct
from .rmat import ClassicalR, classical_r, cybe_check, pushforward, universal_R

__version__ = "0.1.0"

__all__ = [
    "GaussianRational", "gr", "gr_format", "gr_parse",
    "LieAlgebraDef", "EmbeddingRecipe", "build_abstract", "build_concrete",
    "build_embedding", "dualize", "embedding_check", "jacobi_check",
    "EnvelopingAlgebra", "UEAElement", "normal_order", "series_apply",
    "TensorElement", "coproduct", "counit", "flip21", "leg_embed",
    "TwistContext", "build_twist", "cocycle_check", "twisted_coproduct",
    "ClassicalR", "classical_r", "cybe_check", "pushforward", "universal_R",
]
