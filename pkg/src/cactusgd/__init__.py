"""Growth diagrams, dual equivalence, cactus-group actions and Gaudin spectra."""

from .tableaux import (
    Partition,
    RectangleFrame,
    SkewTableau,
    complement,
    contains,
    syt_count,
)
from .words import lr_coefficient, rsk, rsk_inverse, star
from .taquin import (
    DualEquivClass,
    dual_equivalent,
    evacuation,
    jdt_slide,
    partial_evacuation,
    rectify,
    shuffle,
    xi_ssyt,
    xi_word,
)
from .growth import (
    Cgd,
    Decgd,
    IntervalFunction,
    enumerate_cgds,
    enumerate_decgds,
    generate_cgd,
    reduce_mod_m,
)
from .cactus import CactusWord, act_on_decgd, act_on_syt, act_on_tensor, check_equivariance
from .gaudin import hamiltonian, joint_spectrum, omega, singular_weight_basis

__all__ = [
    "Partition", "RectangleFrame", "SkewTableau", "complement", "contains",
    "syt_count", "lr_coefficient", "rsk", "rsk_inverse", "star",
    "DualEquivClass", "dual_equivalent", "evacuation", "jdt_slide",
    "partial_evacuation", "rectify", "shuffle", "xi_ssyt", "xi_word",
    "Cgd", "Decgd", "IntervalFunction", "enumerate_cgds", "enumerate_decgds",
    "generate_cgd", "reduce_mod_m", "CactusWord", "act_on_decgd", "act_on_syt",
    "act_on_tensor", "check_equivariance", "hamiltonian", "joint_spectrum",
    "omega", "singular_weight_basis",
]
