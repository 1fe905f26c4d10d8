"""Phase-exact Majorana string algebra and parity-preserving Cliffords.

Layers, bottom up:

- f2core: bit-packed vectors/matrices over F2, ranks, affine solves,
  the form zoo (pair form, triangular form, basis change).
- strings: signed Majorana/Pauli strings with exact i^k phases.
- dense: small numpy representations used only to cross-check.
- group: Householder reflections, braid conjugation, uniform samplers
  for the binary orthogonal and symplectic groups, decompositions.
- stabilizer: isotropic subspaces, encoder synthesis, sign characters,
  logical operators.
- design: fixed-point profiles, frame potentials, orbit counts, the
  quotient embedding.
"""

from .f2core import (
    AffineSolution,
    BitMatrix,
    BitVec,
    complement,
    dot,
    format_matrix,
    make_form,
    parse_matrix,
    rank_ints,
    rref_ints,
    solve_affine,
    symp_product,
    weight_parity,
)
from .strings import (
    BASES,
    MajoranaString,
    commutes,
    compose,
    format_string,
    jordan_wigner_map,
    parity_operator,
    parse_string,
    quad_lower,
    zeta_coeff,
)
from .group import (
    CliffordWord,
    OrthogonalMap,
    SymplecticMap,
    apply_householder,
    braid_action,
    decompose_orthogonal,
    find_householders,
    format_braid_word,
    group_order,
    parse_braid_word,
    reduce_to_elementary,
    reflection_product,
    sample_orthogonal,
    sample_orthogonal_random,
    sample_symplectic,
    sample_symplectic_random,
    transvection_apply,
    word_orthogonal,
)
from .stabilizer import (
    IsotropicSubspace,
    Stabilizer,
    add_ancilla,
    canonical_isotropic,
    format_stabilizer,
    logical_generators,
    parse_stabilizer,
    stab_clifford,
    stabilizer_element,
    state_parity,
    transform_isotropic,
    transform_stabilizer,
    validate_isotropic,
)
from .design import (
    FixedPointProfile,
    FramePotentialReport,
    fixed_point_profile,
    frame_potential,
    haar_frame_potential,
    orbit_count,
    orbit_decomposition,
    parity_frame_potential,
    quotient_action,
)

__version__ = "0.1.0"
