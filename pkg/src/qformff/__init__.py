"""Diagonal quadratic forms over rational function fields GF(q)(x), q odd.

Decision procedures for isotropy, hyperbolicity, Witt index and anisotropic
dimension, sums-of-squares lengths, and the field invariants level and
Pythagoras number, all exact.  Local computations run over the completions
at the places of GF(q)(x); brute-force oracles double-check the fast paths.
"""

from qformff._kernel import BACKEND
from qformff.errors import (
    BudgetExceededError,
    DegenerateFormError,
    EvenCharacteristicError,
    FieldMismatchError,
    FieldTooLargeError,
    InvariantError,
    NotPrimeError,
    ParseError,
    QformError,
    ReducibleModulusError,
    ZeroInputError,
)
from qformff.ffield import (
    ConstField,
    FFElem,
    ResidueField,
    enumerate_field,
    is_square,
    quad_char,
)
from qformff.polyring import (
    Factorization,
    Poly,
    factor,
    is_irreducible,
    poly_gcd,
    poly_is_square,
    squarefree_decomposition,
)
from qformff.funcfield import (
    Place,
    RatFunc,
    is_global_square,
    residue_field,
    support,
    unit_residue,
    valuation,
)
from qformff.localforms import (
    DiagForm,
    ResidueForm,
    SquareClass,
    hasse_invariant,
    hilbert_symbol,
    local_anisotropic_dimension,
    local_is_hyperbolic,
    local_is_hyperbolic_by_invariants,
    local_is_hyperbolic_by_springer,
    local_is_isotropic,
    local_length,
    local_square_class,
    residue_aniso_dim,
    springer_split,
)
from qformff.globalforms import (
    WittData,
    anisotropic_dimension,
    is_hyperbolic,
    is_isotropic,
    length,
    level,
    pythagoras_number,
    relevant_places,
    witt_data,
    witt_index,
)
from qformff.oracle import (
    SearchBudget,
    oracle_isotropy_witness,
    oracle_length_upper,
    oracle_local_isotropy,
    oracle_residue_isotropy,
)
from qformff.parsing import parse_field, parse_form, parse_place, parse_poly, parse_ratfunc

__version__ = "0.1.0"
