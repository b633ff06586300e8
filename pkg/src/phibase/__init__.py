"""Exact golden-ratio-base numeration.

Integers are written as sums of non-adjacent powers of ``phi = (1 + sqrt 5)/2``;
everything is computed in the ring ``Z[phi]`` with Python integers, so no
result depends on floating point.
"""
from .codec import (
    BetaSplit,
    IndexSet,
    PhiDigits,
    decode,
    decode_integer,
    encode,
    first_positive_index,
    format_digits,
    index_set,
    parse,
    split,
)
from .errors import (
    InvalidDigits,
    InvalidGaps,
    MalformedDigitString,
    NonCanonical,
    NonTerminating,
    NotAnInteger,
    NotPositive,
    PhiBaseError,
)
from .reconstruct import (
    ParityHint,
    double_from_lucas,
    from_negative,
    from_positive,
    lemma1_check,
    lemma2_sign,
    parity_hint,
    theorem_consistency,
)
from .ring import PHI, PHI_BAR, GoldenInt, cmp, phi_pow, sign
from .sequences import binet_residual, fib, lucas
from .zeckendorf import (
    ZeckendorfRep,
    nf_identity,
    nl_identity,
    phi_sum_check,
    shift_expansion,
    zeck_decode,
    zeck_encode,
)

__version__ = "0.1.0"
