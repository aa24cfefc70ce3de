"""Cyclic equalizability of two words.

Two words of equal length can be turned into cyclic shifts of each other by
inserting the same strings at the same places exactly when they have the
same Parikh vector.  This package decides the question, builds an explicit
insertion, and checks such certificates independently.
"""

from .equalizer import (
    BlockGroupGeometry,
    Construction,
    Cycle,
    CycleWordsPair,
    EqualizationError,
    LengthMismatchError,
    LetterLift,
    ParikhMismatchError,
    Permutation,
    block_group_position,
    build_cycle_words,
    cycle_decompose,
    distinct_letter_lift,
    equalize,
    is_cyclically_equalizable,
    normalize,
    phi,
)
from .insertion import (
    EqualizationCertificate,
    SimultaneousInsertion,
    Verdict,
    apply_insertion,
    find_common_insertion,
    insertion_from_positions,
    verify_certificate,
)
from .oracle import (
    InfeasibleSearchError,
    OracleResult,
    SearchBudget,
    SweepReport,
    brute_force_equalize,
    exhaustive_theorem_sweep,
)
from .words import (
    Alphabet,
    CyclicOffset,
    ParikhVector,
    Word,
    abelian_equivalent,
    cyclic_equivalence_offset,
    cyclic_shift,
    cyclically_equivalent,
    interleave,
    parikh,
    read_with_step,
)

__version__ = "0.1.0"
