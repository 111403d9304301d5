"""Finite-automata algebra and complexity-bound verification for
suffix-convex language classes."""

__version__ = "0.1.0"

from .automata import (
    Dfa,
    Nfa,
    accepts,
    apply_word,
    complete_over,
    complexity,
    determinize,
    equivalent,
    minimize,
    occurring_letters,
)
from .classifiers import (
    ClassReport,
    classify,
    is_left_ideal,
    is_suffix_closed,
    is_suffix_convex,
    is_suffix_free,
    suffix_language,
)
from .errors import DocumentError, InputError, LimitError, NotationError
from .measures import (
    SemigroupSummary,
    atom_complexity,
    atom_formula,
    atoms,
    quotient_complexities,
    syntactic_semigroup_size,
    transition_semigroup,
)
from .operations import (
    apply_dialect,
    boolean_restricted,
    boolean_unrestricted,
    complement,
    concat,
    parse_letter_map,
    reverse,
    star,
)
from .serialization import export_dot, read_dfa, write_dfa
from .transformations import (
    Transformation,
    compose_many,
    cycle,
    format_notation,
    parse_notation,
    send_to,
    shift_range,
)
from .verify import ComplexityReport, run_verification
from .witnesses import FAMILIES, expected, make_dialect, make_witness
