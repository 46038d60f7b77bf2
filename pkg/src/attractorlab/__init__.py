"""Online string attractors, Lempel-Ziv factorization variants and word families."""
from .attractor import (
    AttractorSet,
    BudgetExceeded,
    ExtensionAssignment,
    GapLemmaApplies,
    VerificationReport,
    assign_extensions,
    complexity_lower_bound,
    equidistant_attractor,
    min_attractor_exact,
    minimal_reduce,
    verify,
)
from .lazy import MarkingTrace, lazy_lz_equivalence, lazy_run, online_cost_curve
from .lz import Factorization, Phrase, VariantFlags, lz_factorize, reconstruct
from .text import (
    Alphabet,
    ComplexityProfile,
    complexity_profile,
    first_occurrence_end,
    is_palindrome,
    occurrences,
)
from .words import (
    WordSpec,
    apply_morphism,
    de_bruijn,
    fibonacci_number,
    fibonacci_word,
    kernel_word,
    lyndon_words,
    palindromic_prefix_positions,
    parse_wordspec,
    sff,
    spoon_feed,
    spoon_feeding_set,
    sturmian_word,
    thue_morse_word,
)

__version__ = "0.1.0"
