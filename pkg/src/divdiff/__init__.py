"""Exact divided-difference operators, polynomial bases, and product rules.

Everything works over the integers with dict-backed sparse polynomials.
The package splits into:

- ``compositions``: weak compositions, dominance and refinement orders,
  the zero-shifting map and its intervals
- ``permutations``: one-line permutations, reduced words, minimal-length
  standardizing words for a composition
- ``polynomials``: sparse integer polynomials
- ``operators``: the eight isobaric divided-difference style operators
  and word application
- ``bases``: key, atom, Schubert, Schur, slide, fundamental atom, and
  quasisymmetric fundamental elements, each by more than one construction
- ``expansions``: greedy change of basis into the unitriangular families
- ``products``: shuffle-word product rules and the signed multiset-partition
  structure constants for fundamental atoms
- ``verify``: an identity-checking suite over bounded composition ranges
- ``cli``: the ``divdiff`` command
"""

from .compositions import (
    Composition,
    atom_interval,
    compositions,
    compositions_up_to,
    csum,
    dominates,
    flat,
    qshift,
    refines,
    set_of,
    sort_desc,
    strong_compositions,
)
from .permutations import (
    Permutation,
    ReducedWord,
    act,
    all_permutations,
    any_reduced_word,
    flat_permutation,
    identity,
    long_element,
    min_word_flat,
    min_word_sort,
    perm_from_word,
    s_swap,
    s_tilde_swap,
    simple,
    sort_permutation,
    word_indices,
)
from .polynomials import Polynomial, from_terms
from .operators import (
    BRAIDED_KINDS,
    OperatorKind,
    apply,
    apply_perm,
    apply_word,
    coerce_kind,
)
from .bases import (
    BasisFamily,
    atom,
    basis_element,
    fatom,
    gessel,
    key,
    schubert,
    schur,
    slide,
)
from .expansions import (
    GREEDY_FAMILIES,
    BasisExpansion,
    expand_atom,
    expand_fatom,
    expand_in_basis,
    expand_key,
    expand_slide,
    gessel_to_fatoms,
    slide_to_fatoms,
)
from .products import (
    AtomMultisetPartition,
    MarkedElement,
    PsiImage,
    ShuffleWord,
    atom_multiset_partitions,
    fatom_product,
    fatom_product_contributions,
    fundamental_shuffle_set,
    j_index,
    natural_position,
    psi_image,
    shuffle_set,
    slide_product,
    slide_times_fatom,
    words_AB,
)
from .verify import CHECK_NAMES, CheckResult, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "atom_interval",
    "compositions",
    "compositions_up_to",
    "csum",
    "dominates",
    "flat",
    "qshift",
    "refines",
    "set_of",
    "sort_desc",
    "strong_compositions",
    "Permutation",
    "ReducedWord",
    "act",
    "all_permutations",
    "any_reduced_word",
    "flat_permutation",
    "identity",
    "long_element",
    "min_word_flat",
    "min_word_sort",
    "perm_from_word",
    "s_swap",
    "s_tilde_swap",
    "simple",
    "sort_permutation",
    "word_indices",
    "Polynomial",
    "from_terms",
    "BRAIDED_KINDS",
    "OperatorKind",
    "apply",
    "apply_perm",
    "apply_word",
    "coerce_kind",
    "BasisFamily",
    "atom",
    "basis_element",
    "fatom",
    "gessel",
    "key",
    "schubert",
    "schur",
    "slide",
    "GREEDY_FAMILIES",
    "BasisExpansion",
    "expand_atom",
    "expand_fatom",
    "expand_in_basis",
    "expand_key",
    "expand_slide",
    "gessel_to_fatoms",
    "slide_to_fatoms",
    "AtomMultisetPartition",
    "MarkedElement",
    "PsiImage",
    "ShuffleWord",
    "atom_multiset_partitions",
    "fatom_product",
    "fatom_product_contributions",
    "fundamental_shuffle_set",
    "j_index",
    "natural_position",
    "psi_image",
    "shuffle_set",
    "slide_product",
    "slide_times_fatom",
    "words_AB",
    "CHECK_NAMES",
    "CheckResult",
    "SuiteReport",
    "run_suite",
    "__version__",
]
