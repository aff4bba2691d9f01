"""Finite detection of free-group words.

How large a finite group is needed before a given nontrivial word in a
free group survives some homomorphism? This package builds words and
laws, enumerates and catalogs small groups, scans catalogs for least
detecting groups, certifies projective witnesses, bounds subgroup
indices through folded subgroup graphs, and benchmarks how the required
group order grows with word length.
"""

from .bench import GrowthRow, LawRow, bench_growth, bench_law_words
from .catalog import (
    Catalog,
    CatalogEntry,
    CatalogFormatError,
    build_catalog,
    enumerate_groups,
    handcoded_extension,
    isomorphic,
    load_catalog,
    save_catalog,
)
from .detect import (
    DetectionResult,
    ProjectiveWitness,
    SearchBudgetExceeded,
    abelian_k,
    detection_order,
    evaluate,
    first_counterexample,
    is_law,
    psl2_witness,
    shortest_law,
)
from .groups import (
    FiniteGroup,
    TransitiveAction,
    coset_action,
    cyclic_subgroup,
    from_cayley_table,
    from_perm_generators,
    is_normal,
    lucchini_ell,
    psl2,
    sl2,
    verify_lucchini,
)
from .laws import LawRecipe, commutator_word, law_word, power_law
from .parser import flatten, parse, word_from_text
from .stallings import SubgroupGraph, buskin_check, divisibility
from .words import (
    Word,
    canonical_cyclic_words,
    commutator,
    conjugate,
    exponent_sums,
    generator,
    invert,
    multiply,
    power,
    random_reduced_word,
    reduce,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "CatalogEntry",
    "CatalogFormatError",
    "DetectionResult",
    "FiniteGroup",
    "GrowthRow",
    "LawRecipe",
    "LawRow",
    "ProjectiveWitness",
    "SearchBudgetExceeded",
    "SubgroupGraph",
    "TransitiveAction",
    "Word",
    "abelian_k",
    "bench_growth",
    "bench_law_words",
    "build_catalog",
    "buskin_check",
    "canonical_cyclic_words",
    "commutator",
    "commutator_word",
    "conjugate",
    "coset_action",
    "cyclic_subgroup",
    "detection_order",
    "divisibility",
    "enumerate_groups",
    "evaluate",
    "exponent_sums",
    "first_counterexample",
    "flatten",
    "from_cayley_table",
    "from_perm_generators",
    "generator",
    "handcoded_extension",
    "invert",
    "is_law",
    "is_normal",
    "isomorphic",
    "law_word",
    "load_catalog",
    "lucchini_ell",
    "multiply",
    "parse",
    "power",
    "power_law",
    "psl2",
    "psl2_witness",
    "random_reduced_word",
    "reduce",
    "render",
    "save_catalog",
    "shortest_law",
    "sl2",
    "verify_lucchini",
    "word_from_text",
]
