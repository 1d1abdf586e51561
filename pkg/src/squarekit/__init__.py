"""Finite squares categories: validation, nerve constructions, Segal checks and K_0."""
from .catcore import (FinCat, FunctorData, Report, build_category, check_functor_equivalence,
                      group_category, poset_category, pseudo_pullback, terminal_category,
                      validate_category)
from .constructions import (check_strict_1segal, comparison_witnesses, double_nerve_diag,
                            forgetful_equivalence, ob_s, s_simplicial, t_plus_simplicial,
                            t_simplicial)
from .double import (CompletionData, FlatDoubleCat, SquaresCat, check_completion_axioms,
                     check_isostable, extension_category, search_completions,
                     validate_squares_category, weak_equivalences)
from .examples import (finset_squares, graph_squares, interval_polytopes,
                       partial_monoid_squares, path_double_category, twisted_arrow_squares)
from .k0 import (IntMatrix, check_k0_additivity, check_sum_existence, k0_class_equal, k0_group,
                 smith_normal_form)
from .simplicial import (PartialMonoid, TruncSCat, TruncSSet, check_2segal_groupoids,
                         check_segal, edgewise_subdivision, find_sset_isomorphism, nerve,
                         nerve_partial_monoid)

__version__ = "0.1.0"

__all__ = [
    "FinCat", "FunctorData", "Report", "build_category", "check_functor_equivalence",
    "group_category", "poset_category", "pseudo_pullback", "terminal_category",
    "validate_category", "check_strict_1segal", "comparison_witnesses", "double_nerve_diag",
    "forgetful_equivalence", "ob_s", "s_simplicial", "t_plus_simplicial", "t_simplicial",
    "CompletionData", "FlatDoubleCat", "SquaresCat", "check_completion_axioms",
    "check_isostable", "extension_category", "search_completions", "validate_squares_category",
    "weak_equivalences", "finset_squares", "graph_squares", "interval_polytopes",
    "partial_monoid_squares", "path_double_category", "twisted_arrow_squares", "IntMatrix",
    "check_k0_additivity", "check_sum_existence", "k0_class_equal", "k0_group",
    "smith_normal_form", "PartialMonoid", "TruncSCat", "TruncSSet", "check_2segal_groupoids",
    "check_segal", "edgewise_subdivision", "find_sset_isomorphism", "nerve",
    "nerve_partial_monoid",
]
