"""Exact Sprague-Grundy analysis for Wythoff's game and its diagonal-restricted variants.

The package computes exact nim-value tables for several two-pile rule
families, generates the closed-form zero- and one-value position sets that
are known for them, verifies every such closed form against the engine up
to a bound, and sweeps the open invariance conjectures for counterexamples.
"""

from .beatty import isqrt, lower_wythoff, upper_wythoff, verify_complementarity
from .formulas import (
    formula_p_tk,
    formula_p_wk,
    formula_p_wk_prime,
    formula_p_wk_recursive,
    formula_p_wkl,
    formula_p_wythoff,
    formula_s1_tk,
    formula_s1_w1,
    formula_s1_wk_odd,
    formula_s1_wk_shift,
    membership,
)
from .grundy import GrundyTable, GSet, check_grundy_axioms, grundy_table, mex
from .reports import Report
from .rulesets import (
    Move,
    Position,
    RulesetSpec,
    diagonal_moves,
    is_legal,
    move_list,
    moves,
    normalize,
    t_infinity,
    tk,
    wk,
    wk_prime,
    wkl,
    wythoff,
)
from .verify import (
    TableCache,
    check_reference_values,
    closeness_check,
    compare_gsets,
    explore_conjecture,
    run_conjecture_sweep,
    run_theorem_suite,
    s1_coincidence_check,
    verify_theorem,
)

__version__ = "0.1.0"
