from .laurent import LaurentPoly
from .ratfunc import RatFunc, parse_ratfunc, render_ratfunc, rf_arith
from .series import (
    DEFAULT_ORDER,
    SeriesWindow,
    as_one_laurent,
    eval_at,
    expand,
    one_laurent_to_ratfunc,
    regular_at_one,
    residue_at_one,
    residue_by_expansions,
    residue_by_partial_fractions,
)

__all__ = [
    "DEFAULT_ORDER",
    "LaurentPoly",
    "RatFunc",
    "SeriesWindow",
    "as_one_laurent",
    "eval_at",
    "expand",
    "one_laurent_to_ratfunc",
    "parse_ratfunc",
    "regular_at_one",
    "render_ratfunc",
    "residue_at_one",
    "residue_by_expansions",
    "residue_by_partial_fractions",
    "rf_arith",
]
