"""Exact Hall-algebra wall-crossing computations for quivers and stacks of vector spaces."""
from .errors import HallError
from .exactalg import LaurentPoly, RatFunc, parse_ratfunc, residue_at_one
from .freewall import FreeElem, HopSpec, coefficient_tables
from .khallvect import epsilon_eval, khall_product_eval
from .multilaurent import MultiLaurent
from .quiver import Quiver, SlopeFunction, kronecker, a2, vect
from .repchar import Character, parse_character, schur_char
from .torus import HallContext, TorusElem, dt_extract, qt_mul

__all__ = [
    "Character",
    "FreeElem",
    "HallContext",
    "HallError",
    "HopSpec",
    "LaurentPoly",
    "MultiLaurent",
    "Quiver",
    "RatFunc",
    "SlopeFunction",
    "TorusElem",
    "a2",
    "coefficient_tables",
    "dt_extract",
    "epsilon_eval",
    "khall_product_eval",
    "kronecker",
    "parse_character",
    "parse_ratfunc",
    "qt_mul",
    "residue_at_one",
    "schur_char",
    "vect",
]
