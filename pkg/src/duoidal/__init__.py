"""Finite duoidal categories over FinSet and FinVect(F_p).

Validators return :class:`~duoidal.report.Report` objects; constructions
raise :class:`~duoidal.monoidal.StructureError` when their preconditions fail.
"""
from .duoidal import (Bimonoid, DuoidalStructure, cartesian_bimonoid, discrete_duoidal, from_braided,
                      klein_duoidal, validate_bimonoid, validate_duoidal)
from .fincat import Arrow, FinCat, VFunctor, VNatural, validate_category, validate_functor, validate_natural
from .monoidal import Braiding, MonoidalStructure, StructureError, validate_braiding, validate_monoidal
from .report import Report
from .vbase import BudgetExceeded

__version__ = "0.1.0"

__all__ = [
    "Arrow", "Bimonoid", "Braiding", "BudgetExceeded", "DuoidalStructure", "FinCat", "MonoidalStructure",
    "Report", "StructureError", "VFunctor", "VNatural", "cartesian_bimonoid", "discrete_duoidal",
    "from_braided", "klein_duoidal", "validate_bimonoid", "validate_braiding", "validate_category",
    "validate_duoidal", "validate_functor", "validate_monoidal", "validate_natural",
]
