"""Finite strict 2-categories, group actions on them, and their centers."""

from ._backend import BACKEND
from .centers import (
    GCrossedCat,
    build_ZG,
    check_center_theorem,
    check_g_crossed_axioms,
    compare_centers,
    epsilon_data,
    trivial_component_center,
)
from .core2 import Fin2Cat, FinCat, FinGroup, ValidationReport, make_fin_group, validate_2category
from .equivariant import enumerate_equivariant, forgetful_Phi
from .errors import TwoCatError
from .formats import Workspace, parse_document, serialize
from .gaction import GroupAction2, validate_action
from .pseudo import MonoidalCat, PseudoFunctor, PseudoNat, relative_center
from .strictify import enumerate_BG, strict_action_on_BG

__all__ = [
    "BACKEND", "Fin2Cat", "FinCat", "FinGroup", "GCrossedCat", "GroupAction2", "MonoidalCat",
    "PseudoFunctor", "PseudoNat", "TwoCatError", "ValidationReport", "Workspace", "build_ZG",
    "check_center_theorem", "check_g_crossed_axioms", "compare_centers", "enumerate_BG",
    "enumerate_equivariant", "epsilon_data", "forgetful_Phi", "make_fin_group", "parse_document",
    "relative_center", "serialize", "strict_action_on_BG", "trivial_component_center",
    "validate_2category", "validate_action",
]
