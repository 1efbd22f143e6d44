"""Workbench for monodromy factorizations: braid arithmetic, Hurwitz orbits,
hyperelliptic mapping class group words, Lefschetz fibrations and
Zariski-van Kampen presentations."""

from .braid import BraidAction, BraidWord, artin_action, braid_equals, full_twist, permutation
from .contexts import BraidGroup, FreeGroupContext, GroupContext, MCGContext, SymmetricGroup, context_from_name
from .factorization import (
    CuspidalFactorization,
    Factorization,
    compose_conjugated,
    hurwitz_move,
    invariants,
    regenerate,
    simultaneous_conjugate,
)
from .freegroup import FreeWord, GroupPresentation, apply_endomorphism, punctured_sphere_presentation, surface_presentation
from .lefschetz import LefschetzFibration, TwistFactor, fiber_sum, is_symplectic_type, kas_equivalent, validate
from .mcg import ChainCurves, MCGWord, coxeter_element, lift_braid, symplectic_rep, verify_presentation_relators
from .search import EquivalenceVerdict, Move, hurwitz_equivalent, orbit_enumerate, replay
from .vankampen import MonodromyInput, abelianization, count_homs, fingerprint, presentation, tietze_simplify

__version__ = "0.1.0"
