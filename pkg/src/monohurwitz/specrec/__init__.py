"""Topological recursion on the curve x = (z - 1)/z^2, y = -z."""
from __future__ import annotations

from .curve import SpectralCurve, curve_checks, deck_transformation, monotone_curve, omega01
from .expansion import compare_with_hurwitz, expand_omega_at_zero, hurwitz_side, invert_x_series
from .forms import PoleBasisForm, pole_bound
from .loop import check_quadratic_loop, loop_combination
from .recursion import (KERNEL_PREFACTOR, TruncationError, compute_omega, is_stable,
                        recursion_kernel, tr_step, working_order)

__all__ = [
    "SpectralCurve", "curve_checks", "deck_transformation", "monotone_curve", "omega01",
    "compare_with_hurwitz", "expand_omega_at_zero", "hurwitz_side", "invert_x_series",
    "PoleBasisForm", "pole_bound", "check_quadratic_loop", "loop_combination",
    "KERNEL_PREFACTOR", "TruncationError", "compute_omega", "is_stable", "recursion_kernel",
    "tr_step", "working_order",
]
