"""Enumeration budgets shared by the counting methods and the CLI."""

from __future__ import annotations

from dataclasses import dataclass


class BudgetError(RuntimeError):
    """An enumeration would exceed its configured size cap."""


@dataclass(frozen=True)
class Budgets:
    """Default size caps for the exponential enumerations.

    ``max_faces`` bounds the 2**|F| sign-vector loops (alpha and Heawood
    methods), ``max_brute_vertices`` the edge-coloring backtracker, and
    ``max_gau_order`` the 3**n quadratic-form enumeration.
    """

    max_faces: int = 28
    max_brute_vertices: int = 14
    max_gau_order: int = 9


DEFAULT_BUDGETS = Budgets()
