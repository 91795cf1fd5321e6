"""Probabilistic recipes for 256-bit and 2048-bit candidates.

Each recipe is a strong-round base schedule followed by quadratic-
reciprocity checks over one or more residue-class forms, evaluated on
arbitrary-precision integers. Neither recipe is certified exact at its
target width; verdicts are "probable prime" at best, and the recipe
definitions carry a revision number so they can be amended if a
counterexample ever turns up, without ambiguity about which revision a
recorded result used.
"""

from dataclasses import dataclass

from .detprime64 import _reciprocity_stages, _StepLog
from .residues import (
    ABORT,
    DEFAULT_SEARCH_CAP,
    FORM_4K1,
    FORM_4K3,
    FORM_8K1,
    FORM_8K3,
    FORM_8K5,
    FORM_8K7,
    Form,
    is_small_prime,
)
from .sprp import BaseSpec, Literal, SqrtDerived, decompose, resolve_base, sprp_round
from .verdicts import Stage, TraceStep, Verdict


@dataclass(frozen=True)
class Recipe:
    name: str
    revision: int
    mr_bases: tuple[BaseSpec, ...]
    reciprocity_forms: tuple[Form, ...]


RECIPE_256 = Recipe(
    name="recipe256",
    revision=1,
    # 2 plus isqrt(n//i) + j for i in {1, 2, 3}, j in {-1, 0, +1}
    mr_bases=(Literal(2),)
    + tuple(SqrtDerived(i, j) for i in (1, 2, 3) for j in (-1, 0, 1)),
    reciprocity_forms=(FORM_4K1, FORM_4K3),
)

RECIPE_2048 = Recipe(
    name="recipe2048",
    revision=1,
    # 2 plus isqrt(n//i) + j for i in {1, 2, 3, 5, 7}, j in {-2..+2}: 26 bases
    mr_bases=(Literal(2),)
    + tuple(SqrtDerived(i, j) for i in (1, 2, 3, 5, 7) for j in (-2, -1, 0, 1, 2)),
    reciprocity_forms=(FORM_8K1, FORM_8K3, FORM_8K5, FORM_8K7),
)


def run_recipe(
    n: int,
    recipe: Recipe,
    cap: int = DEFAULT_SEARCH_CAP,
    trace: list[TraceStep] | None = None,
) -> Verdict:
    """Apply a recipe to any-width n >= 0; returns probable-prime/composite.

    The base isqrt(n) is in every recipe, which structurally rejects
    perfect squares before the form searches (where a square could never
    find a -1 symbol).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    v = _screen_small(n)
    if v is not None:
        return v
    d = decompose(n)
    log = _StepLog(trace, keep_going=False)
    for spec in recipe.mr_bases:
        base = resolve_base(spec, n)
        if base <= 0 or base % n == 0:
            continue  # unusable resolution (only happens for tiny n)
        ok = sprp_round(n, base % n, d)
        if not log.step(Stage.mr_round(base), None, ok, witness=base):
            return log.finish()
    short = _reciprocity_stages(n, recipe.reciprocity_forms, cap, ABORT, log)
    if short is not None:
        return short
    return log.finish()


def recipe256(n: int, cap: int = DEFAULT_SEARCH_CAP, trace=None) -> Verdict:
    """10 strong-round bases, then 4k+1 and 4k+3 reciprocity checks.

    Intended for candidates up to ~2^256; wider inputs are accepted."""
    return run_recipe(n, RECIPE_256, cap, trace)


def recipe2048(n: int, cap: int = DEFAULT_SEARCH_CAP, trace=None) -> Verdict:
    """26 strong-round bases, then 8k+1/8k+3/8k+5/8k+7 reciprocity checks.

    Intended for candidates up to ~2^2048; wider inputs are accepted."""
    return run_recipe(n, RECIPE_2048, cap, trace)


def _screen_small(n: int) -> Verdict | None:
    if n < 2:
        return Verdict(False, Stage.even_or_unit())
    if n == 2:
        return Verdict(True, Stage.small_prime_screen(), 2)
    if n % 2 == 0:
        return Verdict(False, Stage.even_or_unit(), 2)
    if n < 9:
        # 3, 5, 7 (no odd composites exist below 9)
        return Verdict(True, Stage.small_prime_screen(), n)
    if n < 100:
        if is_small_prime(n):
            return Verdict(True, Stage.small_prime_screen(), n)
        return None
    return None
