"""Verdict and stage records shared by all the tests."""

from dataclasses import dataclass

from .residues import Form

# Stage.kind values, in rough pipeline order
EVEN_OR_UNIT = "even-or-unit"
SMALL_PRIME_SCREEN = "small-prime-screen"
MOD8_EULER = "mod8-euler"
SQRT_BASE = "sqrt-base"
MR_ROUND = "mr-round"
RECIPROCITY = "reciprocity"
DIVISOR_FOUND = "divisor-found"


@dataclass(frozen=True)
class Stage:
    """The test step a verdict was decided at."""

    kind: str
    base: int | None = None
    form: Form | None = None
    prime: int | None = None

    @classmethod
    def even_or_unit(cls) -> "Stage":
        return cls(EVEN_OR_UNIT)

    @classmethod
    def small_prime_screen(cls) -> "Stage":
        return cls(SMALL_PRIME_SCREEN)

    @classmethod
    def mod8_euler(cls) -> "Stage":
        return cls(MOD8_EULER, base=2)

    @classmethod
    def sqrt_base(cls, base: int) -> "Stage":
        return cls(SQRT_BASE, base=base)

    @classmethod
    def mr_round(cls, base: int) -> "Stage":
        return cls(MR_ROUND, base=base)

    @classmethod
    def reciprocity(cls, form: Form, prime: int) -> "Stage":
        return cls(RECIPROCITY, form=form, prime=prime)

    @classmethod
    def divisor_found(cls, prime: int) -> "Stage":
        return cls(DIVISOR_FOUND, prime=prime)

    def describe(self) -> str:
        if self.kind == RECIPROCITY:
            return f"reciprocity({self.form},p={self.prime})"
        if self.kind == DIVISOR_FOUND:
            return f"divisor-found({self.prime})"
        if self.base is not None:
            return f"{self.kind}(base={self.base})"
        return self.kind


@dataclass(frozen=True)
class Verdict:
    """Prime/composite call plus the stage that decided it.

    Composite verdicts carry the first failing stage; prime verdicts carry
    the final stage passed. ``witness`` is the failing base, the divisor
    found, or the reciprocity prime, when one exists. For the probabilistic
    schedules (seven-base variant, wide recipes) ``is_prime`` means
    "probable prime under the schedule".
    """

    is_prime: bool
    stage: Stage
    witness: int | None = None

    @property
    def label(self) -> str:
        return "prime" if self.is_prime else "composite"


@dataclass(frozen=True)
class TraceStep:
    """One evaluated stage: what was computed and whether it passed."""

    stage: Stage
    value: object
    passed: bool

    def describe(self) -> str:
        status = "pass" if self.passed else "FAIL"
        if self.value is None:
            return f"{self.stage.describe()}: {status}"
        return f"{self.stage.describe()}: value={self.value} {status}"
