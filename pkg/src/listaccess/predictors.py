"""Closed-form move-to-front costs for special request sequences.

All formulas hold for move-to-front under the Full Cost Model with the list
size equal to the number of distinct requested elements.  ``verify`` checks
any prediction against the step-by-step simulation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .core_list import (
    Algorithm,
    CostModel,
    RequestSequence,
    as_list,
    as_sequence,
    total_cost,
)
from .errors import (
    ImpossibleBaseCost,
    NonPositiveSize,
    NotBlockExpansion,
    NoType3Exists,
    PositionOutOfRange,
)


class Source(enum.Enum):
    THEOREM_1 = "theorem1"
    THEOREM_2 = "theorem2"
    THEOREM_3 = "theorem3"
    THEOREM_4 = "theorem4"
    THEOREM_5 = "theorem5"
    COROLLARY_1 = "corollary1"
    COROLLARY_2 = "corollary2"


class Kind(enum.Enum):
    EXACT = "exact"
    STRICT_BOUNDS = "strict_bounds"
    INCLUSIVE_BOUNDS = "inclusive_bounds"


class Status(enum.Enum):
    MATCH = "MATCH"
    INSIDE = "INSIDE"
    VIOLATION = "VIOLATION"


@dataclass(frozen=True)
class CostPrediction:
    source: Source
    kind: Kind
    value: Optional[int] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    # set on values derived for the Partial Cost Model, which no formula covers directly
    extension: bool = False

    def __post_init__(self):
        if self.kind is Kind.EXACT:
            if self.value is None:
                raise ValueError("an exact prediction needs a value")
        else:
            if self.lower is None or self.upper is None:
                raise ValueError("a bounds prediction needs lower and upper")
            if self.kind is Kind.STRICT_BOUNDS and not self.lower < self.upper:
                raise ValueError("strict bounds need lower < upper")
            if self.kind is Kind.INCLUSIVE_BOUNDS and not self.lower <= self.upper:
                raise ValueError("inclusive bounds need lower <= upper")

    def admits(self, cost: int) -> bool:
        if self.kind is Kind.EXACT:
            return cost == self.value
        if self.kind is Kind.STRICT_BOUNDS:
            return self.lower < cost < self.upper
        return self.lower <= cost <= self.upper


@dataclass(frozen=True)
class BlockRepetitionSpec:
    """A covering permutation whose i-th request is repeated ``repeats[i]`` times in a row."""

    base_sequence: RequestSequence
    repeats: tuple

    def __post_init__(self):
        base = as_sequence(self.base_sequence)
        object.__setattr__(self, "base_sequence", base)
        object.__setattr__(self, "repeats", tuple(self.repeats))
        if len(set(base)) != len(base):
            raise NotBlockExpansion("base sequence elements must be distinct")
        if len(self.repeats) != len(base):
            raise NotBlockExpansion("one repeat count per base request is required")
        if any(k < 1 for k in self.repeats):
            raise NonPositiveSize("every repeat count must be >= 1")

    def check_covers(self, lst) -> None:
        if set(self.base_sequence) != set(as_list(lst)):
            raise NotBlockExpansion("base sequence must request every list element exactly once")


def _positive(**values):
    for name, v in values.items():
        if v < 1:
            raise NonPositiveSize(f"{name} must be >= 1, got {v}")


def predict_type1_best(n: int) -> CostPrediction:
    """Cost of requesting all n elements in list order."""
    _positive(n=n)
    return CostPrediction(Source.THEOREM_1, Kind.EXACT, n * (n + 1) // 2)


def predict_type2_worst(n: int) -> CostPrediction:
    """Cost of requesting all n elements in reverse list order."""
    _positive(n=n)
    return CostPrediction(Source.THEOREM_2, Kind.EXACT, n * n)


def bounds_type3(n: int) -> CostPrediction:
    """Open interval holding the cost of every other permutation of the list."""
    if n < 3:
        raise NoType3Exists(f"no permutation besides identity and reversal exists for n={n}")
    return CostPrediction(Source.COROLLARY_1, Kind.STRICT_BOUNDS, lower=n * (n + 1) // 2, upper=n * n)


def predict_type4(n: int, p: int, l: Optional[int] = None) -> CostPrediction:
    """Cost of requesting the element at list position ``p`` n times in a row."""
    _positive(n=n)
    if p < 1 or (l is not None and p > l):
        bound = "" if l is None else f"..{l}"
        raise PositionOutOfRange(f"position p={p} outside 1{bound}")
    return CostPrediction(Source.THEOREM_3, Kind.EXACT, n + p - 1)


def bounds_type4(n: int, l: int) -> CostPrediction:
    """Inclusive extremes of ``predict_type4`` over every position of an l-element list.

    The upper end n + l - 1 equals 2n - 1 when n == l.
    """
    _positive(n=n, l=l)
    return CostPrediction(Source.COROLLARY_2, Kind.INCLUSIVE_BOUNDS, lower=n, upper=n + l - 1)


def _check_base_cost(c: int, n: int):
    lo, hi = n * (n + 1) // 2, n * n
    if not lo <= c <= hi:
        raise ImpossibleBaseCost(f"base cost {c} is outside [{lo}, {hi}] for n={n}")


def predict_uniform_blocks(base_cost: int, n: int, k: int) -> CostPrediction:
    _positive(n=n, k=k)
    _check_base_cost(base_cost, n)
    return CostPrediction(Source.THEOREM_4, Kind.EXACT, base_cost + n * (k - 1))


def predict_varying_blocks(base_cost: int, repeats: Sequence[int]) -> CostPrediction:
    n = len(repeats)
    _positive(n=n)
    for k in repeats:
        _positive(k=k)
    _check_base_cost(base_cost, n)
    return CostPrediction(Source.THEOREM_5, Kind.EXACT, base_cost + sum(k - 1 for k in repeats))


def expand_blocks(spec: BlockRepetitionSpec) -> RequestSequence:
    out = []
    for r, k in zip(spec.base_sequence, spec.repeats):
        out.extend([r] * k)
    return RequestSequence(tuple(out))


def decompose_blocks(lst, seq) -> BlockRepetitionSpec:
    """Split ``seq`` into maximal runs; reject anything but a covering block expansion."""
    seq = as_sequence(seq)
    base, repeats = [], []
    for r in seq:
        if base and base[-1] == r:
            repeats[-1] += 1
        else:
            base.append(r)
            repeats.append(1)
    if len(set(base)) != len(base):
        raise NotBlockExpansion("an element reappears after another element: repetitions are interleaved")
    spec = BlockRepetitionSpec(RequestSequence(tuple(base)), tuple(repeats))
    spec.check_covers(lst)
    return spec


def predict_for_blocks(lst, spec: BlockRepetitionSpec) -> CostPrediction:
    """Simulate the base sequence for C, then apply the block formula.

    Uniform repeat counts use the uniform-k formula, anything else the
    varying-k one.
    """
    lst = as_list(lst)
    spec.check_covers(lst)
    c = total_cost(lst, spec.base_sequence)
    ks = spec.repeats
    if len(set(ks)) == 1:
        return predict_uniform_blocks(c, len(ks), ks[0])
    return predict_varying_blocks(c, ks)


def to_partial(prediction: CostPrediction, n: int) -> CostPrediction:
    """Shift a Full Cost Model prediction to the Partial Cost Model (subtract n)."""
    if prediction.kind is Kind.EXACT:
        return CostPrediction(prediction.source, prediction.kind, prediction.value - n, extension=True)
    return CostPrediction(
        prediction.source,
        prediction.kind,
        lower=prediction.lower - n,
        upper=prediction.upper - n,
        extension=True,
    )


@dataclass(frozen=True)
class VerificationReport:
    prediction: CostPrediction
    simulated: int
    status: Status
    l: int
    n: int
    params: str = ""

    @property
    def ok(self) -> bool:
        return self.status is not Status.VIOLATION

    def to_record(self) -> dict:
        p = self.prediction
        return {
            "theorem": p.source.value,
            "l": self.l,
            "n": self.n,
            "params": self.params,
            "predicted": p.value,
            "lower": p.lower,
            "upper": p.upper,
            "simulated": self.simulated,
            "status": self.status.value,
        }


def verify(
    prediction: CostPrediction,
    lst,
    seq,
    params: str = "",
    model: CostModel = CostModel.FULL,
) -> VerificationReport:
    """Simulate move-to-front on ``seq`` and compare with ``prediction``.

    A mismatch is reported with status VIOLATION, never raised.
    """
    lst = as_list(lst)
    seq = as_sequence(seq)
    simulated = total_cost(lst, seq, Algorithm.MTF, model)
    if prediction.admits(simulated):
        status = Status.MATCH if prediction.kind is Kind.EXACT else Status.INSIDE
    else:
        status = Status.VIOLATION
    return VerificationReport(prediction, simulated, status, len(lst), len(seq), params)

