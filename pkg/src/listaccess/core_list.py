"""Self-organizing list state machine and cost accounting.

Positions are 1-indexed everywhere in this module's public surface.  The
list is an immutable ordered tuple of distinct, hashable identifiers; the
serving routines never mutate their inputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from . import _backend
from .errors import (
    DuplicateElement,
    ElementNotInList,
    EmptyInput,
    PositionOutOfRange,
)

ElementId = Hashable


class CostModel(enum.Enum):
    FULL = "full"
    PARTIAL = "partial"

    def access_cost(self, position: int) -> int:
        return position if self is CostModel.FULL else position - 1


class Algorithm(enum.Enum):
    MTF = "mtf"
    TRANSPOSE = "transpose"
    FREQUENCY_COUNT = "fc"

    @property
    def kernel_code(self) -> int:
        return _KERNEL_CODES[self]


_KERNEL_CODES = {Algorithm.MTF: 0, Algorithm.TRANSPOSE: 1, Algorithm.FREQUENCY_COUNT: 2}


@dataclass(frozen=True)
class ListState:
    elements: tuple

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise EmptyInput("a list needs at least one element")
        if len(set(elements)) != len(elements):
            seen = set()
            dup = next(e for e in elements if e in seen or seen.add(e))
            raise DuplicateElement(f"element {dup!r} appears more than once")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __str__(self):
        return " ".join(map(str, self.elements))

    @classmethod
    def of_size(cls, l: int) -> "ListState":
        """The list 1, 2, ..., l."""
        return cls(tuple(range(1, l + 1)))


@dataclass(frozen=True)
class RequestSequence:
    requests: tuple

    def __post_init__(self):
        requests = tuple(self.requests)
        object.__setattr__(self, "requests", requests)
        if not requests:
            raise EmptyInput("a request sequence needs at least one request")

    def __len__(self):
        return len(self.requests)

    def __iter__(self):
        return iter(self.requests)

    def __getitem__(self, i):
        return self.requests[i]

    def __str__(self):
        return " ".join(map(str, self.requests))


@dataclass(frozen=True)
class AccessStep:
    request: ElementId
    position_found: int
    access_cost: int
    paid_exchange_cost: int
    list_after: ListState

    @property
    def cost(self) -> int:
        return self.access_cost + self.paid_exchange_cost


@dataclass(frozen=True)
class AccessTrace:
    steps: tuple
    total_cost: int
    initial_list: ListState
    final_list: ListState
    algorithm: Algorithm = Algorithm.MTF
    cost_model: CostModel = CostModel.FULL

    @property
    def costs(self) -> list[int]:
        return [s.cost for s in self.steps]

    @property
    def positions(self) -> list[int]:
        return [s.position_found for s in self.steps]


def as_list(lst) -> ListState:
    return lst if isinstance(lst, ListState) else ListState(tuple(lst))


def as_sequence(seq) -> RequestSequence:
    return seq if isinstance(seq, RequestSequence) else RequestSequence(tuple(seq))


def find_position(lst: ListState | Sequence, e: ElementId) -> int:
    """Linear search; 1-indexed position of ``e``."""
    for i, x in enumerate(as_list(lst), start=1):
        if x == e:
            return i
    raise ElementNotInList(e)


def apply_algorithm(
    lst: ListState | Sequence,
    position: int,
    algo: Algorithm,
    counters: Optional[Mapping[ElementId, int]] = None,
) -> ListState:
    """Reorganize after an access at ``position`` (1-indexed).

    For frequency count, ``counters`` must already include the access
    being processed.  The accessed element moves forward past every
    element with a strictly smaller count and stops behind the first
    element whose count is at least its own.
    """
    lst = as_list(lst)
    l = len(lst)
    if not 1 <= position <= l:
        raise PositionOutOfRange(f"position {position} outside 1..{l}")
    items = list(lst.elements)
    i = position - 1
    e = items[i]
    if algo is Algorithm.MTF:
        del items[i]
        items.insert(0, e)
    elif algo is Algorithm.TRANSPOSE:
        if i:
            items[i - 1], items[i] = items[i], items[i - 1]
    elif algo is Algorithm.FREQUENCY_COUNT:
        if counters is None:
            raise ValueError("frequency count needs the counter table")
        c = counters[e]
        j = i
        while j > 0 and counters[items[j - 1]] < c:
            j -= 1
        del items[i]
        items.insert(j, e)
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return ListState(tuple(items))


def serve(
    lst: ListState | Sequence,
    seq: RequestSequence | Iterable,
    algo: Algorithm = Algorithm.MTF,
    model: CostModel = CostModel.FULL,
) -> AccessTrace:
    """Serve every request in order and record the full trace."""
    lst = as_list(lst)
    seq = as_sequence(seq)
    members = set(lst.elements)
    for idx, r in enumerate(seq):
        if r not in members:
            raise ElementNotInList(r, idx)

    counters = {e: 0 for e in lst} if algo is Algorithm.FREQUENCY_COUNT else None
    current = lst
    steps = []
    total = 0
    for r in seq:
        pos = find_position(current, r)
        if counters is not None:
            counters[r] += 1
        current = apply_algorithm(current, pos, algo, counters)
        # every implemented rule only moves the accessed element forward
        step = AccessStep(r, pos, model.access_cost(pos), 0, current)
        total += step.cost
        steps.append(step)
    return AccessTrace(tuple(steps), total, lst, current, algo, model)


def _dense(lst: ListState, seq: Iterable) -> tuple[list[int], list[int]]:
    index = {e: i for i, e in enumerate(lst.elements)}
    dense = []
    for idx, r in enumerate(seq):
        try:
            dense.append(index[r])
        except (KeyError, TypeError):
            raise ElementNotInList(r, idx) from None
    if not dense:
        raise EmptyInput("a request sequence needs at least one request")
    return list(range(len(lst))), dense


def access_positions(
    lst: ListState | Sequence,
    seq: RequestSequence | Iterable,
    algo: Algorithm = Algorithm.MTF,
    kernels=None,
) -> tuple[list[int], ListState]:
    """Positions found per request plus the final list, via the kernel."""
    lst = as_list(lst)
    order, dense = _dense(lst, seq)
    k = kernels or _backend.kernels
    positions, final = k.serve_positions(order, dense, algo.kernel_code)
    return positions, ListState(tuple(lst.elements[i] for i in final))


def total_cost(
    lst: ListState | Sequence,
    seq: RequestSequence | Iterable,
    algo: Algorithm = Algorithm.MTF,
    model: CostModel = CostModel.FULL,
    kernels=None,
) -> int:
    """Total cost without building a trace; agrees with ``serve().total_cost``."""
    lst = as_list(lst)
    order, dense = _dense(lst, seq)
    k = kernels or _backend.kernels
    full = k.total_positions(order, dense, algo.kernel_code)
    return full if model is CostModel.FULL else full - len(dense)
