"""Verification sweeps, algorithm benchmarks and table writers used by the CLI.

Randomness: every sweep or benchmark builds one ``random.Random(seed)``
(Mersenne Twister MT19937, CPython seeding of an integer seed) and draws
from it strictly in row order, so a fixed seed always yields the same rows.
"""

from __future__ import annotations

import csv
import io
import json
import random
from statistics import fmean
from typing import Iterable, Iterator, Optional, Sequence

from .core_list import Algorithm, CostModel, ListState, total_cost
from .predictors import (
    BlockRepetitionSpec,
    VerificationReport,
    bounds_type3,
    bounds_type4,
    expand_blocks,
    predict_type1_best,
    predict_type2_worst,
    predict_type4,
    predict_uniform_blocks,
    predict_varying_blocks,
    verify,
)
from .taxonomy import (
    Group,
    Klass,
    SequenceClass,
    TypeTag,
    as_class,
    class_size,
    enumerate_class,
    generate,
)

THEOREMS = ("theorem1", "theorem2", "corollary1", "theorem3", "corollary2", "theorem4", "theorem5")

VERIFY_COLUMNS = ("theorem", "l", "n", "params", "predicted", "lower", "upper", "simulated", "status")
BENCH_COLUMNS = ("class", "algorithm", "cost_model", "trials", "mean", "min", "max", "seed")


def _dashed(items: Iterable) -> str:
    return "-".join(map(str, items))


def _order(l: int) -> ListState:
    return ListState.of_size(l)


def _sweep_theorem1(l_min, l_max, **_):
    for l in range(l_min, l_max + 1):
        lst = _order(l)
        yield verify(predict_type1_best(l), lst, lst.elements)


def _sweep_theorem2(l_min, l_max, **_):
    for l in range(l_min, l_max + 1):
        lst = _order(l)
        yield verify(predict_type2_worst(l), lst, lst.elements[::-1])


def _sweep_corollary1(l_min, l_max, **_):
    type3 = SequenceClass.of(Klass.A, TypeTag.TYPE_III)
    for l in range(max(3, l_min), l_max + 1):
        lst = _order(l)
        bounds = bounds_type3(l)
        for seq in enumerate_class(lst, type3):
            yield verify(bounds, lst, seq, params=f"seq={_dashed(seq)}")


def _sweep_theorem3(l_min, l_max, max_n, **_):
    for l in range(l_min, l_max + 1):
        lst = _order(l)
        for p in range(1, l + 1):
            for n in range(1, max_n + 1):
                yield verify(predict_type4(n, p, l), lst, (p,) * n, params=f"p={p}")


def _sweep_corollary2(l_min, l_max, max_n, **_):
    for l in range(l_min, l_max + 1):
        lst = _order(l)
        for n in range(1, max_n + 1):
            bounds = bounds_type4(n, l)
            for p in range(1, l + 1):
                yield verify(bounds, lst, (p,) * n, params=f"p={p}")


def _random_base(rng, l_min, l_max):
    l = rng.randint(l_min, l_max)
    base = list(range(1, l + 1))
    rng.shuffle(base)
    return _order(l), tuple(base)


def _sweep_theorem4(l_min, l_max, trials, max_k, seed, **_):
    rng = random.Random(seed)
    for _ in range(trials):
        lst, base = _random_base(rng, l_min, l_max)
        k = rng.randint(1, max_k)
        spec = BlockRepetitionSpec(base, (k,) * len(base))
        prediction = predict_uniform_blocks(total_cost(lst, base), len(base), k)
        yield verify(prediction, lst, expand_blocks(spec), params=f"base={_dashed(base)};k={k}")


def _sweep_theorem5(l_min, l_max, trials, max_k, seed, **_):
    rng = random.Random(seed)
    for _ in range(trials):
        lst, base = _random_base(rng, l_min, l_max)
        ks = tuple(rng.randint(1, max_k) for _ in base)
        spec = BlockRepetitionSpec(base, ks)
        prediction = predict_varying_blocks(total_cost(lst, base), ks)
        yield verify(prediction, lst, expand_blocks(spec), params=f"base={_dashed(base)};k={_dashed(ks)}")


_SWEEPS = {
    "theorem1": _sweep_theorem1,
    "theorem2": _sweep_theorem2,
    "corollary1": _sweep_corollary1,
    "theorem3": _sweep_theorem3,
    "corollary2": _sweep_corollary2,
    "theorem4": _sweep_theorem4,
    "theorem5": _sweep_theorem5,
}


def sweep(
    theorem: str,
    l_min: int = 1,
    l_max: int = 8,
    max_n: int = 16,
    trials: int = 100,
    max_k: int = 5,
    seed: int = 0,
) -> Iterator[VerificationReport]:
    """Yield one verification report per instance of ``theorem``'s sweep."""
    if l_min < 1 or l_max < l_min:
        raise ValueError(f"bad list size range [{l_min}, {l_max}]")
    return _SWEEPS[theorem](
        l_min=l_min, l_max=l_max, max_n=max_n, trials=trials, max_k=max_k, seed=seed
    )


def default_bench_classes(l: int) -> list[SequenceClass]:
    classes = [
        SequenceClass.of(Klass.A, TypeTag.TYPE_I),
        SequenceClass.of(Klass.A, TypeTag.TYPE_II),
        SequenceClass.of(Klass.A, TypeTag.TYPE_III),
        SequenceClass.of(Klass.B, TypeTag.TYPE_IV, p=l),
        SequenceClass.of(Klass.B, TypeTag.TYPE_V),
        SequenceClass.of(Klass.C_a_i, TypeTag.TYPE_VI, m=2),
        SequenceClass.of(Klass.C_a_i, TypeTag.TYPE_VII, m=2),
        SequenceClass.of(Klass.C_a_i),
        SequenceClass.of(Klass.C_a_ii),
        SequenceClass.of(Klass.C_b),
        SequenceClass.of(Klass.D),
    ]
    return [c for c in classes if l > 1 and class_size(l, c, _default_length(l, c)) > 0]


def _default_length(l: int, spec: SequenceClass) -> Optional[int]:
    if spec.klass is Klass.D:
        return 2 * l + 1
    if spec.group is Group.GROUP2 and spec.multiplier is None:
        return 2 * l
    return None


def bench(
    l: int,
    classes: Sequence = (),
    algorithms: Sequence[Algorithm] = tuple(Algorithm),
    model: CostModel = CostModel.FULL,
    trials: int = 100,
    seed: int = 0,
    n: Optional[int] = None,
) -> list[dict]:
    """Mean/min/max total cost per (class, algorithm) over a seeded sample.

    Every algorithm is run on the same sampled sequences of a class.
    """
    lst = _order(l)
    rng = random.Random(seed)
    rows = []
    for spec in [as_class(c) for c in classes] or default_bench_classes(l):
        length = n if n is not None else _default_length(l, spec)
        sample = [generate(lst, spec, rng.getrandbits(64), length) for _ in range(trials)]
        for algo in algorithms:
            costs = [total_cost(lst, s, algo, model) for s in sample]
            rows.append(
                {
                    "class": str(spec),
                    "algorithm": algo.value,
                    "cost_model": model.value,
                    "trials": trials,
                    "mean": _number(fmean(costs)),
                    "min": min(costs),
                    "max": max(costs),
                    "seed": seed,
                }
            )
    return rows


def _number(x: float):
    return int(x) if float(x).is_integer() else round(x, 6)


def render(records: Sequence[dict], fmt: str, columns: Sequence[str]) -> str:
    """Serialize records as CSV (header row, comma, no quoting) or a JSON array."""
    if fmt == "json":
        return json.dumps([{c: r.get(c) for c in columns} for r in records], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for r in records:
        writer.writerow({c: "" if r.get(c) is None else r.get(c) for c in columns})
    return buf.getvalue()
