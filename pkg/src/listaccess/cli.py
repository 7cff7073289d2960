"""Command-line front end.

Subcommands: generate, classify, simulate, verify, bench.  Options can also
come from a JSON config file (``--config``) whose keys are the long option
names with dashes or underscores; explicit flags win over file values.

Exit status: 0 on success, 1 when ``verify`` finds a VIOLATION row, 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional

from .core_list import Algorithm, CostModel, ListState, serve
from .experiments import BENCH_COLUMNS, THEOREMS, VERIFY_COLUMNS, bench, render, sweep
from .predictors import Status
from .taxonomy import classify, generate, parse_class

ALGOS = {"mtf": Algorithm.MTF, "transpose": Algorithm.TRANSPOSE, "fc": Algorithm.FREQUENCY_COUNT}

SIMULATE_COLUMNS = (
    "sequence",
    "algorithm",
    "cost_model",
    "step",
    "accessed",
    "position",
    "access_cost",
    "paid_exchange_cost",
    "cost",
    "list_after",
)
CLASSIFY_COLUMNS = ("sequence", "l", "n", "class")


class UsageError(Exception):
    pass


@dataclass
class ExperimentConfig:
    list_size: Optional[int] = None
    list_file: Optional[str] = None
    seq: Optional[str] = None
    seq_file: Optional[str] = None
    klass: list = field(default_factory=list)
    algo: list = field(default_factory=list)
    cost_model: str = "full"
    seed: int = 0
    format: str = "csv"
    out: Optional[str] = None
    length: Optional[int] = None
    count: int = 1
    theorem: str = "all"
    l_min: Optional[int] = None
    l_max: Optional[int] = None
    max_n: int = 16
    max_k: int = 5
    trials: Optional[int] = None

    @property
    def algorithms(self) -> list[Algorithm]:
        return [ALGOS[a] for a in self.algo] or [Algorithm.MTF]

    @property
    def model(self) -> CostModel:
        return CostModel(self.cost_model)

    def sequence_sources(self) -> list[str]:
        return [name for name in ("seq", "seq_file", "klass") if getattr(self, name)]


def read_sequences(text: str) -> list[tuple[int, ...]]:
    """Parse the sequence file format: ``#`` comments, one sequence per line."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(tuple(int(tok) for tok in line.replace(",", " ").split()))
        except ValueError:
            raise UsageError(f"non-integer element id in line {line!r}") from None
    return out


def format_sequence(seq) -> str:
    return " ".join(map(str, seq))


def _initial_list(cfg: ExperimentConfig) -> ListState:
    if cfg.list_file:
        rows = read_sequences(Path(cfg.list_file).read_text())
        if not rows:
            raise UsageError(f"list file {cfg.list_file} holds no elements")
        return ListState(rows[0])
    if cfg.list_size is None:
        raise UsageError("one of --list-size or --list-file is required")
    if cfg.list_size < 1:
        raise UsageError("--list-size must be >= 1")
    return ListState.of_size(cfg.list_size)


def _sequences(cfg: ExperimentConfig, lst: ListState, allow_class: bool):
    sources = cfg.sequence_sources()
    if not allow_class and "klass" in sources:
        raise UsageError("--class is not a sequence source for this command")
    if len(sources) != 1:
        raise UsageError("give exactly one of --seq, --seq-file" + (", --class" if allow_class else ""))
    if cfg.seq:
        return read_sequences(cfg.seq)
    if cfg.seq_file:
        return read_sequences(Path(cfg.seq_file).read_text())
    if len(cfg.klass) != 1:
        raise UsageError("exactly one --class is needed here")
    rng = random.Random(cfg.seed)
    spec = parse_class(cfg.klass[0])
    return [generate(lst, spec, rng.getrandbits(64), cfg.length).requests for _ in range(cfg.count)]


def _emit(cfg: ExperimentConfig, text: str):
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(cfg: ExperimentConfig) -> int:
    lst = _initial_list(cfg)
    if len(cfg.klass) != 1:
        raise UsageError("generate needs exactly one --class")
    spec = parse_class(cfg.klass[0])
    rng = random.Random(cfg.seed)
    seqs = [generate(lst, spec, rng.getrandbits(64), cfg.length) for _ in range(cfg.count)]
    lines = [f"# class={spec} seed={cfg.seed} l={len(lst)} n={len(seqs[0]) if seqs else 0}"]
    lines += [format_sequence(s) for s in seqs]
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def cmd_classify(cfg: ExperimentConfig) -> int:
    lst = _initial_list(cfg)
    rows = []
    for i, seq in enumerate(_sequences(cfg, lst, allow_class=False)):
        label = classify(lst, seq)
        rows.append({"sequence": i, "l": len(lst), "n": len(seq), "class": str(label)})
    _emit(cfg, render(rows, cfg.format, CLASSIFY_COLUMNS))
    return 0


def cmd_simulate(cfg: ExperimentConfig) -> int:
    lst = _initial_list(cfg)
    model = cfg.model
    rows = []
    for i, seq in enumerate(_sequences(cfg, lst, allow_class=True)):
        for algo in cfg.algorithms:
            trace = serve(lst, seq, algo, model)
            common = {"sequence": i, "algorithm": algo.value, "cost_model": model.value}
            for step_no, step in enumerate(trace.steps, start=1):
                rows.append(
                    {
                        **common,
                        "step": step_no,
                        "accessed": step.request,
                        "position": step.position_found,
                        "access_cost": step.access_cost,
                        "paid_exchange_cost": step.paid_exchange_cost,
                        "cost": step.cost,
                        "list_after": str(step.list_after),
                    }
                )
            rows.append(
                {
                    **common,
                    "step": "total",
                    "access_cost": sum(s.access_cost for s in trace.steps),
                    "paid_exchange_cost": sum(s.paid_exchange_cost for s in trace.steps),
                    "cost": trace.total_cost,
                    "list_after": str(trace.final_list),
                }
            )
    _emit(cfg, render(rows, cfg.format, SIMULATE_COLUMNS))
    return 0


def _list_range(cfg: ExperimentConfig) -> tuple[int, int]:
    lo = cfg.l_min if cfg.l_min is not None else cfg.list_size or 1
    hi = cfg.l_max if cfg.l_max is not None else cfg.list_size or 8
    return lo, hi


def cmd_verify(cfg: ExperimentConfig) -> int:
    theorems = THEOREMS if cfg.theorem == "all" else (cfg.theorem,)
    l_min, l_max = _list_range(cfg)
    trials = cfg.trials if cfg.trials is not None else 100
    reports = []
    for name in theorems:
        reports.extend(
            sweep(name, l_min, l_max, max_n=cfg.max_n, trials=trials, max_k=cfg.max_k, seed=cfg.seed)
        )
    _emit(cfg, render([r.to_record() for r in reports], cfg.format, VERIFY_COLUMNS))
    return 1 if any(r.status is Status.VIOLATION for r in reports) else 0


def cmd_bench(cfg: ExperimentConfig) -> int:
    lst = _initial_list(cfg)
    trials = cfg.trials if cfg.trials is not None else 100
    rows = bench(
        len(lst),
        cfg.klass,
        cfg.algorithms if cfg.algo else list(Algorithm),
        cfg.model,
        trials,
        cfg.seed,
        cfg.length,
    )
    _emit(cfg, render(rows, cfg.format, BENCH_COLUMNS))
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "classify": cmd_classify,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with option values")
    common.add_argument("--list-size", type=int)
    common.add_argument("--list-file")
    common.add_argument("--seq", help='explicit sequence, e.g. "3 1 2"')
    common.add_argument("--seq-file")
    common.add_argument("--class", dest="klass", action="append", help="taxonomy class string")
    common.add_argument("--algo", action="append", choices=sorted(ALGOS))
    common.add_argument("--cost-model", choices=["full", "partial"])
    common.add_argument("--seed", type=int)
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out")
    common.add_argument("-n", "--length", type=int, help="request sequence length")
    common.add_argument("--count", type=int, help="number of sequences to generate")
    common.add_argument("--trials", type=int)

    parser = argparse.ArgumentParser(prog="listaccess", description="Self-organizing list experiments.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("generate", "classify", "simulate", "bench"):
        sub.add_parser(name, parents=[common])
    v = sub.add_parser("verify", parents=[common])
    v.add_argument("--theorem", choices=["all", *THEOREMS])
    v.add_argument("--l-min", type=int)
    v.add_argument("--l-max", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--max-k", type=int)
    return parser


def make_config(args: argparse.Namespace) -> ExperimentConfig:
    values = {}
    if args.config:
        raw = json.loads(Path(args.config).read_text())
        if not isinstance(raw, dict):
            raise UsageError("config file must hold a JSON object")
        for key, value in raw.items():
            key = key.replace("-", "_")
            key = "klass" if key == "class" else key
            if key in ("klass", "algo") and isinstance(value, str):
                value = [value]
            values[key] = value
    for f in fields(ExperimentConfig):
        flag = getattr(args, f.name, None)
        if flag is not None:
            values[f.name] = flag
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = sorted(set(values) - known)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(unknown)}")
    return ExperimentConfig(**values)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        return COMMANDS[args.command](cfg)
    except (ValueError, UsageError, OSError) as exc:
        print(f"listaccess {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
