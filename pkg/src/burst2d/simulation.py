"""Monte-Carlo encode -> inject -> decode runs with reproducible per-trial streams."""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .code import Code2D, encode, from_config, to_config
from .decoder import DecodeOptions, Kind, decode
from .error_model import GlobalError, get_pattern, inject, placements

OUTCOMES = ("clean", "corrected", "miscorrected", "uncorrectable")


@dataclass
class SimReport:
    trials: int
    seed: int
    error_class: str
    placement: str
    clean: int = 0
    corrected: int = 0
    miscorrected: int = 0
    uncorrectable: int = 0
    per_pattern: dict = field(default_factory=dict)

    def add(self, label: str, outcome: str) -> None:
        setattr(self, outcome, getattr(self, outcome) + 1)
        row = self.per_pattern.setdefault(label, dict.fromkeys(OUTCOMES, 0))
        row[outcome] += 1

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"


def _cells(errs, n, m, wrap):
    out = set()
    for e in errs:
        out.update(e.cells(n, m, wrap))
    return out


def _disjoint(errs, n, m, wrap) -> bool:
    return sum(len(e.pattern.support) for e in errs) == len(_cells(errs, n, m, wrap))


def error_configs(error_class: str, n: int, m: int, wrap: bool = True) -> list[tuple[str, list[GlobalError]]]:
    """Every configuration of an error class, in a fixed order, with its label.

    Classes: ``h<w>`` / ``v<w>`` single bursts, ``both`` (disjoint h2 + v2),
    ``multi:<pattern>:<mu>`` (mu non-overlapping bursts of one type).
    """
    if error_class == "both":
        h, v = get_pattern("h2"), get_pattern("v2")
        out = []
        for a in placements(h, n, m, wrap):
            for b in placements(v, n, m, wrap):
                errs = [GlobalError(h, a), GlobalError(v, b)]
                if _disjoint(errs, n, m, wrap):
                    out.append(("h2+v2", errs))
        return out
    if error_class.startswith("multi:"):
        try:
            _, name, mu_s = error_class.split(":")
            mu = int(mu_s)
        except ValueError:
            raise ValueError(f"bad error class {error_class!r}; expected multi:<pattern>:<mu>") from None
        if mu < 1:
            raise ValueError("mu must be positive")
        p = get_pattern(name)
        out = []
        for pos in combinations(placements(p, n, m, wrap), mu):
            errs = [GlobalError(p, q) for q in pos]
            if _disjoint(errs, n, m, wrap):
                out.append((f"{name}x{mu}", errs))
        return out
    p = get_pattern(error_class)
    return [(p.name, [GlobalError(p, q)]) for q in placements(p, n, m, wrap)]


def run_trial(code: Code2D, configs, trial: int, seed: int, wrap: bool, opts: DecodeOptions) -> tuple[str, str]:
    rng = np.random.default_rng([seed, trial])
    bits = rng.integers(0, 2, size=code.k_bits).tolist()
    sent = encode(code, bits)
    label, errs = configs[int(rng.integers(len(configs)))]
    received = inject(sent, errs, wrap=wrap)
    out = decode(received, code, opts)
    if out.kind is Kind.UNCORRECTABLE:
        return label, "uncorrectable"
    if out.grid != sent:
        return label, "miscorrected"
    return label, "clean" if out.kind is Kind.CLEAN else "corrected"


@lru_cache(maxsize=4)
def _worker_state(cfg_json: str, error_class: str, wrap: bool):
    code = from_config(json.loads(cfg_json))
    return code, error_configs(error_class, code.n, code.m, wrap)


def _run_chunk(args):
    cfg_json, error_class, wrap, seed, opts, lo, hi = args
    code, configs = _worker_state(cfg_json, error_class, wrap)
    return [run_trial(code, configs, t, seed, wrap, opts) for t in range(lo, hi)]


def simulate(
    code: Code2D,
    trials: int,
    seed: int,
    error_class: str = "both",
    placement: str = "cyclic",
    options: DecodeOptions | None = None,
    workers: int = 1,
) -> SimReport:
    if placement not in ("cyclic", "bounded"):
        raise ValueError(f"placement must be 'cyclic' or 'bounded', not {placement!r}")
    if trials < 0:
        raise ValueError("trials must be non-negative")
    wrap = placement == "cyclic"
    opts = options or DecodeOptions()
    report = SimReport(trials=trials, seed=seed, error_class=error_class, placement=placement)
    configs = error_configs(error_class, code.n, code.m, wrap)
    if trials and not configs:
        raise ValueError(f"error class {error_class!r} has no placements on a {code.n}x{code.m} grid")
    if trials == 0:
        return report

    if workers <= 1:
        results = [run_trial(code, configs, t, seed, wrap, opts) for t in range(trials)]
    else:
        cfg_json = json.dumps(to_config(code), sort_keys=True)
        step = max(1, -(-trials // (workers * 4)))
        chunks = [
            (cfg_json, error_class, wrap, seed, opts, lo, min(lo + step, trials))
            for lo in range(0, trials, step)
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    for label, outcome in results:
        report.add(label, outcome)
    return report
