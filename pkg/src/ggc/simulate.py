"""Monte-Carlo burst-error simulation for interleaved decoding."""

from __future__ import annotations

import csv
import io
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Tuple

from .code import GGCode, WordMatrix
from .ileave import InterleavedCode, joint_decode

CSV_FIELDS = ("n", "k", "m", "l", "r", "w", "t", "trials", "successes", "failures", "miscorrections", "seed")


@dataclass(frozen=True)
class SimConfig:
    w: int
    t: int
    trials: int
    seed: int = 0
    fallback_rowwise: bool = True

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.t < 0:
            raise ValueError("t must be >= 0")
        if self.w < 1:
            raise ValueError("w must be >= 1")


@dataclass(frozen=True)
class SimResult:
    code: GGCode
    cfg: SimConfig
    successes: int
    failures: int
    miscorrections: int

    @property
    def success_rate(self) -> float:
        return self.successes / self.cfg.trials

    def row(self) -> dict:
        c, g = self.code, self.cfg
        return dict(
            n=c.n, k=c.k, m=c.m, l=c.l, r=c.r, w=g.w, t=g.t, trials=g.trials,
            successes=self.successes, failures=self.failures,
            miscorrections=self.miscorrections, seed=g.seed,
        )


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent stream per (seed, trial index)."""
    return random.Random((seed << 64) | index)


def burst_error(rng: random.Random, n: int, w: int, t: int) -> WordMatrix:
    """Exactly t nonzero columns, each with a uniform nonzero F_2^w pattern."""
    rows = [0] * w
    for j in rng.sample(range(n), t):
        pattern = rng.randrange(1, 1 << w)
        for i in range(w):
            if (pattern >> i) & 1:
                rows[i] |= 1 << j
    return WordMatrix(n, tuple(rows))


def run_trial(code: GGCode, cfg: SimConfig, index: int) -> str:
    rng = trial_rng(cfg.seed, index)
    C = WordMatrix(code.n, tuple(code.encode(rng.getrandbits(code.k)) if code.k else 0 for _ in range(cfg.w)))
    R = C + burst_error(rng, code.n, cfg.w, cfg.t)
    out = joint_decode(R, InterleavedCode(code, cfg.w), cfg.fallback_rowwise)
    if not out.ok:
        return "failure"
    return "success" if out.codeword == C else "miscorrection"


def _run_range(args: Tuple[GGCode, SimConfig, int, int]) -> Tuple[int, int, int]:
    code, cfg, lo, hi = args
    tally = {"success": 0, "failure": 0, "miscorrection": 0}
    for i in range(lo, hi):
        tally[run_trial(code, cfg, i)] += 1
    return tally["success"], tally["failure"], tally["miscorrection"]


def simulate(code: GGCode, cfg: SimConfig, jobs: int = 1) -> SimResult:
    if cfg.t > code.n:
        raise ValueError(f"t={cfg.t} exceeds n={code.n}")
    _ = code.generator, code.syndrome_columns  # warm caches before pickling
    if jobs <= 1:
        parts = [_run_range((code, cfg, 0, cfg.trials))]
    else:
        step = -(-cfg.trials // (4 * jobs))
        chunks = [(code, cfg, lo, min(lo + step, cfg.trials)) for lo in range(0, cfg.trials, step)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_run_range, chunks))
    s, f, mc = (sum(p[i] for p in parts) for i in range(3))
    return SimResult(code, cfg, s, f, mc)


def results_csv(results: Sequence[SimResult]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for res in results:
        writer.writerow(res.row())
    return buf.getvalue()
