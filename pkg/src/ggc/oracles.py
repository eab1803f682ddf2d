"""Brute-force checks: minimum distance by enumeration, exhaustive decoding."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import List, Tuple

from .code import GGCode
from .decode import decode_one

MAX_ENUM_K = 24
DECODE_BUDGET = 10**6


def oracle_min_distance(code: GGCode) -> int:
    """Minimum weight over all 2^k - 1 nonzero codewords (Gray-code walk)."""
    k = code.k
    if k == 0:
        raise ValueError("code has no nonzero codewords")
    if k > MAX_ENUM_K:
        raise ValueError(f"k={k} exceeds the enumeration guard {MAX_ENUM_K}")
    gen = code.generator
    best = code.n + 1
    word = 0
    for i in range(1, 1 << k):
        # Gray code step flips the lowest set bit of i
        word ^= gen[(i & -i).bit_length() - 1]
        wt = word.bit_count()
        if wt < best:
            best = wt
    return best


@dataclass
class ExhaustiveReport:
    tmax: int
    patterns: int = 0
    failures: int = 0
    counterexamples: List[Tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


def oracle_decode_exhaustive(code: GGCode, tmax: int, keep: int = 1000) -> ExhaustiveReport:
    """Decode every error of weight <= tmax against the zero codeword.

    Counterexamples are (error pattern, what happened) pairs; ``keep`` caps
    how many are stored.
    """
    budget = sum(comb(code.n, t) for t in range(tmax + 1))
    if budget > DECODE_BUDGET:
        raise ValueError(f"{budget} patterns exceed the budget of {DECODE_BUDGET}")
    rep = ExhaustiveReport(tmax)
    for t in range(tmax + 1):
        for support in combinations(range(code.n), t):
            e = 0
            for i in support:
                e |= 1 << i
            out = decode_one(e, code)
            rep.patterns += 1
            if not out.ok:
                what = "failure: " + out.reason
            elif out.codeword.rows[0] != 0:
                what = "miscorrection"
            else:
                continue
            rep.failures += 1
            if len(rep.counterexamples) < keep:
                rep.counterexamples.append((e, what))
    return rep
