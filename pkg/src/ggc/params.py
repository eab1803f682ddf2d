"""Parameter rows for separable generalized Goppa codes and their key sizes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .code import max_length, public_key_bytes

# (n, m, l, r, printed d_sep, printed |pk| in bytes)
PAPER_TABLE1: Tuple[Tuple[int, int, int, int, int, int], ...] = (
    (3488, 12, 1, 64, 129, 261120),
    (3488, 7, 2, 64, 64, 170240),
    (3488, 7, 2, 129, 129, 291782),
    (6960, 13, 1, 119, 239, 1047319),
    (6960, 7, 2, 119, 119, 637974),
    (6960, 5, 3, 358, 239, 1156788),
    (8192, 13, 1, 128, 257, 1357824),
    (8192, 7, 2, 128, 128, 817152),
    (8192, 2, 8, 832, 208, 1357824),
)


@dataclass(frozen=True)
class ParamRow:
    n: int
    k_lower: int
    m: int
    l: int
    r: int
    d_floor: int
    pk_bytes: int
    feasible: bool = True
    printed_pk: Optional[int] = None

    @property
    def discrepancy(self) -> bool:
        return self.printed_pk is not None and self.printed_pk != self.pk_bytes


def param_row(n: int, m: int, l: int, r: int, printed_pk: Optional[int] = None) -> ParamRow:
    return ParamRow(
        n=n,
        k_lower=n - m * r,
        m=m,
        l=l,
        r=r,
        d_floor=math.floor(Fraction(2 * r + 1, l)),
        pk_bytes=public_key_bytes(n, m, r),
        feasible=n <= max_length(l, 1 << m),
        printed_pk=printed_pk,
    )


def paper_table1() -> List[ParamRow]:
    return [param_row(n, m, l, r, pk) for n, m, l, r, _, pk in PAPER_TABLE1]


def params_table(rows: Sequence[Tuple[int, int, int, int]]) -> List[ParamRow]:
    return [param_row(*row) for row in rows]


CSV_FIELDS = ("n", "k_lower", "m", "l", "r", "d_floor", "pk_bytes", "feasible", "printed_pk", "discrepancy")


def format_table(rows: Sequence[ParamRow]) -> str:
    head = f"{'n':>6} {'k>=':>6} {'m':>3} {'l':>2} {'r':>4} {'d':>4} {'|pk| bytes':>10}"
    lines = [head]
    for p in rows:
        line = f"{p.n:>6} {p.k_lower:>6} {p.m:>3} {p.l:>2} {p.r:>4} {p.d_floor:>4} {p.pk_bytes:>10}"
        if not p.feasible:
            line += "  infeasible: n exceeds the locator supply"
        if p.discrepancy:
            line += f"  DISCREPANCY: printed {p.printed_pk}"
        lines.append(line)
    return "\n".join(lines) + "\n"
