"""Syndrome decoding of a single received word up to the unique radius.

All decoding runs against the effective Goppa polynomial Ghat (G^2 for a
separable G), which defines the same code but doubles the usable degree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import gf2
from .code import GGCode, LocatorSet, WordMatrix
from .polyring import Poly, _rem, poly_eea_partial


class Status(enum.Enum):
    CORRECTED = "corrected"
    FAILURE = "failure"


@dataclass(frozen=True)
class DecodeOutcome:
    status: Status
    reason: str = ""
    codeword: Optional[WordMatrix] = None
    error: Optional[WordMatrix] = None
    error_support: Tuple[int, ...] = ()
    elp: Optional[Poly] = None
    eeps: Tuple[Poly, ...] = ()

    @property
    def ok(self) -> bool:
        return self.status is Status.CORRECTED


def failure(reason: str, **kw) -> DecodeOutcome:
    return DecodeOutcome(Status.FAILURE, reason, **kw)


def compute_syndrome(rcv: int, code: GGCode) -> Poly:
    """s(x) = sum_i r_i f_i'/f_i mod Ghat for a received row packed as an int."""
    if rcv < 0 or rcv >> code.n:
        raise ValueError(f"received word longer than n={code.n}")
    cols = code.syndrome_columns
    acc = [0] * code.effective_goppa.deg
    for i in gf2.bits(rcv):
        for j, c in enumerate(cols[i]):
            acc[j] ^= c
    return Poly(code.field, acc)


def solve_key_equation(s: Poly, code: GGCode) -> Tuple[Poly, Poly]:
    """(lambda, omega) from Euclid on (Ghat, s), stopped below deg Ghat / 2."""
    if s.is_zero():
        raise ValueError("zero syndrome has no key equation to solve")
    Gh = code.effective_goppa
    dstop = -(-Gh.deg // 2)
    omega, lam = poly_eea_partial(Gh, s, dstop)
    return lam, omega


def locate_errors(lam: Poly, L: LocatorSet) -> List[int]:
    """Indices i with lambda(gamma_i) = 0, i.e. f_i divides lambda."""
    if lam.is_zero():
        raise ValueError("error locator must be nonzero")
    if lam.deg == 0:
        return []
    F = L.field
    out = []
    for i, f in enumerate(L.locators):
        if f.deg <= lam.deg and not _rem(F, lam.coeffs, f.coeffs):
            out.append(i)
    return out


def decode_one(rcv: int, code: GGCode) -> DecodeOutcome:
    """Correct one received row, or report failure.

    The located support is checked against deg lambda and the corrected word
    is re-checked against the parity-check matrix, so a Corrected outcome is
    always a codeword.
    """
    n = code.n
    s = compute_syndrome(rcv, code)
    if s.is_zero():
        return DecodeOutcome(
            Status.CORRECTED,
            codeword=WordMatrix.from_row(rcv, n),
            error=WordMatrix.zeros(1, n),
            elp=Poly.one(code.field),
        )
    lam, omega = solve_key_equation(s, code)
    c = code.field.inv(lam.lead)
    lam, omega = lam.scale(c), omega.scale(c)
    E = locate_errors(lam, code.locators)
    degs = code.locators.degrees
    if sum(degs[i] for i in E) != lam.deg:
        return failure("located roots do not account for deg lambda", elp=lam, eeps=(omega,))
    e = 0
    for i in E:
        e |= 1 << i
    corrected = rcv ^ e
    if not code.is_codeword(corrected):
        return failure("corrected word is not a codeword", elp=lam, eeps=(omega,))
    return DecodeOutcome(
        Status.CORRECTED,
        codeword=WordMatrix.from_row(corrected, n),
        error=WordMatrix.from_row(e, n),
        error_support=tuple(E),
        elp=lam,
        eeps=(omega,),
    )
