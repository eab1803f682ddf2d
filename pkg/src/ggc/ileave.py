"""Joint decoding of w-interleaved generalized Goppa codes.

A burst error hits the same columns in all w rows, so every row shares one
error locator.  The locator is found as the lowest-degree monic solution of
a linear system built from all w syndromes, which reaches past the unique
decoding radius when the rows carry independent error patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .code import GGCode, WordMatrix
from .decode import DecodeOutcome, Status, compute_syndrome, decode_one, failure, locate_errors
from .galois import FieldCtx
from .polyring import Poly


class DecodingFailure(Exception):
    pass


@dataclass(frozen=True)
class InterleavedCode:
    base: GGCode
    w: int

    def __post_init__(self):
        if self.w < 1:
            raise ValueError("interleaving order must be >= 1")

    def is_codeword(self, R: WordMatrix) -> bool:
        return all(self.base.is_codeword(row) for row in R.rows)


@dataclass(frozen=True)
class SyndromeSet:
    polys: Tuple[Poly, ...]
    against: Poly

    def all_zero(self) -> bool:
        return all(s.is_zero() for s in self.polys)


# -- radii --

def t_sep(r: int, l: int) -> int:
    return r // l


def t_max(r: int, l: int, w: int) -> int:
    return (2 * r * w) // ((w + 1) * l)


def t_even_max(r: int, l: int, w: int) -> int:
    return ((2 * r + 1) * w) // ((w + 1) * l)


def radius_unique(code: GGCode) -> int:
    """floor(deg Ghat / 2l); equals floor(r/l) for a separable G."""
    return code.effective_goppa.deg // (2 * code.l)


def radius_joint(code: GGCode, w: int) -> int:
    D = code.effective_goppa.deg
    return (w * D) // ((w + 1) * code.l)


def radius_joint_even(code: GGCode, w: int) -> int:
    if not code.all_even:
        raise ValueError("even-degree radius needs every locator of even degree")
    D = code.effective_goppa.deg
    return (w * (D + 1)) // ((w + 1) * code.l)


# -- syndromes and the linear key equation --

def joint_syndromes(R: WordMatrix, ic: InterleavedCode) -> SyndromeSet:
    if R.w != ic.w or R.n != ic.base.n:
        raise ValueError(f"expected a {ic.w}x{ic.base.n} matrix, got {R.w}x{R.n}")
    return SyndromeSet(
        tuple(compute_syndrome(row, ic.base) for row in R.rows),
        ic.base.effective_goppa,
    )


def _shifted_syndromes(s: Poly, Gh: Poly, count: int) -> List[List[int]]:
    """[x^j * s mod Ghat for j < count], each padded to deg Ghat coefficients."""
    F = s.field
    D = Gh.deg
    mul = F.mul
    g = Gh.coeffs
    inv_lead = F.inv(g[-1])
    cur = list(s.coeffs) + [0] * (D - len(s.coeffs))
    out = [cur]
    for _ in range(count - 1):
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            c = mul(top, inv_lead)
            for k in range(D):
                if g[k]:
                    nxt[k] ^= mul(c, g[k])
        out.append(nxt)
        cur = nxt
    return out


def build_joint_system(
    shifted: Sequence[List[List[int]]], D: int, tau: int, even: bool = False
) -> List[List[int]]:
    """Augmented rows [a_0 .. a_{tau-1} | b] for a monic lambda of degree tau.

    Row (i, p) states that coefficient p of lambda * s^(i) mod Ghat vanishes,
    for p in [tau, D) (or [tau - 1, D) when all locators have even degree).
    """
    lo = tau - 1 if even else tau
    rows = []
    for sh in shifted:
        for p in range(lo, D):
            rows.append([sh[j][p] for j in range(tau + 1)])
    return rows


def _solve_unique(F: FieldCtx, rows: List[List[int]], nvars: int) -> Tuple[str, Optional[List[int]]]:
    """Gaussian elimination on augmented rows; last column is the right-hand side.

    Returns ("inconsistent", None), ("multiple", None) or ("unique", solution).
    """
    mul, inv = F.mul, F.inv
    work = [r[:] for r in rows]
    pivots = []
    top = 0
    for col in range(nvars):
        piv = next((i for i in range(top, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        prow = work[top]
        c = inv(prow[col])
        if c != 1:
            prow = [mul(c, v) for v in prow]
            work[top] = prow
        for i in range(len(work)):
            if i != top:
                f = work[i][col]
                if f:
                    row = work[i]
                    for j in range(col, nvars + 1):
                        if prow[j]:
                            row[j] ^= mul(f, prow[j])
        pivots.append(col)
        top += 1
    if any(work[i][nvars] for i in range(top, len(work))):
        return "inconsistent", None
    if top < nvars:
        return "multiple", None
    sol = [0] * nvars
    for i, col in enumerate(pivots):
        sol[col] = work[i][nvars]
    return "unique", sol


def degree_limit(D: int, w: int, even: bool = False) -> int:
    """Largest candidate degree with at least as many equations as unknowns."""
    return (w * (D + 1)) // (w + 1) if even else (w * D) // (w + 1)


def solve_joint_key_equation(syn: SyndromeSet, ic: InterleavedCode) -> Optional[Poly]:
    """Lowest-degree monic lambda with deg(lambda * s^(i) mod Ghat) < deg lambda.

    Returns None when the first consistent degree has more than one solution
    or no degree up to the limit is consistent.
    """
    if syn.all_zero():
        raise ValueError("all syndromes are zero")
    code = ic.base
    F = code.field
    Gh = syn.against
    D = Gh.deg
    even = code.all_even
    limit = min(degree_limit(D, ic.w, even), D - 1)
    shifted = [_shifted_syndromes(s, Gh, limit + 1) for s in syn.polys]
    for tau in range(1, limit + 1):
        rows = build_joint_system(shifted, D, tau, even)
        verdict, sol = _solve_unique(F, rows, tau)
        if verdict == "inconsistent":
            continue
        if verdict == "multiple":
            return None
        return Poly(F, sol + [1])
    return None


def forney_values(lam: Poly, syn: SyndromeSet, E: Sequence[int], ic: InterleavedCode) -> WordMatrix:
    """Error matrix with e[i][j] = omega_i(gamma_j) / lambda'(gamma_j) for j in E.

    Raises DecodingFailure if a value is not binary, the derivative vanishes,
    or a located column carries no error.
    """
    code = ic.base
    Gh = syn.against
    dlam = lam.derivative()
    omegas = [(lam * s) % Gh for s in syn.polys]
    rows = [0] * ic.w
    for j in E:
        R = code.locators.residue_fields[j]
        d = R.eval_poly(dlam.coeffs)
        if not any(d):
            raise DecodingFailure("Forney derivative vanishes")
        d_inv = R.inv(d)
        hit = False
        for i, om in enumerate(omegas):
            v = R.mul(R.eval_poly(om.coeffs), d_inv)
            if any(v[1:]) or v[0] > 1:
                raise DecodingFailure("non-binary error value")
            if v[0]:
                rows[i] |= 1 << j
                hit = True
        if not hit:
            raise DecodingFailure("spurious locator")
    return WordMatrix(code.n, tuple(rows))


def _rowwise(R: WordMatrix, code: GGCode) -> Optional[DecodeOutcome]:
    outs = [decode_one(row, code) for row in R.rows]
    if not all(o.ok for o in outs):
        return None
    C = WordMatrix(R.n, tuple(o.codeword.rows[0] for o in outs))
    Emat = R - C
    return DecodeOutcome(
        Status.CORRECTED,
        reason="row-wise fallback",
        codeword=C,
        error=Emat,
        error_support=tuple(sorted(Emat.support())),
    )


def joint_decode(R: WordMatrix, ic: InterleavedCode, fallback_rowwise: bool = True) -> DecodeOutcome:
    """Decode a w x n received matrix against a burst of error columns."""
    code = ic.base
    syn = joint_syndromes(R, ic)
    if syn.all_zero():
        return DecodeOutcome(
            Status.CORRECTED,
            codeword=R,
            error=WordMatrix.zeros(R.w, R.n),
            elp=Poly.one(code.field),
        )
    out = _joint(R, syn, ic)
    if not out.ok and fallback_rowwise:
        alt = _rowwise(R, code)
        if alt is not None:
            return alt
    return out


def _joint(R: WordMatrix, syn: SyndromeSet, ic: InterleavedCode) -> DecodeOutcome:
    code = ic.base
    lam = solve_joint_key_equation(syn, ic)
    if lam is None:
        return failure("error locator not unique")
    omegas = tuple((lam * s) % syn.against for s in syn.polys)
    E = locate_errors(lam, code.locators)
    degs = code.locators.degrees
    if sum(degs[i] for i in E) != lam.deg:
        return failure("located roots do not account for deg lambda", elp=lam, eeps=omegas)
    try:
        Emat = forney_values(lam, syn, E, ic)
    except DecodingFailure as exc:
        return failure(str(exc), elp=lam, eeps=omegas)
    C = R - Emat
    if not ic.is_codeword(C):
        return failure("corrected matrix is not a codeword", elp=lam, eeps=omegas)
    return DecodeOutcome(
        Status.CORRECTED,
        codeword=C,
        error=Emat,
        error_support=tuple(E),
        elp=lam,
        eeps=omegas,
    )
