"""Binary generalized Goppa codes: locator validation, parity-check matrices,
dimension, distance bounds and systematic form."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import gf2
from .galois import FieldCtx, ResidueField
from .polyring import (
    Poly,
    count_irreducibles,
    enumerate_irreducibles,
    poly_gcd,
    poly_inv_mod,
    poly_is_irreducible,
    squarefree_decomposition,
)

Matrix = List[List[int]]  # rows of field elements


class CodeError(ValueError):
    """Invalid code parameters.  ``index`` names the offending locator, if any."""

    def __init__(self, msg: str, index: Optional[int] = None):
        super().__init__(msg)
        self.index = index


@dataclass(frozen=True)
class WordMatrix:
    """A w x n binary matrix; each row is an int with bit j = column j."""

    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or not self.rows:
            raise ValueError("word matrix needs n >= 1 and at least one row")
        for r in self.rows:
            if r < 0 or r >> self.n:
                raise ValueError("row does not fit in n columns")

    @classmethod
    def zeros(cls, w: int, n: int) -> "WordMatrix":
        return cls(n, (0,) * w)

    @classmethod
    def from_row(cls, row: int, n: int) -> "WordMatrix":
        return cls(n, (row,))

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "WordMatrix":
        n = len(bits[0])
        return cls(n, tuple(sum(b << j for j, b in enumerate(row)) for row in bits))

    @property
    def w(self) -> int:
        return len(self.rows)

    def __add__(self, other: "WordMatrix") -> "WordMatrix":
        if (self.n, self.w) != (other.n, other.w):
            raise ValueError("shape mismatch")
        return WordMatrix(self.n, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    __sub__ = __add__

    def support(self) -> set[int]:
        """Indices of the non-zero columns."""
        acc = 0
        for r in self.rows:
            acc |= r
        return set(gf2.bits(acc))

    def row_support(self, i: int) -> set[int]:
        return set(gf2.bits(self.rows[i]))

    def to_bits(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]


@dataclass(frozen=True)
class LocatorSet:
    field: FieldCtx
    locators: Tuple[Poly, ...]
    residue_fields: Tuple[ResidueField, ...]
    rescaled: Tuple[int, ...] = ()  # input positions that were made monic

    @property
    def n(self) -> int:
        return len(self.locators)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(f.deg for f in self.locators)

    @property
    def lmax(self) -> int:
        return max(self.degrees)

    def __iter__(self):
        return iter(self.locators)

    def __len__(self) -> int:
        return len(self.locators)


def validate_locators(polys: Sequence[Poly], G: Poly, order: str = "canonical") -> LocatorSet:
    """Check the locator conditions and build one residue field per locator.

    ``order="canonical"`` sorts by (degree, coefficients top-down);
    ``order="given"`` keeps the input order.
    """
    if order not in ("canonical", "given"):
        raise CodeError(f"unknown locator order {order!r}")
    if not polys:
        raise CodeError("empty locator set")
    F = G.field
    if G.deg < 1:
        raise CodeError("Goppa polynomial must have degree >= 1")
    rescaled = []
    seen: Dict[Poly, int] = {}
    monic = []
    for i, f in enumerate(polys):
        if f.field != F:
            raise CodeError(f"locator {i} is over a different field", i)
        if f.deg < 1:
            raise CodeError(f"locator {i} is constant", i)
        if not f.is_monic():
            rescaled.append(i)
            f = f.monic()
        if not poly_is_irreducible(f):
            raise CodeError(f"locator {i} is a reducible locator: {f!r}", i)
        if f in seen:
            raise CodeError(f"locator {i} duplicates locator {seen[f]}", i)
        seen[f] = i
        if not poly_gcd(f, G).is_one():
            raise CodeError(f"locator {i} shares a factor with G", i)
        monic.append(f)
    if order == "canonical":
        monic.sort(key=Poly.sort_key)
    lmax = max(f.deg for f in monic)
    bound = max_length(lmax, F)
    assert len(monic) <= bound, "more locators than irreducibles of degree <= l"
    return LocatorSet(
        field=F,
        locators=tuple(monic),
        residue_fields=tuple(ResidueField(F, f.coeffs) for f in monic),
        rescaled=tuple(rescaled),
    )


# -- parity-check matrices --

def build_parity_check_trace(L: LocatorSet, G: Poly) -> Matrix:
    """H with h[j][i] = Tr(gamma_i^j / G(gamma_i)) in the splitting field of f_i."""
    r = G.deg
    H = [[0] * L.n for _ in range(r)]
    for i, R in enumerate(L.residue_fields):
        g_at = R.eval_poly(G.coeffs)
        assert any(g_at), "G vanishes at a locator root"
        v = R.inv(g_at)
        gamma = R.gen()
        for j in range(r):
            H[j][i] = R.trace(v)
            v = R.mul(v, gamma)
    return H


def lower_toeplitz(G: Poly) -> Matrix:
    """r x r matrix T with T[i][j] = G_{r-i+j} for j <= i (0-based)."""
    r = G.deg
    return [[G[r - i + j] if j <= i else 0 for j in range(r)] for i in range(r)]


def locator_column(f: Poly, G: Poly) -> Poly:
    """f' * f^{-1} mod G."""
    return (f.derivative() * poly_inv_mod(f, G)) % G


def build_parity_check_eea(L: LocatorSet, G: Poly) -> Tuple[Matrix, Matrix]:
    """(Htilde, H): Htilde row j holds the x^(r-1-j) coefficient of f_i'/f_i mod G,
    and H solves lower_toeplitz(G) . H = Htilde."""
    F = G.field
    r = G.deg
    Ht = [[0] * L.n for _ in range(r)]
    for i, f in enumerate(L.locators):
        col = locator_column(f, G)
        for j in range(r):
            Ht[j][i] = col[r - 1 - j]
    # forward substitution down each column; diagonal is G_r
    mul = F.mul
    inv_lead = F.inv(G.lead)
    H = [[0] * L.n for _ in range(r)]
    for i in range(L.n):
        for row in range(r):
            acc = Ht[row][i]
            for j in range(row):
                acc ^= mul(G[r - row + j], H[j][i])
            H[row][i] = mul(acc, inv_lead)
    return Ht, H


def field_matmul(F: FieldCtx, A: Matrix, B: Matrix) -> Matrix:
    mul = F.mul
    out = []
    for row in A:
        acc = [0] * len(B[0])
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] ^= mul(a, b)
        out.append(acc)
    return out


def field_apply(F: FieldCtx, H: Matrix, word: int) -> List[int]:
    """H . c^T over F_q for a binary word c."""
    idx = list(gf2.bits(word))
    out = []
    for row in H:
        acc = 0
        for j in idx:
            acc ^= row[j]
        out.append(acc)
    return out


def expand_binary(H: Matrix, F: FieldCtx) -> List[int]:
    """Replace each entry by its m polynomial-basis bits (bit b -> row j*m + b)."""
    m = F.m
    out = []
    for row in H:
        for b in range(m):
            v = 0
            for i, h in enumerate(row):
                if (h >> b) & 1:
                    v |= 1 << i
            out.append(v)
    return out


def code_dimension(Hbin: Sequence[int], n: int) -> int:
    return n - gf2.rank(Hbin, n)


def build_generator(Hbin: Sequence[int], n: int) -> List[int]:
    """Rows spanning the nullspace of Hbin."""
    return gf2.nullspace(Hbin, n)


def systematic_public_key(Hbin: Sequence[int], n: int) -> List[int]:
    """Row-reduce Hbin to (I_{n-k} | T) and return T as (n-k) rows of k bits.

    Raises CodeError if the leftmost n-k columns are not independent; no
    column permutation is attempted.
    """
    red, pivots = gf2.rref(Hbin, n)
    nk = len(red)
    if pivots != list(range(nk)):
        raise CodeError("support ordering not systematic: leftmost block is singular")
    return [row >> nk for row in red]


def public_key_bytes(n: int, m: int, r: int) -> int:
    """Classic McEliece key size ceil((n*m*r - m^2*r^2) / 8)."""
    if n <= m * r:
        raise ValueError(f"n={n} must exceed m*r={m * r}")
    return -(-(n * m * r - m * m * r * r) // 8)


def max_length(l: int, q) -> int:
    """Upper bound on n when all locators have degree <= l."""
    if l < 1:
        raise ValueError("l must be >= 1")
    return sum(count_irreducibles(t, q) for t in range(1, l + 1))


# -- Goppa polynomial properties --

def is_separable(G: Poly) -> bool:
    if G.deg < 1:
        raise ValueError("degree must be >= 1")
    return poly_gcd(G, G.derivative()).is_one()


def effective_goppa(G: Poly) -> Poly:
    """G^2 if G is separable, otherwise the least perfect square divisible by G."""
    if is_separable(G):
        return G * G
    out = Poly.one(G.field).scale(G.lead)
    for s, e in squarefree_decomposition(G):
        out = out * s ** (2 * ((e + 1) // 2))
    return out


@dataclass(frozen=True)
class DistanceBounds:
    d_g: Fraction
    d_sep: Optional[Fraction] = None
    d_even: Optional[Fraction] = None

    def best(self) -> Fraction:
        return max(b for b in (self.d_g, self.d_sep, self.d_even) if b is not None)

    def floors(self) -> Dict[str, int]:
        return {k: math.floor(v) for k, v in self.as_dict().items()}

    def ceilings(self) -> Dict[str, int]:
        return {k: math.ceil(v) for k, v in self.as_dict().items()}

    def as_dict(self) -> Dict[str, Fraction]:
        return {k: v for k, v in (("d_g", self.d_g), ("d_sep", self.d_sep), ("d_even", self.d_even)) if v is not None}


def distance_bounds_for(r: int, l: int, separable: bool, all_even: bool) -> DistanceBounds:
    return DistanceBounds(
        d_g=Fraction(r + 1, l),
        d_sep=Fraction(2 * r + 1, l) if separable else None,
        d_even=Fraction(2 * r + 2, l) if separable and all_even else None,
    )


def goppa_sum(L: LocatorSet, G: Poly, word: int) -> Poly:
    """sum_i c_i f_i'/f_i mod G; zero exactly for codewords."""
    acc = Poly.zero(G.field)
    for i in gf2.bits(word):
        acc = acc + locator_column(L.locators[i], G)
    return acc % G


class GGCode:
    """A binary generalized Goppa code Gamma(L, G)."""

    def __init__(self, locators: LocatorSet, goppa: Poly, method: str = "trace"):
        F = locators.field
        if goppa.field != F:
            raise CodeError("Goppa polynomial is over a different field")
        r = goppa.deg
        if r < 1:
            raise CodeError("Goppa polynomial must have degree >= 1")
        if r * F.m > locators.n:
            raise CodeError(f"r*m = {r * F.m} exceeds n = {locators.n}")
        for i, f in enumerate(locators.locators):
            if not poly_gcd(f, goppa).is_one():
                raise CodeError(f"locator {i} shares a factor with G", i)
        self.locators = locators
        self.goppa = goppa
        if method == "trace":
            self.H = build_parity_check_trace(locators, goppa)
            self.Htilde = field_matmul(F, lower_toeplitz(goppa), self.H)
        elif method == "eea":
            self.Htilde, self.H = build_parity_check_eea(locators, goppa)
        else:
            raise ValueError(f"unknown construction method {method!r}")
        self.Hbin = expand_binary(self.H, F)
        self.k = code_dimension(self.Hbin, self.n)
        self.separable = is_separable(goppa)
        self.effective_goppa = effective_goppa(goppa)

    @classmethod
    def from_polys(cls, polys: Sequence[Poly], G: Poly, order: str = "canonical", method: str = "trace") -> "GGCode":
        return cls(validate_locators(polys, G, order), G, method)

    def __repr__(self) -> str:
        return f"GGCode(n={self.n}, k={self.k}, m={self.m}, r={self.r}, l={self.l})"

    @property
    def field(self) -> FieldCtx:
        return self.locators.field

    @property
    def n(self) -> int:
        return self.locators.n

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def r(self) -> int:
        return self.goppa.deg

    @property
    def l(self) -> int:
        return self.locators.lmax

    @property
    def all_even(self) -> bool:
        return all(d % 2 == 0 for d in self.locators.degrees)

    @cached_property
    def bounds(self) -> DistanceBounds:
        return distance_bounds_for(self.r, self.l, self.separable, self.all_even)

    @cached_property
    def generator(self) -> List[int]:
        return build_generator(self.Hbin, self.n)

    @cached_property
    def syndrome_columns(self) -> Tuple[Tuple[int, ...], ...]:
        """Per-locator f_i' * f_i^{-1} mod Ghat, as coefficient tuples."""
        Gh = self.effective_goppa
        return tuple(locator_column(f, Gh).coeffs for f in self.locators.locators)

    def is_codeword(self, word: int) -> bool:
        return gf2.mat_vec(self.Hbin, word) == 0

    def encode(self, message: int) -> int:
        """Message bit i selects generator row i."""
        if message >> self.k:
            raise ValueError(f"message longer than k={self.k} bits")
        return gf2.combine(self.generator, message)

    def systematic_public_key(self) -> List[int]:
        return systematic_public_key(self.Hbin, self.n)


def distance_bounds(code: GGCode) -> DistanceBounds:
    return code.bounds


def random_irreducible(F: FieldCtx, degree: int, rng: random.Random, avoid: Iterable[Poly] = ()) -> Poly:
    avoid = set(avoid)
    if sum(1 for f in avoid if f.deg == degree) >= count_irreducibles(degree, F):
        raise ValueError(f"no irreducible of degree {degree} left over GF(2^{F.m})")
    while True:
        f = Poly(F, [rng.randrange(F.q) for _ in range(degree)] + [1])
        if f not in avoid and poly_is_irreducible(f):
            return f


def locators_from_profile(F: FieldCtx, profile: Dict[int, int]) -> List[Poly]:
    """The first ``count`` irreducibles of each degree, in enumeration order."""
    out: List[Poly] = []
    for degree in sorted(profile):
        count = profile[degree]
        got = list(enumerate_irreducibles(degree, F, count))
        if len(got) < count:
            raise CodeError(f"only {len(got)} irreducibles of degree {degree} over GF(2^{F.m})")
        out.extend(got)
    return out


def code_from_profile(F: FieldCtx, profile: Dict[int, int], r: int, seed: int = 0) -> GGCode:
    """Locators from ``profile`` ({degree: count}) and a seeded random irreducible G."""
    polys = locators_from_profile(F, profile)
    G = random_irreducible(F, r, random.Random(seed), avoid=polys)
    return GGCode.from_polys(polys, G)
