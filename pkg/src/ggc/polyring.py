"""Dense univariate polynomials over GF(2^m).

Coefficients are stored low-to-high with no trailing zeros, so the zero
polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Iterator, Optional, Sequence, Union

from .galois import FieldCtx, _prime_factors

NEG_INF = -math.inf


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: Sequence[int] = ()):
        self.field = field
        self.coeffs = tuple(_strip(list(coeffs)))

    # construction helpers
    @classmethod
    def zero(cls, field: FieldCtx) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldCtx) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldCtx) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FieldCtx, k: int, c: int = 1) -> "Poly":
        return cls(field, (0,) * k + (c,))

    @classmethod
    def from_hex(cls, field: FieldCtx, text: str) -> "Poly":
        """Parse comma-separated hex coefficients, low-to-high."""
        text = text.strip()
        if not text:
            return cls.zero(field)
        return cls(field, [field.from_hex(tok.strip()) for tok in text.split(",")])

    def to_hex(self) -> str:
        return ",".join(format(c, "x") for c in self.coeffs) if self.coeffs else "0"

    # basic properties
    @property
    def deg(self) -> Union[int, float]:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.lead == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{c:#x}{'*' + mono if mono else ''}")
        return "Poly(" + " + ".join(terms) + ")"

    def sort_key(self) -> tuple:
        """Degree first, then coefficients from the top down."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    # arithmetic
    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        return Poly(self.field, _mul(self.field, self.coeffs, other.coeffs))

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.field)
        mul = self.field.mul
        return Poly(self.field, [mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs or self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, q), Poly(self.field, r)

    def __mod__(self, other: "Poly") -> "Poly":
        return Poly(self.field, _rem(self.field, self.coeffs, other.coeffs))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __call__(self, a: int) -> int:
        """Horner evaluation at a base-field element."""
        mul = self.field.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = mul(acc, a) ^ c
        return acc

    def __pow__(self, e: int) -> "Poly":
        r = Poly.one(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            e >>= 1
            if e:
                b = b * b
        return r

    def square(self) -> "Poly":
        mul = self.field.mul
        out = [0] * (2 * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[2 * i] = mul(c, c)
        return Poly(self.field, out)

    def sqrt(self) -> "Poly":
        """Square root of a perfect square (all odd coefficients zero)."""
        if any(self.coeffs[1::2]):
            raise ValueError("polynomial is not a perfect square")
        return Poly(self.field, [self.field.sqrt(c) for c in self.coeffs[::2]])

    def derivative(self) -> "Poly":
        # k * f_k over characteristic 2 keeps only odd k
        return Poly(self.field, [c if k & 1 else 0 for k, c in enumerate(self.coeffs)][1:])


# -- list-level kernels (shared with the decoders' hot paths) --

def _mul(field: FieldCtx, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    mul = field.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] ^= mul(x, y)
    return out


def _divmod(field: FieldCtx, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _strip(r)
    mul = field.mul
    inv_lead = field.inv(b[-1])
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = mul(c, inv_lead)
            q[i - db] = c
            for j in range(db + 1):
                if b[j]:
                    r[i - db + j] ^= mul(c, b[j])
    return _strip(q), _strip(r[:db])


def _rem(field: FieldCtx, a: Sequence[int], b: Sequence[int]) -> list[int]:
    return _divmod(field, a, b)[1]


# -- ring operations --

def poly_derivative(f: Poly) -> Poly:
    return f.derivative()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_eea(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (d, s, t) with d = a*s + b*t and d monic.

    Also gcd(s, t) = 1 and deg t + deg d < deg a.
    """
    if a.is_zero() or not a.deg > b.deg:
        raise ValueError("poly_eea requires a != 0 and deg a > deg b")
    F = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(F), Poly.zero(F)
    t0, t1 = Poly.zero(F), Poly.one(F)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = F.inv(r0.lead)
    return r0.scale(c), s0.scale(c), t0.scale(c)


def poly_inv_mod(b: Poly, a: Poly) -> Poly:
    """Inverse of b modulo a."""
    if a.deg < 1:
        raise ValueError("modulus must have degree >= 1")
    b = b % a
    if b.is_zero():
        raise ValueError("not invertible: inputs share a factor")
    d, _, t = poly_eea(a, b)
    if not d.is_one():
        raise ValueError("not invertible: inputs share a factor")
    return t % a


def poly_eea_partial(a: Poly, b: Poly, dstop: int) -> tuple[Poly, Poly]:
    """Run Euclid on (a, b) until the first remainder of degree < dstop.

    Returns (omega, lam) with omega = lam * b (mod a).  lam is not normalized.
    """
    if a.is_zero() or not a.deg > b.deg:
        raise ValueError("poly_eea_partial requires a != 0 and deg a > deg b")
    F = a.field
    r0, r1 = a, b
    t0, t1 = Poly.zero(F), Poly.one(F)
    while r1.deg >= dstop:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    return r1, t1


def poly_powmod_x_q(f: Poly, k: int) -> Poly:
    """x^(q^k) mod f via m*k squarings."""
    F = f.field
    v = Poly.x(F) % f
    for _ in range(F.m * k):
        v = v.square() % f
    return v


def poly_is_irreducible(f: Poly) -> bool:
    """Rabin's irreducibility test over F_q."""
    t = f.deg
    if t < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if t == 1:
        return True
    f = f.monic()
    if f[0] == 0:
        return False
    x = Poly.x(f.field)
    if poly_powmod_x_q(f, t) != x:
        return False
    for p in _prime_factors(t):
        if not poly_gcd(poly_powmod_x_q(f, t // p) - x, f).is_one():
            return False
    return True


def mobius(n: int) -> int:
    if n == 1:
        return 1
    k = 0
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            k += 1
        p += 1
    if n > 1:
        k += 1
    return -1 if k % 2 else 1


def _order(q: Union[int, FieldCtx]) -> int:
    return q.q if isinstance(q, FieldCtx) else q


def count_irreducibles(t: int, q: Union[int, FieldCtx]) -> int:
    """Number of monic irreducible polynomials of degree t over F_q."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    q = _order(q)
    total = sum(mobius(k) * q ** (t // k) for k in range(1, t + 1) if t % k == 0)
    assert total % t == 0
    return total // t


def enumerate_irreducibles(t: int, field: FieldCtx, limit: Optional[int] = None) -> Iterator[Poly]:
    """Monic irreducibles of degree t, in lexicographic coefficient order."""
    if t < 1:
        raise ValueError("degree must be >= 1")
    if limit is not None and limit <= 0:
        return
    found = 0
    # product() varies the last slot fastest, so iterate top coefficient first
    for top_down in product(range(field.q), repeat=t):
        f = Poly(field, tuple(reversed(top_down)) + (1,))
        if t > 1 and top_down[-1] == 0:
            continue  # divisible by x
        if poly_is_irreducible(f):
            yield f
            found += 1
            if limit is not None and found >= limit:
                return


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Factor f (made monic) as a product of squarefree parts: [(S, e), ...].

    The S are pairwise coprime, squarefree and non-constant; f = prod S^e.
    """
    f = f.monic()
    if f.deg < 1:
        return []
    df = f.derivative()
    if df.is_zero():
        return [(s, 2 * e) for s, e in squarefree_decomposition(f.sqrt())]
    out: list[tuple[Poly, int]] = []
    c = poly_gcd(f, df)
    w = f // c
    i = 1
    while w.deg > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.deg > 0:
            out.append((z.monic(), i))
        i += 1
        w = y
        c = c // y
    if c.deg > 0:
        out.extend((s, 2 * e) for s, e in squarefree_decomposition(c.sqrt()))
    # merge equal exponents from the two branches
    merged: dict[int, Poly] = {}
    for s, e in out:
        merged[e] = merged[e] * s if e in merged else s
    return sorted(((s.monic(), e) for e, s in merged.items()), key=lambda p: p[1])
