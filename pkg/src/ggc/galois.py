"""Arithmetic in GF(2^m) and in residue fields F_q[y]/(f(y)).

Field elements are plain ints: bit i is the coefficient of alpha^i in the
polynomial basis {1, alpha, ..., alpha^(m-1)}.  Addition is XOR.  Residue
field elements are tuples of base-field coefficients, low degree first.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Tuple

MAX_M = 16


# -- binary polynomials packed into ints (bit i = coefficient of x^i) --

def _clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _clmod(a: int, mod: int) -> int:
    dm = mod.bit_length()
    while a.bit_length() >= dm:
        a ^= mod << (a.bit_length() - dm)
    return a


def _clgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _clmod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def binary_is_irreducible(f: int) -> bool:
    """Rabin test for a polynomial over F_2 packed as an int."""
    d = f.bit_length() - 1
    if d < 1:
        return False
    if d == 1:
        return True

    def x_pow_2k(k: int) -> int:
        v = 2
        for _ in range(k):
            v = _clmod(_clmul(v, v), f)
        return v

    if x_pow_2k(d) != _clmod(2, f):
        return False
    for p in _prime_factors(d):
        if _clgcd(f, x_pow_2k(d // p) ^ 2) != 1:
            return False
    return True


class FieldCtx:
    """The field GF(2^m) with a fixed irreducible modulus.

    For m >= 2 multiplication goes through log/antilog tables.  m = 1 is
    plain F_2 (AND for multiplication) and carries no tables.
    """

    __slots__ = ("m", "modulus", "q", "_exp", "_log")

    def __init__(self, m: int, modulus: int):
        if not 1 <= m <= MAX_M:
            raise ValueError(f"extension degree m={m} outside [1, {MAX_M}]")
        if modulus.bit_length() - 1 != m:
            raise ValueError(f"modulus {modulus:#x} does not have degree {m}")
        if not binary_is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#x} is reducible over F_2")
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self._exp: list[int] = []
        self._log: list[int] = []
        if m > 1:
            self._build_tables()

    def _build_tables(self) -> None:
        order = self.q - 1
        # the canonical modulus need not be primitive, so search a generator
        for g in range(2, self.q):
            exp = [0] * (2 * order)
            v = 1
            ok = True
            for i in range(order):
                if i > 0 and v == 1:
                    ok = False
                    break
                exp[i] = v
                v = _clmod(_clmul(v, g), self.modulus)
            if ok and v == 1:
                break
        else:  # pragma: no cover - a cyclic group always has a generator
            raise AssertionError("no generator found")
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        log = [0] * self.q
        for i in range(order):
            log[exp[i]] = i
        self._exp = exp
        self._log = log

    def __repr__(self) -> str:
        return f"FieldCtx(m={self.m}, modulus={self.modulus:#x})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a & b
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.m == 1:
            return 1
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self.m == 1:
            return 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def sqrt(self, a: int) -> int:
        """Square root; squaring is a bijection in characteristic 2."""
        return self.pow(a, self.q >> 1) if self.m > 1 else a

    def mul_table_row(self, a: int) -> list[int]:
        """All products a*b for b in the field, indexed by b."""
        return [self.mul(a, b) for b in range(self.q)]

    def elements(self) -> range:
        return range(self.q)

    def to_hex(self, a: int) -> str:
        return format(a, "x")

    def from_hex(self, s: str) -> int:
        v = int(s, 16)
        if not 0 <= v < self.q:
            raise ValueError(f"element {s!r} out of range for GF(2^{self.m})")
        return v


@lru_cache(maxsize=None)
def gf_make_ctx(m: int) -> FieldCtx:
    """Field context with the lexicographically smallest irreducible modulus."""
    if not 1 <= m <= MAX_M:
        raise ValueError(f"extension degree m={m} outside [1, {MAX_M}]")
    for f in range(1 << m, 1 << (m + 1)):
        if binary_is_irreducible(f):
            return FieldCtx(m, f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


def gf_mul(a: int, b: int, ctx: FieldCtx) -> int:
    return ctx.mul(a, b)


def gf_inv(a: int, ctx: FieldCtx) -> int:
    return ctx.inv(a)


Residue = Tuple[int, ...]


class ResidueField:
    """The extension F_q[y]/(f(y)) for a monic irreducible f over F_q.

    The class of y is a root of f; its Frobenius conjugates y^(q^i) are
    the remaining roots.
    """

    __slots__ = ("base", "modulus", "degree")

    def __init__(self, base: FieldCtx, modulus: Sequence[int]):
        f = tuple(modulus)
        if len(f) < 2 or f[-1] != 1:
            raise ValueError("residue modulus must be monic of degree >= 1")
        self.base = base
        self.modulus = f
        self.degree = len(f) - 1

    def __repr__(self) -> str:
        return f"ResidueField({self.base!r}, {self.modulus})"

    @property
    def zero(self) -> Residue:
        return (0,) * self.degree

    @property
    def one(self) -> Residue:
        return (1,) + (0,) * (self.degree - 1)

    def gen(self) -> Residue:
        """The class of y."""
        if self.degree == 1:
            return (self.base.mul(self.modulus[0], 1),)  # y = -f0 = f0
        return (0, 1) + (0,) * (self.degree - 2)

    def embed(self, a: int) -> Residue:
        return (a,) + (0,) * (self.degree - 1)

    def reduce(self, coeffs: Sequence[int]) -> Residue:
        """Reduce an arbitrary coefficient list modulo f."""
        r = list(coeffs)
        l = self.degree
        f = self.modulus
        mul = self.base.mul
        for i in range(len(r) - 1, l - 1, -1):
            c = r[i]
            if c:
                r[i] = 0
                for j in range(l):
                    if f[j]:
                        r[i - l + j] ^= mul(c, f[j])
        r = r[:l]
        r.extend([0] * (l - len(r)))
        return tuple(r)

    def add(self, a: Residue, b: Residue) -> Residue:
        return tuple(x ^ y for x, y in zip(a, b))

    def mul(self, a: Residue, b: Residue) -> Residue:
        mul = self.base.mul
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] ^= mul(x, y)
        return self.reduce(prod)

    def square(self, a: Residue) -> Residue:
        mul = self.base.mul
        sq = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                sq[2 * i] = mul(x, x)
        return self.reduce(sq)

    def pow(self, a: Residue, e: int) -> Residue:
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.square(a)
        return r

    def inv(self, a: Residue) -> Residue:
        if not any(a):
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(a, self.base.q ** self.degree - 2)

    def frobenius(self, a: Residue) -> Residue:
        """a^q, computed as m successive squarings."""
        for _ in range(self.base.m):
            a = self.square(a)
        return a

    def trace(self, a: Residue) -> int:
        """Sum of the Frobenius orbit of a, returned as a base-field element."""
        acc = a
        b = a
        for _ in range(self.degree - 1):
            b = self.frobenius(b)
            acc = self.add(acc, b)
        assert not any(acc[1:]), "trace left the base field"
        return acc[0]

    def eval_poly(self, coeffs: Sequence[int]) -> Residue:
        """Evaluate a base-field polynomial at the class of y (i.e. reduce mod f)."""
        return self.reduce(coeffs) if len(coeffs) else self.zero


def rf_frobenius(b: Residue, fld: ResidueField) -> Residue:
    return fld.frobenius(b)


def rf_trace(b: Residue, fld: ResidueField) -> int:
    return fld.trace(b)
