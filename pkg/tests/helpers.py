"""Test-side generators and brute-force oracles."""

import random
from itertools import product
from typing import Optional, Sequence

from ggc.code import GGCode, random_irreducible, validate_locators
from ggc.galois import gf_make_ctx
from ggc.polyring import Poly, count_irreducibles, poly_gcd

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def random_poly(F, degree, rng, monic=True):
    coeffs = [rng.randrange(F.q) for _ in range(degree)]
    coeffs.append(1 if monic else rng.randrange(1, F.q))
    return Poly(F, coeffs)


def random_locators(F, degrees: Sequence[int], rng, avoid=()):
    """Distinct random monic irreducibles with the given degrees."""
    seen = set(avoid)
    out = []
    for d in degrees:
        f = random_irreducible(F, d, rng, avoid=seen)
        seen.add(f)
        out.append(f)
    return out


def random_code(
    rng: random.Random,
    m: int,
    n: int,
    r: int,
    degrees: Sequence[int] = (1,),
    goppa: str = "any",
    method: str = "trace",
    max_tries: int = 200,
) -> Optional[GGCode]:
    """A random code with locator degrees drawn from ``degrees``.

    goppa: "any" (random monic), "irreducible", "separable" or "square".
    Returns None if no valid combination turns up.
    """
    F = gf_make_ctx(m)
    room = {d: count_irreducibles(d, F) for d in degrees}
    if sum(room.values()) < n:
        raise ValueError(f"only {sum(room.values())} locators of degrees {degrees} over GF(2^{m})")
    for _ in range(max_tries):
        left = dict(room)
        degs = []
        for _ in range(n):
            d = rng.choice([d for d in degrees if left[d]])
            left[d] -= 1
            degs.append(d)
        polys = random_locators(F, sorted(degs), rng)
        for _ in range(50):
            if goppa == "irreducible":
                G = random_irreducible(F, r, rng)
            elif goppa == "square":
                if r % 2:
                    raise ValueError("square Goppa polynomial needs even r")
                G = random_poly(F, r // 2, rng) ** 2
            else:
                G = random_poly(F, r, rng)
            if goppa == "separable" and not poly_gcd(G, G.derivative()).is_one():
                continue
            if all(poly_gcd(f, G).is_one() for f in polys):
                return GGCode(validate_locators(polys, G), G, method)
    return None



def poly_mul_plain(F, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] ^= F.mul(x, y)
    return tuple(out)


def monic_polys(F, t):
    for low in product(range(F.q), repeat=t):
        yield tuple(low) + (1,)


def sieve_irreducibles(F, t):
    """Monic degree-t polynomials that are not a product of two monic factors."""
    reducible = set()
    for a in range(1, t // 2 + 1):
        small = list(monic_polys(F, a))
        big = small if a == t - a else list(monic_polys(F, t - a))
        for f in small:
            for g in big:
                reducible.add(poly_mul_plain(F, f, g))
    return sorted(
        (p for p in monic_polys(F, t) if p not in reducible),
        key=lambda c: tuple(reversed(c)),
    )
