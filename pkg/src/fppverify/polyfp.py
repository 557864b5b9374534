"""Polynomials over a prime field and the factorization of ``x^n - 1``.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros.  Factorization is squarefree decomposition by the
characteristic-``p`` identity ``x^(pk) - 1 = (x^k - 1)^p``, then
distinct-degree and equal-degree splitting.  Equal-degree splitting draws
from a fixed-seed generator so the output is deterministic; factors are
returned sorted by ``(degree, coefficients from the top)``.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

Poly = Tuple[int, ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def trim(a: Sequence[int], p: int) -> Poly:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def degree(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, tuple(-c for c in b), p)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def divmod_poly(a: Poly, b: Poly, p: int) -> Tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = (a[-1] * inv) % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
        while a and a[-1] == 0:
            a.pop()
    return trim(q, p), trim(a, p)


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_poly(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    inv = pow(a[-1], -1, p)
    return trim([c * inv for c in a], p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p) if a else a


def powmod(a: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return result


X: Poly = (0, 1)


def x_n_minus_1(n: int, p: int) -> Poly:
    return trim([-1] + [0] * (n - 1) + [1], p)


def product(polys: Sequence[Poly], p: int) -> Poly:
    out: Poly = (1,)
    for f in polys:
        out = mul(out, f, p)
    return out


def _distinct_degree(f: Poly, p: int) -> List[Tuple[Poly, int]]:
    out = []
    h = X
    d = 0
    while degree(f) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, X, p), p)
        if degree(g) > 0:
            out.append((g, d))
            f = divmod_poly(f, g, p)[0]
            h = mod(h, f, p)
    if degree(f) > 0:
        out.append((monic(f, p), degree(f)))
    return out


def _equal_degree(f: Poly, d: int, p: int, rng: random.Random) -> List[Poly]:
    n = degree(f)
    if n == d:
        return [monic(f, p)]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)], p)
        if degree(a) < 1:
            continue
        if p == 2:
            # absolute trace a + a^2 + ... + a^(2^(d-1))
            t = a
            s = a
            for _ in range(d - 1):
                s = mod(mul(s, s, p), f, p)
                t = add(t, s, p)
            b = t
        else:
            b = sub(powmod(a, (p ** d - 1) // 2, f, p), (1,), p)
        g = gcd(f, b, p)
        if 0 < degree(g) < n:
            h = divmod_poly(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(h, d, p, rng)


def factor_squarefree(f: Poly, p: int, seed: int = 0) -> List[Poly]:
    rng = random.Random(seed)
    out = []
    for g, d in _distinct_degree(monic(f, p), p):
        out.extend(_equal_degree(g, d, p, rng))
    return out


def sort_key(f: Poly):
    return (degree(f), tuple(reversed(f)))


def factor_cyclotomic_mod_p(n: int, p: int) -> List[Poly]:
    """Monic irreducible factors of ``x^n - 1`` over ``F_p`` with multiplicity."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    k, e = n, 0
    while k % p == 0:
        k //= p
        e += 1
    base = factor_squarefree(x_n_minus_1(k, p), p)
    return sorted(base * (p ** e), key=sort_key)


def is_irreducible_trial(f: Poly, p: int) -> bool:
    """Irreducibility by trial division by every monic polynomial of degree <= deg/2."""
    n = degree(f)
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            g = tuple(tail) + (1,)
            if not mod(f, g, p):
                return False
    return True


def to_str(f: Poly, var: str = "x") -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        terms.append(mono if c == 1 and i else (str(c) if i == 0 else f"{c}{mono}"))
    return " + ".join(terms) if terms else "0"


def multiplicative_order(a: int, n: int) -> int:
    k, x = 1, a % n
    while x != 1 % n:
        x = (x * a) % n
        k += 1
    return k


@dataclass(frozen=True)
class FixedCountResult:
    factor_degrees: Tuple[int, ...]
    fixed_dimensions: Tuple[int, ...]
    decompositions: Tuple[Tuple[int, ...], ...]


def _root_order(f: Poly, m: int, p: int) -> int:
    """Order of the roots of an irreducible factor of ``x^m - 1``."""
    for k in sorted(d for d in range(1, m + 1) if m % d == 0):
        if not mod(x_n_minus_1(k, p), f, p):
            return k
    raise ValueError("not a factor of x^m - 1")


def cyclic_action_fixed_count(n_copies: int, p: int, m: int, faithful: bool = True,
                              max_fixed_size: Optional[int] = None) -> FixedCountResult:
    """Possible fixed-subspace dimensions of a ``C_m`` action on ``F_p^n``.

    For ``p`` not dividing ``m`` the action is semisimple, so it is a direct
    sum of ``F_p[x]/(f)`` over irreducible factors ``f`` of ``x^m - 1``; the
    fixed dimension is the number of ``(x - 1)`` summands.  A faithful action
    needs the lcm of the root orders of its summands to be ``m``.
    ``max_fixed_size`` discards decompositions whose fixed subgroup has more
    than that many elements.
    """
    if m % p == 0:
        raise ValueError("only the semisimple case p not dividing m is handled")
    if n_copies > 16:
        raise ValueError("dimension above desk scale")
    factors = factor_cyclotomic_mod_p(m, p)
    orders = [_root_order(f, m, p) for f in factors]
    kinds = sorted(set(zip((degree(f) for f in factors), orders)))
    decomps: Set[Tuple[int, ...]] = set()
    fixed: Set[int] = set()

    def rec(i: int, left: int, chosen: List[Tuple[int, int]]):
        if left == 0:
            lcm = 1
            for _, o in chosen:
                lcm = lcm * o // math.gcd(lcm, o)
            if faithful and lcm != m:
                return
            fdim = sum(1 for _, o in chosen if o == 1)
            if max_fixed_size is not None and p ** fdim > max_fixed_size:
                return
            decomps.add(tuple(sorted((dg for dg, _ in chosen), reverse=True)))
            fixed.add(fdim)
            return
        if i == len(kinds):
            return
        dg, o = kinds[i]
        for c in range(left // dg, -1, -1):
            rec(i + 1, left - c * dg, chosen + [(dg, o)] * c)

    rec(0, n_copies, [])
    return FixedCountResult(tuple(sorted(degree(f) for f in factors)),
                            tuple(sorted(fixed)), tuple(sorted(decomps)))

