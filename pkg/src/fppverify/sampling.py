"""Seeded generators of random groups and automorphisms for the brute-force checks."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .abelian import (FinAbGroup, GroupEndo, abelian_groups_of_order, coinvariants,
                      cyclic_product, factorize)

Matrix = List[List[int]]


def primary_orders(H: FinAbGroup) -> List[int]:
    """Prime-power cyclic factors of ``H``, grouped by prime, largest first."""
    out = []
    for d in H.invariant_factors:
        out.extend(p ** e for p, e in factorize(d))
    return sorted(out, key=lambda q: (factorize(q)[0][0], -q))


def _identity(r: int) -> Matrix:
    return [[int(i == j) for j in range(r)] for i in range(r)]


def _mul(A: Matrix, B: Matrix, orders: Sequence[int]) -> Matrix:
    r = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(r)) % orders[i] for j in range(r)] for i in range(r)]


def random_unimodular(orders: Sequence[int], rng: random.Random, steps: int = 6) -> Tuple[Matrix, Matrix]:
    """A random automorphism of ``prod C_{orders}`` and its inverse, in product coordinates.

    Built from unit scalings and transvections ``e_i += c e_j`` with
    ``c * n_j = 0 mod n_i``, each inverted on the spot.
    """
    r = len(orders)
    A, Ainv = _identity(r), _identity(r)
    for _ in range(steps):
        T, Tinv = _identity(r), _identity(r)
        if r >= 2 and rng.random() < 0.6:
            i, j = rng.sample(range(r), 2)
            step = orders[i] // math.gcd(orders[i], orders[j])
            c = step * rng.randrange(orders[i])
            T[i][j] = c % orders[i]
            Tinv[i][j] = (-c) % orders[i]
        elif r:
            i = rng.randrange(r)
            units = [u for u in range(1, orders[i] + 1) if math.gcd(u, orders[i]) == 1]
            u = rng.choice(units) % orders[i] if orders[i] > 1 else 1
            T[i][i] = u
            Tinv[i][i] = pow(u, -1, orders[i]) if orders[i] > 1 else 1
        A = _mul(T, A, orders)
        Ainv = _mul(Ainv, Tinv, orders)
    return A, Ainv


def random_group(rng: random.Random, max_order: int) -> FinAbGroup:
    n = rng.randint(1, max_order)
    return rng.choice(abelian_groups_of_order(n))


@dataclass(frozen=True)
class TraceCase:
    group: FinAbGroup
    endo: GroupEndo
    m: int


def _bad_part(n: int, exponent: int) -> int:
    out = 1
    for p, e in factorize(n):
        if exponent % p == 0:
            out *= p ** e
    return out


def trace_cases(count: int, seed: int, max_order: int = 200) -> Iterator[TraceCase]:
    """Random ``(H, g, m)`` with ``g^m = 1`` and ``gcd(m, exp H) = 1``.

    A random automorphism ``a`` is raised to the part of its order that
    shares primes with ``exp H``, leaving an element of coprime order;
    ``m`` is that order times a random coprime factor.
    """
    rng = random.Random(seed)
    made = 0
    while made < count:
        H = random_group(rng, max_order)
        orders = primary_orders(H)
        iso = cyclic_product(orders)
        A, _ = random_unimodular(orders, rng)
        a = iso.endo(A)
        o = a.order()
        g = a ** _bad_part(o, H.exponent)
        k = g.order()
        extra = rng.choice([q for q in (1, 5, 7, 11, 13) if math.gcd(q, H.exponent) == 1])
        yield TraceCase(H, g, k * extra)
        made += 1


def _cube_root_of_unity(q: int) -> Optional[int]:
    for a in range(2, q):
        if math.gcd(a, q) == 1 and pow(a, 3, q) == 1:
            return a
    return None


def _order3_blocks(orders: Sequence[int], rng: random.Random) -> Matrix:
    """A block-diagonal matrix of order dividing 3 on ``prod C_{orders}``.

    Blocks: the identity; the companion matrix of
    ``x^2 + x + 1`` on two factors of the same order; a primitive cube
    root of unity on ``C_{p^k}`` when ``p = 1 mod 3``.
    """
    r = len(orders)
    M = _identity(r)
    i = 0
    while i < r:
        q = orders[i]
        options = ["id"]
        if i + 1 < r and orders[i + 1] == q:
            options.append("companion")
        w = _cube_root_of_unity(q)
        if w is not None:
            options.append("root")
        # the identity on a p-part, p != 3, leaves coinvariants that the
        # callers reject, so it is only used when nothing else fits
        choice = rng.choice(options[1:] or options)
        if choice == "companion":
            M[i][i], M[i][i + 1], M[i + 1][i], M[i + 1][i + 1] = 0, q - 1, 1, q - 1
            i += 2
            continue
        if choice == "root":
            M[i][i] = rng.choice([w, pow(w, 2, q)])
        i += 1
    return M


@dataclass(frozen=True)
class NormCase:
    group: FinAbGroup
    sigma: GroupEndo


def norm_cases(seed: int, max_order: int = 500, draws: int = 20) -> Iterator[Tuple[FinAbGroup, List[NormCase]]]:
    """For every abelian group of order at most ``max_order`` with ``9`` not
    dividing it, ``draws`` random automorphisms of order 3, conjugated by
    random automorphisms, kept when the coinvariants are 0 or ``C3``.
    """
    rng = random.Random(seed)
    for n in range(1, max_order + 1):
        if n % 9 == 0:
            continue
        for F in abelian_groups_of_order(n):
            orders = primary_orders(F)
            iso = cyclic_product(orders)
            cases = []
            for _ in range(draws):
                B = _order3_blocks(orders, rng)
                P, Pinv = random_unimodular(orders, rng)
                M = _mul(_mul(P, B, orders), Pinv, orders)
                sigma = iso.endo(M)
                if not (sigma ** 3).is_identity() or sigma.is_identity():
                    continue
                if coinvariants(F, sigma).group.invariant_factors not in ((), (3,)):
                    continue
                cases.append(NormCase(F, sigma))
            yield F, cases
