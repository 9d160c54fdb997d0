"""Number-theoretic scalars: Kronecker symbols, eta-quotient modularity
conditions, cusp orders, congruence-subgroup index, prime sieving.

Cusp orders are computed with exact rational arithmetic; they decide
holomorphy, so rounding is not acceptable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .etaq import EtaQuotient


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes() -> Iterator[int]:
    yield 2
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def factorize(n: int) -> dict[int, int]:
    if n <= 0:
        raise ValueError(f"need a positive integer, got {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), the full extension of Jacobi/Legendre."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out twos of n: (a|2) = 0 for even a, else (-1)^((a^2-1)/8)
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # now n odd positive: Jacobi with reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def gamma0_index(level: int) -> int:
    """Index of the level-N congruence subgroup: N * prod (1 + 1/p)."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    num, den = level, 1
    for p in factorize(level):
        num *= p + 1
        den *= p
    assert num % den == 0
    return num // den


def primes_in_class(residue: int, modulus: int, count: int) -> list[int]:
    """First ``count`` primes congruent to residue mod modulus, ascending."""
    if modulus < 1 or count < 0:
        raise ValueError("need modulus >= 1 and count >= 0")
    found: list[int] = []
    if math.gcd(residue % modulus if modulus > 1 else 0, modulus) > 1:
        # at most one prime can sit in such a class
        for p in primes():
            if p % modulus == residue % modulus:
                found.append(p)
                break
            if p > modulus:
                break
        if len(found) < count:
            raise ValueError(
                f"class {residue} mod {modulus} holds at most {len(found)} primes"
            )
        return found[:count]
    for p in primes():
        if p % modulus == residue % modulus:
            found.append(p)
            if len(found) == count:
                break
    return found


@dataclass(frozen=True)
class Cusp:
    """Rational cusp c/d with gcd(c, d) = 1."""

    c: int
    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"cusp denominator must be positive, got {self.d}")
        if math.gcd(self.c, self.d) != 1:
            raise ValueError(f"cusp {self.c}/{self.d} not in lowest terms")

    def __str__(self) -> str:
        return f"{self.c}/{self.d}"


def cusp_order(eq: EtaQuotient, level: int, cusp: Cusp) -> Fraction:
    """Vanishing order of the eta-quotient at c/d, exact rational.

    (N/24) * sum_delta gcd(d, delta)^2 * r_delta / (gcd(d, N/d) * d * delta);
    the value depends only on the denominator d.
    """
    d = cusp.d
    if level % d != 0:
        raise ValueError(f"cusp denominator {d} must divide the level {level}")
    total = Fraction(0)
    for delta, r in eq.terms:
        if level % delta != 0:
            raise ValueError(f"delta {delta} does not divide the level {level}")
        g = math.gcd(d, delta)
        total += Fraction(g * g * r, math.gcd(d, level // d) * d * delta)
    return Fraction(level, 24) * total


@dataclass(frozen=True)
class ModularityReport:
    """Outcome of the eta-quotient transformation-law checks at a level."""

    level: int
    weight: Fraction
    weight_integral: bool
    delta_condition: bool     # sum delta * r_delta == 0 (mod 24)
    codelta_condition: bool   # sum (N/delta) * r_delta == 0 (mod 24)
    character_sign: int       # (-1)^weight when integral, else 0
    character_s: tuple[tuple[int, int], ...]  # prime factorization of prod delta^r
    cusp_orders: tuple[tuple[Cusp, Fraction], ...]

    @property
    def transforms(self) -> bool:
        return self.weight_integral and self.delta_condition and self.codelta_condition

    def character_top(self) -> int:
        """Squarefree kernel of (-1)^k * s, the top of the character symbol."""
        top = self.character_sign
        for p, e in self.character_s:
            if e % 2:
                top *= p
        return top

    def character(self, d: int) -> int:
        if math.gcd(d, self.level) > 1:
            return 0
        return kronecker(self.character_top(), d)


def modularity_check(eq: EtaQuotient, level: int) -> ModularityReport:
    """Weight, 24-divisibility conditions, character data, and cusp orders."""
    for delta, _ in eq.terms:
        if level % delta != 0:
            raise ValueError(f"delta {delta} does not divide the level {level}")
    weight = Fraction(sum(r for _, r in eq.terms), 2)
    delta_sum = sum(delta * r for delta, r in eq.terms)
    codelta_sum = sum((level // delta) * r for delta, r in eq.terms)
    s_factors: dict[int, int] = {}
    for delta, r in eq.terms:
        if delta == 1:
            continue
        for p, e in factorize(delta).items():
            s_factors[p] = s_factors.get(p, 0) + e * r
    sign = 0
    if weight.denominator == 1:
        sign = -1 if weight.numerator % 2 else 1
    orders = tuple(
        (Cusp(1, d), cusp_order(eq, level, Cusp(1, d))) for d in divisors(level)
    )
    return ModularityReport(
        level=level,
        weight=weight,
        weight_integral=weight.denominator == 1,
        delta_condition=delta_sum % 24 == 0,
        codelta_condition=codelta_sum % 24 == 0,
        character_sign=sign,
        character_s=tuple(sorted((p, e) for p, e in s_factors.items() if e != 0)),
        cusp_orders=orders,
    )


def is_holomorphic(eq: EtaQuotient, level: int) -> tuple[bool, list[Cusp]]:
    """True when the order at one representative cusp per divisor is >= 0.

    The order formula depends only on the cusp denominator, so one
    representative per divisor of the level suffices.  Requires the
    transformation-law conditions to hold.
    """
    report = modularity_check(eq, level)
    if not report.transforms:
        raise ValueError(
            "transformation-law conditions fail; holomorphy check is undefined"
        )
    offending = [cusp for cusp, order in report.cusp_orders if order < 0]
    return (not offending, offending)


def valence_total(eq: EtaQuotient, level: int) -> Fraction:
    """Sum of cusp orders weighted by the number of cusps per denominator.

    For a holomorphic eta-quotient with all zeros at cusps this equals
    weight * index / 12; used as a consistency diagnostic.
    """
    total = Fraction(0)
    for d in divisors(level):
        multiplicity = _euler_phi(math.gcd(d, level // d))
        total += multiplicity * cusp_order(eq, level, Cusp(1, d))
    return total


def _euler_phi(n: int) -> int:
    out = n
    for p in factorize(n) if n > 1 else {}:
        out = out // p * (p - 1)
    return out
