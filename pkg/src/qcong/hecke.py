"""Hecke operator action on q-expansions, eigenform checks, and the
Newman three-term coefficient recursions for f(1)f(3) and f(1)f(5).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import is_prime, kronecker
from .etaq import EtaQuotient, materialize_eta, pochhammer
from .series import CheckResult, QSeries, Ring, ZZ


@dataclass(frozen=True)
class HeckeContext:
    """Weight, level, and Nebentypus data for a T_p action.

    ``chi_top`` is the top of the character symbol, so the character is
    d -> kronecker(chi_top, d), forced to 0 when gcd(d, level) > 1.
    """

    weight: int
    level: int
    chi_top: int

    def character(self, d: int) -> int:
        import math

        if math.gcd(d, self.level) > 1:
            return 0
        return kronecker(self.chi_top, d)


#: eta(6z)^4: weight 2, level 36, trivial character (top is a square).
ETA6_4_CONTEXT = HeckeContext(weight=2, level=36, chi_top=6**4)
#: eta(4z)eta(20z): weight 1, level 80, character (-20 | d).
ETA4_20_CONTEXT = HeckeContext(weight=1, level=80, chi_top=-20)


@lru_cache(maxsize=32)
def eta6_4(order: int, ring: Ring = ZZ) -> QSeries:
    """q-expansion of eta(6z)^4 = q * f(6)^4."""
    series, _ = materialize_eta(EtaQuotient.of({6: 4}, level=36), order, ring)
    return series


@lru_cache(maxsize=32)
def eta4_20(order: int, ring: Ring = ZZ) -> QSeries:
    """q-expansion of eta(4z)eta(20z) = q * f(4) f(20)."""
    series, _ = materialize_eta(EtaQuotient.of({4: 1, 20: 1}, level=80), order, ring)
    return series


def apply_tp(a: QSeries, p: int, ctx: HeckeContext, n_max: int | None = None) -> QSeries:
    """T_p action: result(n) = a(p*n) + chi(p) * p^(k-1) * a(n/p)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    out_order = a.order // p if n_max is None else n_max
    if a.order < p * out_order:
        raise ValueError(
            f"input order {a.order} cannot certify T_{p} output to {out_order}"
        )
    chi_p_pk = ctx.character(p) * p ** (ctx.weight - 1)
    red = a.ring.reduce
    coeffs = []
    for n in range(out_order + 1):
        value = a.coeffs[p * n]
        if n % p == 0:
            value += chi_p_pk * a.coeffs[n // p]
        coeffs.append(red(value))
    return QSeries(a.ring, tuple(coeffs))


@dataclass(frozen=True)
class EigenResult:
    ok: bool
    eigenvalue: int | None = None
    failure_index: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def eigen_check(a: QSeries, p: int, ctx: HeckeContext, n_max: int) -> EigenResult:
    """Is a a T_p eigenform to n_max?  Requires normalization a(1) = 1.

    On success returns the (integer) eigenvalue, which equals the
    coefficient of T_p a at n = 1.
    """
    if a[1] != 1:
        raise ValueError(f"series not normalized: coefficient at q^1 is {a[1]}")
    if a.order < p * n_max:
        raise ValueError(f"need order >= {p * n_max} to check to n_max={n_max}")
    image = apply_tp(a, p, ctx, n_max)
    lam = image[1]
    for n in range(n_max + 1):
        if image.coeffs[n] != a.ring.reduce(lam * a.coeffs[n]):
            return EigenResult(
                False, None, n,
                f"T_{p} image differs from {lam} * series at n={n}",
            )
    return EigenResult(True, lam, None, f"eigenvalue {lam} verified to n={n_max}")


def vanishing_class_check(a: QSeries, modulus: int, residue: int, n_max: int) -> CheckResult:
    """Do all coefficients vanish outside the class n == residue (mod modulus)?"""
    if n_max > a.order:
        raise ValueError(f"n_max {n_max} exceeds certified order {a.order}")
    for n in range(n_max + 1):
        if n % modulus != residue and a.coeffs[n] != 0:
            return CheckResult(
                False, n, f"nonzero coefficient {a.coeffs[n]} at n={n}"
            )
    return CheckResult(True, None, f"supported on {residue} mod {modulus} to n={n_max}")


#: Newman recursion parameters per product: (c, D) with the recursion
#: u(p*n + w) = u(w)*u(n) - (-1)^((p-1)/2) (D|p) u((n-w)/p),  w = (p-1)/c,
#: valid for primes p == 1 (mod c); the last term drops when its argument
#: is not a non-negative integer.
NEWMAN_PARAMS = {"f1f3": (6, 3), "f1f5": (4, 5)}


@lru_cache(maxsize=8)
def newman_series(product: str, order: int) -> QSeries:
    if product == "f1f3":
        return pochhammer(1, order, ZZ) * pochhammer(3, order, ZZ)
    if product == "f1f5":
        return pochhammer(1, order, ZZ) * pochhammer(5, order, ZZ)
    raise ValueError(f"unknown product {product!r}; know {sorted(NEWMAN_PARAMS)}")


def newman_check(product: str, p: int, n_max: int) -> CheckResult:
    """Verify the three-term recursion coefficientwise for n <= n_max."""
    if product not in NEWMAN_PARAMS:
        raise ValueError(f"unknown product {product!r}; know {sorted(NEWMAN_PARAMS)}")
    c, dd = NEWMAN_PARAMS[product]
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if p % c != 1:
        raise ValueError(f"need p == 1 (mod {c}) for {product}, got p={p}")
    w = (p - 1) // c
    u = newman_series(product, p * n_max + w)
    sign = -1 if (p - 1) // 2 % 2 else 1
    symbol = kronecker(dd, p)
    for n in range(n_max + 1):
        back = 0
        if (n - w) % p == 0 and (n - w) // p >= 0:
            back = u.coeffs[(n - w) // p]
        expected = u.coeffs[w] * u.coeffs[n] - sign * symbol * back
        got = u.coeffs[p * n + w]
        if got != expected:
            return CheckResult(False, n, f"u({p}*{n}+{w}) = {got}, expected {expected}")
    return CheckResult(True, None, f"{product} recursion at p={p} holds to n={n_max}")
