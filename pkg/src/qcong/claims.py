"""Congruence-claim model, verification runner, and congruence search.

A claim pins one finite-range statement about a biregular counting
sequence: coefficients on a progression vanish mod m, a progression
component matches an eta-product mod m, two progressions are proportional
mod m, or a conditional family holds once its hypothesis (evaluated by the
engine, never assumed) is true.  Reports carry the range checked and the
first counterexample on failure, and serialize to a versioned JSON schema.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from . import series as _series
from .dissect import SeriesExpr, eval_expr
from .etaq import BiregularSpec, biregular_gf
from .series import QSeries, ZZ, mod_ring

#: hard sanity bound on the deepest coefficient a catalogue claim may need
CLAIM_INDEX_LIMIT = 200_000

SCHEMA_VERSION = 1


def _check_progression(a: int, b: int, modulus: int, n_max: int) -> None:
    if a < 1 or b < 0:
        raise ValueError(f"progression {a}n+{b} is not valid")
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if a * n_max + b > CLAIM_INDEX_LIMIT:
        raise ValueError(
            f"claim needs coefficient {a * n_max + b}, beyond the "
            f"supported limit {CLAIM_INDEX_LIMIT}"
        )


@dataclass(frozen=True)
class VanishingClaim:
    """B(spec)(a*n + b) == 0 (mod m) for n_min <= n <= n_max."""

    id: str
    spec: BiregularSpec
    a: int
    b: int
    modulus: int
    n_max: int
    n_min: int = 0
    source: str = ""
    family: tuple | None = None  # (theorem id, primes, j) when instantiated

    kind = "vanishing"

    def __post_init__(self) -> None:
        _check_progression(self.a, self.b, self.modulus, self.n_max)

    def max_index(self) -> int:
        return self.a * self.n_max + self.b

    def params(self) -> dict:
        out = {"spec": str(self.spec), "progression": f"{self.a}n+{self.b}",
               "modulus": self.modulus, "n_min": self.n_min}
        if self.family:
            theorem, primes, j = self.family
            out["family"] = {"theorem": theorem, "primes": list(primes), "j": j}
        return out


@dataclass(frozen=True)
class SeriesCongruenceClaim:
    """sum_n B(spec)(a*n + b) q^n == scalar * target (mod m) to n_max."""

    id: str
    spec: BiregularSpec
    a: int
    b: int
    modulus: int
    scalar: int
    target: SeriesExpr
    n_max: int
    source: str = ""

    kind = "series-congruence"

    def __post_init__(self) -> None:
        _check_progression(self.a, self.b, self.modulus, self.n_max)

    def max_index(self) -> int:
        return self.a * self.n_max + self.b

    def params(self) -> dict:
        return {"spec": str(self.spec), "progression": f"{self.a}n+{self.b}",
                "modulus": self.modulus, "scalar": self.scalar}


@dataclass(frozen=True)
class MultiplicativeClaim:
    """B(spec)(A*n + B) == factor * B(spec)(C*n + D) (mod m) to n_max."""

    id: str
    spec: BiregularSpec
    lhs: tuple[int, int]
    rhs: tuple[int, int]
    factor: int
    modulus: int
    n_max: int
    source: str = ""

    kind = "multiplicative"

    def __post_init__(self) -> None:
        _check_progression(*self.lhs, self.modulus, self.n_max)
        _check_progression(*self.rhs, self.modulus, self.n_max)

    def max_index(self) -> int:
        return max(
            self.lhs[0] * self.n_max + self.lhs[1],
            self.rhs[0] * self.n_max + self.rhs[1],
        )

    def params(self) -> dict:
        return {"spec": str(self.spec),
                "lhs": f"{self.lhs[0]}n+{self.lhs[1]}",
                "rhs": f"{self.rhs[0]}n+{self.rhs[1]}",
                "factor": self.factor, "modulus": self.modulus}


@dataclass(frozen=True)
class NewmanConditionalClaim:
    """If B(spec)(hyp_index) == 0 (mod m), then B(spec)(a*n + b) == 0 (mod m)
    for all n <= n_max with p not dividing (stride*n + 1)."""

    id: str
    spec: BiregularSpec
    p: int
    k: int
    modulus: int
    stride: int  # 6 for the f(1)f(3) route, 4 for the f(1)f(5) route
    n_max: int
    source: str = ""

    kind = "newman-conditional"

    def __post_init__(self) -> None:
        if self.stride == 6:
            if self.p % 6 != 1:
                raise ValueError(f"need p == 1 (mod 6), got {self.p}")
        elif self.stride == 4:
            if self.p % 4 != 1:
                raise ValueError(f"need p == 1 (mod 4), got {self.p}")
        else:
            raise ValueError(f"stride must be 4 or 6, got {self.stride}")
        _check_progression(self.a, self.b, self.modulus, self.n_max)

    @property
    def a(self) -> int:
        scale = 3 if self.stride == 6 else 1
        return scale * self.stride * self.p ** (2 * self.k + 1)

    @property
    def b(self) -> int:
        scale = 3 if self.stride == 6 else 1
        return scale * self.p ** (2 * self.k + 1)

    @property
    def hyp_index(self) -> int:
        return (3 if self.stride == 6 else 1) * self.p

    def max_index(self) -> int:
        return max(self.a * self.n_max + self.b, self.hyp_index)

    def params(self) -> dict:
        return {"spec": str(self.spec), "p": self.p, "k": self.k,
                "modulus": self.modulus,
                "hypothesis": f"B({self.hyp_index}) == 0 (mod {self.modulus})",
                "conclusion": f"{self.a}n+{self.b}"}


Claim = Union[
    VanishingClaim, SeriesCongruenceClaim, MultiplicativeClaim, NewmanConditionalClaim
]


@dataclass
class VerificationReport:
    claim_id: str
    kind: str
    status: str  # "pass" | "fail" | "skipped-hypothesis-false"
    source: str
    params: dict
    range_checked: str
    counterexample: tuple | None
    millis: float
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def line(self) -> str:
        mark = {"pass": "PASS", "fail": "FAIL", "skipped-hypothesis-false": "SKIP"}[
            self.status
        ]
        extra = f"  <- {self.counterexample}" if self.counterexample else ""
        if self.note:
            extra += f"  ({self.note})"
        return f"[{mark}] {self.claim_id:24s} {self.range_checked}{extra}"


class SeriesCache:
    """Read-only cache of counting series keyed by (spec, modulus-or-exact)."""

    def __init__(self) -> None:
        self._store: dict[tuple, QSeries] = {}

    def series(self, spec: BiregularSpec, modulus: int | None, order: int) -> QSeries:
        key = (spec, modulus)
        cached = self._store.get(key)
        if cached is None or cached.order < order:
            ring = ZZ if modulus is None else mod_ring(modulus)
            cached = biregular_gf(spec, order, ring)
            self._store[key] = cached
        return cached


def _ring_modulus(claim: Claim, exact: bool) -> int | None:
    return None if exact else claim.modulus


# ---------------------------------------------------------------------------
# verifiers


def verify_vanishing(
    claim: VanishingClaim, cache: SeriesCache | None = None, exact: bool = False
) -> VerificationReport:
    cache = cache or SeriesCache()
    t0 = time.perf_counter()
    gf = cache.series(claim.spec, _ring_modulus(claim, exact), claim.max_index())
    status, counter = "pass", None
    for n in range(claim.n_min, claim.n_max + 1):
        value = gf[claim.a * n + claim.b] % claim.modulus
        if value:
            status, counter = "fail", (n, value)
            break
    return VerificationReport(
        claim.id, claim.kind, status, claim.source, claim.params(),
        f"n in [{claim.n_min}, {claim.n_max}]", counter,
        (time.perf_counter() - t0) * 1000,
        note="finite-range check only",
    )


def verify_series_congruence(
    claim: SeriesCongruenceClaim, cache: SeriesCache | None = None, exact: bool = False
) -> VerificationReport:
    cache = cache or SeriesCache()
    t0 = time.perf_counter()
    gf = cache.series(claim.spec, _ring_modulus(claim, exact), claim.max_index())
    ring = gf.ring
    target = eval_expr(claim.target, claim.n_max, ring).scale(claim.scalar)
    status, counter = "pass", None
    for n in range(claim.n_max + 1):
        lhs = gf[claim.a * n + claim.b] % claim.modulus
        rhs = target[n] % claim.modulus
        if lhs != rhs:
            status, counter = "fail", (n, lhs, rhs)
            break
    return VerificationReport(
        claim.id, claim.kind, status, claim.source, claim.params(),
        f"n in [0, {claim.n_max}]", counter,
        (time.perf_counter() - t0) * 1000,
    )


def verify_multiplicative(
    claim: MultiplicativeClaim, cache: SeriesCache | None = None, exact: bool = False
) -> VerificationReport:
    cache = cache or SeriesCache()
    t0 = time.perf_counter()
    gf = cache.series(claim.spec, _ring_modulus(claim, exact), claim.max_index())
    (a1, b1), (a2, b2) = claim.lhs, claim.rhs
    status, counter = "pass", None
    for n in range(claim.n_max + 1):
        lhs = gf[a1 * n + b1]
        rhs = gf[a2 * n + b2]
        if (lhs - claim.factor * rhs) % claim.modulus:
            status = "fail"
            counter = (n, lhs % claim.modulus, rhs % claim.modulus)
            break
    return VerificationReport(
        claim.id, claim.kind, status, claim.source, claim.params(),
        f"n in [0, {claim.n_max}]", counter,
        (time.perf_counter() - t0) * 1000,
    )


def verify_newman_conditional(
    claim: NewmanConditionalClaim, cache: SeriesCache | None = None, exact: bool = False
) -> VerificationReport:
    cache = cache or SeriesCache()
    t0 = time.perf_counter()
    gf = cache.series(claim.spec, _ring_modulus(claim, exact), claim.max_index())
    hyp = gf[claim.hyp_index] % claim.modulus
    if hyp:
        return VerificationReport(
            claim.id, claim.kind, "skipped-hypothesis-false", claim.source,
            claim.params(), f"hypothesis index {claim.hyp_index}", None,
            (time.perf_counter() - t0) * 1000,
            note=f"hypothesis value {hyp} (mod {claim.modulus})",
        )
    status, counter = "pass", None
    checked = 0
    for n in range(claim.n_max + 1):
        if (claim.stride * n + 1) % claim.p == 0:
            continue  # excluded class
        checked += 1
        value = gf[claim.a * n + claim.b] % claim.modulus
        if value:
            status, counter = "fail", (n, value)
            break
    return VerificationReport(
        claim.id, claim.kind, status, claim.source, claim.params(),
        f"n in [0, {claim.n_max}], {checked} admissible", counter,
        (time.perf_counter() - t0) * 1000,
        note="hypothesis engine-evaluated true",
    )


_VERIFIERS = {
    VanishingClaim: verify_vanishing,
    SeriesCongruenceClaim: verify_series_congruence,
    MultiplicativeClaim: verify_multiplicative,
    NewmanConditionalClaim: verify_newman_conditional,
}


def verify_claim(
    claim: Claim, cache: SeriesCache | None = None, exact: bool = False
) -> VerificationReport:
    return _VERIFIERS[type(claim)](claim, cache, exact)


# ---------------------------------------------------------------------------
# family instantiation

#: family theorems: progression a = stride*scale*prod(p_i^2),
#: b = (stride*j + p_last) * scale * prod(p_i^2, i<last) * p_last
FAMILY_THEOREMS = {
    "thm3.2": dict(spec=BiregularSpec(2, 9), stride=6, scale=1, modulus=8,
                   bad_class=1, class_mod=6, min_p=5,
                   source="Theorem on 6 p^2-progressions mod 8 for (2,9)"),
    "thm3.6": dict(spec=BiregularSpec(2, 9), stride=6, scale=3, modulus=3,
                   bad_class=1, class_mod=6, min_p=5,
                   source="Theorem on 18 p^2-progressions mod 3 for (2,9)"),
    "thm4.8.t3": dict(spec=BiregularSpec(5, 8), stride=4, scale=1, modulus=8,
                      bad_class=1, class_mod=4, min_p=3,
                      source="Theorem on 4 p^2-progressions mod 8 for (5,8)"),
    "thm4.8.t4": dict(spec=BiregularSpec(5, 16), stride=4, scale=1, modulus=8,
                      bad_class=1, class_mod=4, min_p=3,
                      source="Theorem on 4 p^2-progressions mod 8 for (5,16)"),
    "thm18": dict(spec=BiregularSpec(5, 2), stride=4, scale=1, modulus=4,
                  bad_class=1, class_mod=4, min_p=3,
                  source="Theorem on 4 p^2-progressions mod 4 for (5,2)"),
    "thm5.8": dict(spec=BiregularSpec(5, 4), stride=4, scale=1, modulus=4,
                   bad_class=1, class_mod=4, min_p=3,
                   source="Theorem on 4 p^2-progressions mod 4 for (5,4)"),
}


def instantiate_family(
    theorem: str, primes_list: Sequence[int], j: int, n_max: int,
    claim_id: str | None = None,
) -> VanishingClaim:
    """Build the concrete vanishing claim for a family theorem instance.

    ``primes_list`` is p_1 .. p_{k+1}; every prime must avoid the excluded
    residue class, and j must not be divisible by the last prime.
    """
    from .arith import is_prime

    if theorem not in FAMILY_THEOREMS:
        raise ValueError(f"unknown family theorem {theorem!r}")
    cfg = FAMILY_THEOREMS[theorem]
    if not primes_list:
        raise ValueError("need at least one prime")
    for p in primes_list:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < cfg["min_p"]:
            raise ValueError(f"prime {p} below the smallest admissible {cfg['min_p']}")
        if p % cfg["class_mod"] == cfg["bad_class"]:
            raise ValueError(
                f"prime {p} lies in the excluded class "
                f"{cfg['bad_class']} mod {cfg['class_mod']}"
            )
        if math.gcd(p, cfg["spec"].l1 * cfg["spec"].l2 * cfg["stride"]) > 1:
            raise ValueError(f"prime {p} divides the ambient level data")
    p_last = primes_list[-1]
    if j % p_last == 0:
        raise ValueError(f"j = {j} is divisible by the last prime {p_last}")
    square_all = 1
    for p in primes_list:
        square_all *= p * p
    square_head = square_all // (p_last * p_last)
    a = cfg["stride"] * cfg["scale"] * square_all
    b = (cfg["stride"] * j + p_last) * cfg["scale"] * square_head * p_last
    label = claim_id or (
        f"{theorem}.p{'p'.join(str(p) for p in primes_list)}.j{j}"
    )
    return VanishingClaim(
        id=label, spec=cfg["spec"], a=a, b=b, modulus=cfg["modulus"], n_max=n_max,
        source=cfg["source"], family=(theorem, tuple(primes_list), j),
    )


# ---------------------------------------------------------------------------
# runner and search


def run_catalogue(
    claims: Iterable[Claim] | None = None,
    filter_substring: str | None = None,
    n_max_override: int | None = None,
    exact: bool = False,
) -> list[VerificationReport]:
    """Verify claims in catalogue order; deterministic report list."""
    from .catalogue import builtin_catalogue

    if claims is None:
        claims = builtin_catalogue()
    cache = SeriesCache()
    reports = []
    for claim in claims:
        if filter_substring and (
            filter_substring not in claim.id
            and filter_substring not in str(claim.spec)
        ):
            continue
        if n_max_override is not None and n_max_override < claim.n_max:
            claim = _with_n_max(claim, n_max_override)
        reports.append(verify_claim(claim, cache, exact))
    return reports


def _with_n_max(claim: Claim, n_max: int) -> Claim:
    from dataclasses import replace

    return replace(claim, n_max=n_max)


@dataclass(frozen=True)
class SearchHit:
    a: int
    b: int
    modulus: int
    n_checked: int
    known: bool  # already in the builtin catalogue


def search_congruences(
    spec: BiregularSpec,
    a_max: int,
    moduli: Sequence[int],
    n_max: int,
    min_evidence: int = 10,
) -> list[SearchHit]:
    """All (a <= a_max, b < a, m) with B(spec)(a*n+b) == 0 (mod m), n <= n_max."""
    for m in moduli:
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
    if n_max < min_evidence:
        raise ValueError(f"n_max {n_max} below the evidence floor {min_evidence}")
    from .catalogue import builtin_catalogue

    known = {
        (c.a, c.b, c.modulus)
        for c in builtin_catalogue()
        if isinstance(c, VanishingClaim) and c.spec == spec and c.n_min == 0
    }
    gf = biregular_gf(spec, a_max * (n_max + 1), ZZ)
    hits = []
    for a in range(1, a_max + 1):
        for b in range(a):
            residues = [gf[a * n + b] for n in range(n_max + 1)]
            for m in sorted(moduli):
                if all(v % m == 0 for v in residues):
                    hits.append(SearchHit(a, b, m, n_max + 1, (a, b, m) in known))
    return hits


# ---------------------------------------------------------------------------
# JSON report schema


def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "engine": {"max_order": _series.MAX_ORDER},
        "claims": [
            {
                "id": r.claim_id,
                "paper_ref": r.source,
                "kind": r.kind,
                "params": r.params,
                "status": r.status,
                "range": r.range_checked,
                **({"counterexample": list(r.counterexample)} if r.counterexample else {}),
                "millis": round(r.millis, 3),
            }
            for r in reports
        ],
    }
    return json.dumps(doc, indent=2)
