"""Builtin catalogue of the congruence claims under verification.

One entry per stated congruence (vanishing, series congruence,
multiplicative relation, family instance, or Newman-type conditional),
with finite verification ranges chosen so the deepest coefficient
needed stays modest; product-of-squares family instances get short
ranges by necessity.

``KNOWN_FAILING`` lists the catalogued statements the engine refutes,
each with its first counterexample.  All of them sit in the mod-8
branches of the t-parametrized families at t >= 3, where the final
power-series reduction step only holds mod 4; the counterexamples are
confirmed independently by the brute-force counting oracle.
"""

from __future__ import annotations

from .claims import (
    Claim,
    MultiplicativeClaim,
    NewmanConditionalClaim,
    SeriesCongruenceClaim,
    VanishingClaim,
    instantiate_family,
)
from .dissect import expr, mono
from .etaq import BiregularSpec

SPEC29 = BiregularSpec(2, 9)
SPEC52 = BiregularSpec(5, 2)
SPEC54 = BiregularSpec(5, 4)
SPEC83 = BiregularSpec(8, 3)

F1_4 = expr(mono(1, 0, {1: 4}))
F1F3 = expr(mono(1, 0, {1: 1, 3: 1}))
F1F5 = expr(mono(1, 0, {1: 1, 5: 1}))
F1_2 = expr(mono(1, 0, {1: 2}))
F1_3 = expr(mono(1, 0, {1: 3}))
EQ3_20_TARGET = expr(mono(1, 0, {2: 2, 6: 2, 1: -1, 3: -1}))


def hecke_sign_4_20(p: int) -> int:
    """Multiplier in the weight-1 two-case recursion: -(-20 | p).

    Equals -1 for p == 3, 7 (mod 20) and +1 for p == 11, 19 (mod 20).
    """
    from .arith import kronecker

    return -kronecker(-20, p)


#: statements from the source catalogue that the engine refutes; id -> note
KNOWN_FAILING: dict[str, str] = {
    "eq4.7.t3":
        "B(5,8)(9) = 122 == 2 (mod 8) but 2 f(1)f(5) needs 6; holds mod 4",
    "eq4.7.t4":
        "B(5,16)(17) == 4 (mod 8) but 2 f(1)f(5) needs 0; holds mod 4",
    "thm4.10.t3.p3":
        "n=0: B(5,8)(9) == 2 (mod 8) but -B(5,8)(1) == 6; the f(p) = -1 "
        "instances fail mod 8 (f(p) = +1 instances such as p=11 verify)",
    "thm4.8.t4.p7.j1":
        "n=2: B(5,16)(469) == 4 (mod 8); the t=4 family fails mod 8 "
        "(it does hold mod 4, and the t=3 family verifies mod 8)",
    "coro4.9.ex.t4":
        "same progression as thm4.8.t4.p7.j1; n=2: B(5,16)(469) == 4 (mod 8)",
    "coro4.11.t4.p3k2":
        "n=0: B(5,16)(81) == 6 (mod 8) but B(5,16)(1) == 2",
    "thm8.1a.t3":
        "n=3: B(4,27)(9) = 106 == 2 (mod 8); the 3n-progression claim "
        "fails mod 8 at t=3 (it verifies at t=2)",
}


def _catalogue_2_9() -> list[Claim]:
    prop_31 = "Proposition: B(2,9) on 6n+3 and 6n+5"
    prop_34 = "Proposition: B(2,9) on 12n+7 and 12n+1"
    prop_35 = "Proposition: B(2,9) on 18n+15 and 54n+45"
    return [
        VanishingClaim("prop3.1a", SPEC29, 6, 3, 4, 80, source=prop_31),
        VanishingClaim("prop3.1b", SPEC29, 6, 5, 8, 80, source=prop_31),
        VanishingClaim("prop3.4a", SPEC29, 12, 7, 8, 80, source=prop_34),
        VanishingClaim("prop3.4b", SPEC29, 12, 1, 2, 80, source=prop_34),
        VanishingClaim("prop3.5a", SPEC29, 18, 15, 3, 60, source=prop_35),
        VanishingClaim("prop3.5b", SPEC29, 54, 45, 3, 60, source=prop_35),
        SeriesCongruenceClaim(
            "eq13a", SPEC29, 6, 1, 8, 2, F1_4, 80,
            source="6n+1 component == 2 f(1)^4 mod 8",
        ),
        SeriesCongruenceClaim(
            "eq3.19", SPEC29, 18, 3, 3, 1,
            expr(mono(1, 0, {2: 3, 3: 2, 1: -2, 6: -1})), 60,
            source="18n+3 component mod 3 (unreduced form)",
        ),
        SeriesCongruenceClaim(
            "eq800a", SPEC29, 18, 3, 3, 1, F1_4, 60,
            source="18n+3 component == f(1)^4 mod 3",
        ),
        SeriesCongruenceClaim(
            "eq815a1", SPEC29, 18, 3, 3, 1, F1F3, 60,
            source="18n+3 component == f(1)f(3) mod 3",
        ),
        SeriesCongruenceClaim(
            "eq3.20", SPEC29, 18, 9, 3, 1, EQ3_20_TARGET, 60,
            source="18n+9 component mod 3",
        ),
        instantiate_family("thm3.2", [5], 1, 25, claim_id="thm3.2.p5.j1"),
        instantiate_family("thm3.2", [5], 2, 25, claim_id="thm3.2.p5.j2"),
        instantiate_family("thm3.2", [5, 11], 1, 3, claim_id="thm3.2.p5p11.j1"),
        instantiate_family("thm3.2", [5], 1, 25, claim_id="coro1.ex"),
        MultiplicativeClaim(
            "thm2.p5.k1", SPEC29, (150, 25), (6, 1), -5, 8, 60,
            source="B(2,9)(150n+25) == -5 B(2,9)(6n+1) mod 8",
        ),
        MultiplicativeClaim(
            "coro1.1.p5.k1", SPEC29, (150, 25), (6, 1), -5, 8, 60,
            source="even-power corollary, k=1",
        ),
        MultiplicativeClaim(
            "coro1.1.p5.k2", SPEC29, (3750, 625), (6, 1), 25, 8, 2,
            source="even-power corollary, k=2",
        ),
        instantiate_family("thm3.6", [5], 1, 10, claim_id="thm3.6.p5.j1"),
        instantiate_family("thm3.6", [5], 2, 10, claim_id="thm3.6.p5.j2"),
        instantiate_family("thm3.6", [5, 5], 1, 3, claim_id="thm3.6.p5p5.j1"),
        instantiate_family("thm3.6", [5], 1, 10, claim_id="coro3a.ex"),
        MultiplicativeClaim(
            "thm9a.p5.k1", SPEC29, (450, 75), (18, 3), -5, 3, 25,
            source="B(2,9)(450n+75) == -5 B(2,9)(18n+3) mod 3",
        ),
        # the printed right side reads B(6n+1); the relation that actually
        # holds (and that the surrounding chain proves) targets B(18n+3)
        MultiplicativeClaim(
            "coro4a.p5.k1", SPEC29, (450, 75), (18, 3), -5, 3, 25,
            source="even-power corollary mod 3, k=1 (right side corrected)",
        ),
        NewmanConditionalClaim(
            "thm10a.p7", SPEC29, 7, 0, 3, 6, 60,
            source="conditional family from the f(1)f(3) recursion, p=7",
        ),
        NewmanConditionalClaim(
            "thm10a.p13", SPEC29, 13, 0, 3, 6, 20,
            source="conditional family from the f(1)f(3) recursion, p=13",
        ),
    ]


def _catalogue_5_2t(t: int) -> list[Claim]:
    spec = BiregularSpec(5, 2**t)
    tag = f"t{t}"
    claims: list[Claim] = [
        SeriesCongruenceClaim(
            f"eq4.7.{tag}", spec, 4, 1, 8, 2, F1F5, 80,
            source=f"4n+1 component == 2 f(1)f(5) mod 8 ({spec})",
        ),
        instantiate_family(
            f"thm4.8.{tag}", [7], 1, 20, claim_id=f"thm4.8.{tag}.p7.j1"
        ),
        instantiate_family(
            f"thm4.8.{tag}", [7], 1, 20, claim_id=f"coro4.9.ex.{tag}"
        ),
        MultiplicativeClaim(
            f"thm4.10.{tag}.p11", spec, (484, 121), (4, 1), hecke_sign_4_20(11),
            8, 10, source=f"B{spec}(484n+121) == B{spec}(4n+1) mod 8",
        ),
        MultiplicativeClaim(
            f"thm4.10.{tag}.p3", spec, (36, 9), (4, 1), hecke_sign_4_20(3),
            8, 60, source=f"B{spec}(36n+9) == -B{spec}(4n+1) mod 8",
        ) if t == 3 else None,
        MultiplicativeClaim(
            f"coro4.11.{tag}.p3k2", spec, (324, 81), (4, 1), hecke_sign_4_20(3) ** 2,
            8, 14, source=f"B{spec}(324n+81) == B{spec}(4n+1) mod 8",
        ),
        NewmanConditionalClaim(
            f"thm4.12.{tag}.p5", spec, 5, 0, 8, 4, 60,
            source=f"conditional family from the f(1)f(5) recursion, p=5 ({spec})",
        ),
        NewmanConditionalClaim(
            f"thm4.12.{tag}.p13", spec, 13, 0, 8, 4, 60,
            source=f"conditional family from the f(1)f(5) recursion, p=13 ({spec})",
        ),
    ]
    if t == 3:
        claims.append(
            instantiate_family(
                f"thm4.8.{tag}", [3, 7], 1, 3, claim_id=f"thm4.8.{tag}.p3p7.j1"
            )
        )
    return [c for c in claims if c is not None]


def _catalogue_5_2_and_5_4() -> list[Claim]:
    out: list[Claim] = []
    for spec, tag, thm in ((SPEC52, "5.2", "thm18"), (SPEC54, "5.4", "thm5.8")):
        prop = "prop5.1" if spec == SPEC52 else "prop6a"
        out += [
            VanishingClaim(prop, spec, 4, 3, 4, 100,
                           source=f"B{spec}(4n+3) == 0 mod 4"),
            SeriesCongruenceClaim(
                "eq4.4b" if spec == SPEC52 else "prop6b",
                spec, 4, 1, 4, 2, F1F5, 100,
                source=f"4n+1 component == 2 f(1)f(5) mod 4 ({spec})",
            ),
            instantiate_family(thm, [7], 1, 25, claim_id=f"{thm}.p7.j1"),
            instantiate_family(thm, [3, 7], 1, 3, claim_id=f"{thm}.p3p7.j1"),
            MultiplicativeClaim(
                f"{'thm9b' if spec == SPEC52 else 'thm5.10'}.p3.k1",
                spec, (36, 9), (4, 1), hecke_sign_4_20(3), 4, 60,
                source=f"B{spec}(36n+9) == -B{spec}(4n+1) mod 4",
            ),
            MultiplicativeClaim(
                f"{'coro4b' if spec == SPEC52 else 'coro5.11'}.p3k2",
                spec, (324, 81), (4, 1), 1, 4, 15,
                source=f"B{spec}(324n+81) == B{spec}(4n+1) mod 4",
            ),
        ]
    return out


def _catalogue_8_3() -> list[Claim]:
    return [
        VanishingClaim("thm7.1", SPEC83, 36, 33, 3, 60,
                       source="B(8,3)(36n+33) == 0 mod 3"),
        VanishingClaim("eq28", SPEC83, 4, 3, 3, 100,
                       source="B(8,3)(4n+3) == 0 mod 3 (intermediate step)"),
    ]


def _catalogue_4_3t(t: int) -> list[Claim]:
    spec = BiregularSpec(4, 3**t)
    tag = f"t{t}"
    src = f"five-part theorem for {spec}"
    return [
        VanishingClaim(f"thm8.1a.{tag}", spec, 3, 0, 8, 60, n_min=1, source=src),
        VanishingClaim(f"thm8.1b.{tag}", spec, 6, 4, 4, 60, source=src),
        VanishingClaim(f"thm8.1c.{tag}", spec, 12, 7, 4, 60, source=src),
        SeriesCongruenceClaim(f"thm8.1d.{tag}", spec, 12, 1, 4, 2, F1_2, 60,
                              source=src + " (12n+1 component == 2 f(1)^2 mod 4)"),
        VanishingClaim(f"thm8.1e.{tag}", spec, 3, 2, 4, 60, source=src),
    ]


def _catalogue_3_2t(t: int) -> list[Claim]:
    spec = BiregularSpec(3, 2**t)
    tag = f"t{t}"
    src = f"16n+r theorem for {spec}"
    return [
        VanishingClaim(f"thm9.1a.{tag}", spec, 16, 6, 8, 60, source=src),
        VanishingClaim(f"thm9.1b.{tag}", spec, 16, 10, 8, 60, source=src),
        VanishingClaim(f"thm9.1c.{tag}", spec, 16, 14, 8, 60, source=src),
        SeriesCongruenceClaim(f"eq10.8.{tag}", spec, 16, 2, 8, 4, F1_3, 50,
                              source=f"16n+2 component == 4 f(1)^3 mod 8 ({spec})"),
    ]


def builtin_catalogue() -> list[Claim]:
    out: list[Claim] = []
    out += _catalogue_2_9()
    for t in (3, 4):
        out += _catalogue_5_2t(t)
    out += _catalogue_5_2_and_5_4()
    out += _catalogue_8_3()
    for t in (2, 3):
        out += _catalogue_4_3t(t)
    for t in (2, 3):
        out += _catalogue_3_2t(t)
    ids = [c.id for c in out]
    assert len(ids) == len(set(ids)), "duplicate claim ids in catalogue"
    return out


def claim_by_id(claim_id: str) -> Claim:
    for claim in builtin_catalogue():
        if claim.id == claim_id:
            return claim
    raise KeyError(f"unknown claim id {claim_id!r}")
