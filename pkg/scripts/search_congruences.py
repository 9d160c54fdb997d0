#!/usr/bin/env python3
"""Search small progression boxes for vanishing congruences.

Scans every catalogued counting sequence for progressions a*n+b with all
coefficients divisible by a target modulus, flagging the ones already in
the claim catalogue.  Useful for spotting candidates the theorems do not
cover (for example B(2,9)(4n+3) == 0 mod 4 shows up immediately).
"""

import argparse
import sys

from qcong.claims import search_congruences
from qcong.etaq import BiregularSpec

DEFAULT_SPECS = ["2,9", "5,2", "5,4", "8,3", "4,9", "3,4", "5,8"]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--specs", nargs="*", default=DEFAULT_SPECS)
    parser.add_argument("--amax", type=int, default=12)
    parser.add_argument("--mods", default="3,4,8")
    parser.add_argument("--nmax", type=int, default=80)
    args = parser.parse_args()

    moduli = [int(m) for m in args.mods.split(",")]
    for text in args.specs:
        l1, l2 = (int(x) for x in text.split(","))
        spec = BiregularSpec(l1, l2)
        hits = search_congruences(spec, args.amax, moduli, args.nmax)
        fresh = [h for h in hits if not h.known]
        print(f"{spec}: {len(hits)} patterns, {len(fresh)} not in the catalogue")
        for h in hits:
            tag = "known" if h.known else "candidate"
            print(f"  B{spec}({h.a}n+{h.b}) == 0 (mod {h.modulus})  [{tag}]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
