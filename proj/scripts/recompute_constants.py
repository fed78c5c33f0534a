#!/usr/bin/env python3
"""Independent recomputation of the EPTAS constants (c, delta, s, t, z).

Uses exact rationals for c and delta and mpmath for s and t so the result does
not share any floating-point path with the C++ implementation.

Usage:
  recompute_constants.py EPS BETA D [S_CAP T_CAP]
  recompute_constants.py --check BINARY   # compares against `BINARY params --json`
"""
import json
import math
import subprocess
import sys
from fractions import Fraction

import mpmath

mpmath.mp.dps = 60


def constants(eps, beta, d, s_cap=None, t_cap=None):
    eps = Fraction(eps)
    beta = Fraction(beta)
    x = 1 / (beta * eps)
    c = 8 * (x * x + x + 1)
    delta = eps / c
    delta_mp = mpmath.mpf(delta.numerator) / delta.denominator
    s_real = 10 * d / delta_mp * mpmath.log(1 / delta_mp)
    s = int(mpmath.ceil(s_real))
    z = int(math.ceil(4 * x)) + 2
    blocks = int(math.floor(2 * x)) + 1

    def t_of(s_val):
        p = (mpmath.mpf(beta.numerator) / beta.denominator / 2) ** s_val
        return mpmath.ceil(mpmath.log(mpmath.mpf("1e-10")) / mpmath.log1p(-p))

    out = {
        "c": float(c),
        "delta": float(delta),
        "s": s,
        "log10_t": float(mpmath.log10(t_of(s))),
        "z": z,
        "blocks": blocks,
    }
    t_faithful = t_of(s)
    if t_faithful < mpmath.mpf(2) ** 63:
        out["t"] = int(t_faithful)
    if s_cap is not None:
        s_eff = min(s, int(s_cap))
        t_eff = t_of(s_eff)
        out["practical_s"] = s_eff
        out["practical_t_uncapped"] = int(t_eff) if t_eff < mpmath.mpf(2) ** 63 else None
        out["practical_t"] = int(min(t_eff, int(t_cap)))
    return out


CASES = [
    # eps, beta, d, s_cap, t_cap
    ("1", "1", 1, 4, 1000),
    ("0.5", "1", 4, 4, 1000),
    ("0.2", "1/6", 4, 4, 1000),
    ("0.2", "1/25", 4, 3, 1000),
    ("0.9", "1", 1, 2, 100000),
    ("0.5", "1", 1, 1, 1000),
]


def main():
    if len(sys.argv) >= 3 and sys.argv[1] == "--check":
        binary = sys.argv[2]
        failures = 0
        for eps, beta, d, s_cap, t_cap in CASES:
            want = constants(eps, beta, d, s_cap, t_cap)
            beta_f = float(Fraction(beta))
            cmd = [binary, "params", "--epsilon", str(float(Fraction(eps))), "--beta", repr(beta_f),
                   "--d", str(d), "--s-cap", str(s_cap), "--t-cap", str(t_cap), "--json"]
            got = json.loads(subprocess.check_output(cmd))
            faithful = got["faithful"]
            practical = got["practical"]
            checks = [
                ("s", faithful["s"] == want["s"]),
                ("z", faithful["z"] == want["z"]),
                ("c", math.isclose(faithful["c"], want["c"], rel_tol=1e-12)),
                ("log10_t", math.isclose(faithful["log10_t"], want["log10_t"], rel_tol=1e-9)),
                ("practical_s", practical["s"] == want["practical_s"]),
                ("practical_t", practical["t"] == want["practical_t"]),
            ]
            if "t" in want:
                checks.append(("t", faithful.get("t") == want["t"]))
            for name, ok in checks:
                if not ok:
                    failures += 1
                    print(f"MISMATCH eps={eps} beta={beta} d={d} {name}: got {got} want {want}")
        print("ok" if failures == 0 else f"{failures} mismatches")
        sys.exit(1 if failures else 0)
    args = sys.argv[1:]
    if len(args) not in (3, 5):
        print(__doc__)
        sys.exit(2)
    eps, beta, d = args[0], args[1], int(args[2])
    extra = (int(args[3]), int(args[4])) if len(args) == 5 else (None, None)
    print(json.dumps(constants(eps, beta, d, *extra), indent=2))


if __name__ == "__main__":
    main()
