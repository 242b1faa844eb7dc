#!/usr/bin/env python3
"""Regenerate src/specfun_reference.inc: 50 sample points per Bessel function
evaluated with mpmath at 50 significant digits.

Sample points are drawn log-uniformly over each function's declared domain
with a fixed seed, so the table is reproducible:

    python3 tools/gen_specfun_reference.py > src/specfun_reference.inc
"""

import random

import mpmath

mpmath.mp.dps = 50

DOMAINS = {
    # name: (kind, order, lo, hi)
    "K0": ("k", 0, 1e-6, 700.0),
    "K1": ("k", 1, 1e-6, 700.0),
    "K2": ("k", 2, 1e-6, 700.0),
    "J0": ("j", 0, 1e-6, 1e4),
    "J1": ("j", 1, 1e-6, 1e4),
    "Y0": ("y", 0, 1e-6, 1e4),
    "Y1": ("y", 1, 1e-6, 1e4),
}
POINTS = 50


def evaluate(kind, order, x):
    x = mpmath.mpf(x)
    if kind == "k":
        return mpmath.besselk(order, x)
    if kind == "j":
        return mpmath.besselj(order, x)
    return mpmath.bessely(order, x)


def main():
    rng = random.Random(20160713)
    print("// Generated by tools/gen_specfun_reference.py -- do not edit.")
    print("// {kind, order, x, reference value} with mpmath at 50 digits.")
    for name, (kind, order, lo, hi) in DOMAINS.items():
        llo, lhi = mpmath.log10(lo), mpmath.log10(hi)
        for _ in range(POINTS):
            x = float(mpmath.mpf(10) ** (llo + (lhi - llo) * rng.random()))
            ref = evaluate(kind, order, x)
            print(f"{{'{kind}', {order}, {x!r}, {mpmath.nstr(ref, 20, min_fixed=1, max_fixed=0)}}},")


if __name__ == "__main__":
    main()
