#!/usr/bin/env python3
"""Regenerates region_grid_e1.csv by exact evaluation with fractions.Fraction.

Kept separate from the C++ code on purpose: the CSV is a frozen regression
fixture for the region-grid output at e = 1.
"""
from fractions import Fraction as F
import sys


def nec(a, b, e):
    return a**6 + 3 * a**4 * b + 3 * a**2 * b**2 + 2 * b**3 - 2 * a * b * e - e**2


def suf(a, b, e):
    return 9 * a**2 * b**2 + 27 * b**3 - 32 * a**3 * e - 108 * a * b * e - 108 * e**2


def special(a, b, e):
    return b**3 == 4 * a * b * e + 8 * e**2


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def main(out):
    e, step = F(1), F(1, 2)
    out.write("a,b,nec32,suf33,special35\n")
    a = F(-10)
    while a <= 10:
        b = F(-20)
        while b <= 8:
            out.write(f"{fmt(a)},{fmt(b)},{int(nec(a, b, e) >= 0)},{int(suf(a, b, e) >= 0)},{int(special(a, b, e))}\n")
            b += step
        a += step


if __name__ == "__main__":
    main(sys.stdout)
