#!/usr/bin/env python3
"""Generate the bundled table of Riemann zeta zero ordinates.

Dev-time utility: writes one ordinate per line (17 significant digits) for the
first NZEROS zeros, using mpmath's zetazero.  The package itself never
computes zeros; it only loads tables like the one this script produces.

Run:  python tools/generate_zeros.py [nzeros] [outfile]
"""
import sys

import mpmath


def main() -> None:
    nzeros = int(sys.argv[1]) if len(sys.argv) > 1 else 1000
    out = sys.argv[2] if len(sys.argv) > 2 else "src/zetacorr/data/zeros_1000.txt"
    mpmath.mp.dps = 25
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("# Ordinates of the first %d nontrivial Riemann zeta zeros\n" % nzeros)
        fh.write("# (imaginary parts, one per line, 17 significant digits)\n")
        for n in range(1, nzeros + 1):
            gamma = mpmath.zetazero(n).imag
            fh.write(mpmath.nstr(gamma, 17, strip_zeros=False) + "\n")
            if n % 100 == 0:
                print("zero %d: %s" % (n, mpmath.nstr(gamma, 17)), flush=True)
    print("wrote %s" % out)


if __name__ == "__main__":
    main()
