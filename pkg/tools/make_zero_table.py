"""Regenerate the bundled zero-ordinate table in Odlyzko's plain-text layout.

The published ``zeros1`` file is not shipped with this repository, so the first
``COUNT`` ordinates are recomputed with :func:`mpmath.zetazero` and rounded to
nine decimals, which is the precision of the published table.

    python tools/make_zero_table.py [COUNT] [OUT]
"""
import sys
from concurrent.futures import ProcessPoolExecutor

import mpmath

COUNT = 1600
OUT = "src/rhverify/data/zeros1_head.txt"


def ordinate(n):
    mpmath.mp.dps = 25
    return mpmath.nstr(mpmath.zetazero(n).imag, 20, strip_zeros=False)


def main(argv):
    count = int(argv[1]) if len(argv) > 1 else COUNT
    out = argv[2] if len(argv) > 2 else OUT
    with ProcessPoolExecutor() as pool:
        values = list(pool.map(ordinate, range(1, count + 1), chunksize=16))
    with open(out, "w") as fh:
        for v in values:
            fh.write("%15.9f\n" % float(v))


if __name__ == "__main__":
    main(sys.argv)
