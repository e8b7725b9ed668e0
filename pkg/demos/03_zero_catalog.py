# coding: utf-8
"""Reading zero ordinates and counting them.

Run: python3 demos/03_zero_catalog.py
"""
import tempfile
from pathlib import Path

from rhverify.zeros import (cache_path_for, load_odlyzko, load_reference, riemann_von_mangoldt,
                            zeros_up_to)

# ## The bundled table
# 1600 ordinates to nine decimals, one per line, in the same plain format
# as the published tables.

cat = load_reference()
print(cat.count, "ordinates, last one", cat.t_max)
for T in (100.0, 300.0, 1000.0):
    n = len(zeros_up_to(cat, T))
    print(f"N({T:.0f}) = {n}   Riemann-von Mangoldt {riemann_von_mangoldt(T):.2f}")

# The two ordinates either side of 298 show why N(300) is 138.
print([round(z.t, 6) for z in zeros_up_to(cat, 300.0)[-2:]])

# ## Your own file
# Any decimal width parses; a binary cache lands next to the file and is
# reused until the text changes.

with tempfile.TemporaryDirectory() as d:
    p = Path(d) / "zeros.txt"
    p.write_text("14.134725142\n21.022039639\n25.010857580\n")
    small = load_odlyzko(p)
    print(small.count, "zeros; cache at", cache_path_for(p).name, cache_path_for(p).exists())
    # Asking beyond the table is an error rather than a silent short sum.
    try:
        zeros_up_to(small, 100.0)
    except Exception as exc:
        print(type(exc).__name__, exc)
