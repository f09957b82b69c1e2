"""
The E6 class catalog
====================

Enumerate every conjugacy class of the first basic Renner monoid of type
E6 and write it out in the three supported formats.
"""

import time
from pathlib import Path

from renner import build_lattice, build_root_system, enumerate_catalog, enumerate_group
from renner.export import catalog_csv, catalog_json, catalog_paper

t0 = time.perf_counter()
rs = build_root_system("E6")
gt = enumerate_group(rs)
catalog = enumerate_catalog(gt, build_lattice(rs, 1))
print(f"{catalog.total_classes} classes in {time.perf_counter() - t0:.2f}s")

for label, n in catalog.counts().items():
    print(f"  {label:5s} {n:4d}")

# The top idempotent is the identity, so its classes are the 25 conjugacy
# classes of W(E6) itself.
for record in catalog["e_8"].classes[:6]:
    print(record.rep_word, "length", record.min_length, "size", record.orbit_size)

out = Path("e6_catalog")
out.mkdir(exist_ok=True)
(out / "classes.json").write_text(catalog_json(catalog))
(out / "classes.csv").write_text(catalog_csv(catalog))
(out / "classes.txt").write_text(catalog_paper(catalog))
print("wrote", sorted(p.name for p in out.iterdir()))
