"""
Cross-section lattices
======================

The basic Renner monoid attached to a fundamental weight has one idempotent
per admissible generator subset. Each carries two parabolic subgroups:
``W^*(e)`` and ``W_*(e)``.
"""

from renner import build_lattice, we_generators
from renner.export import lattice_text

# For E6 and the first fundamental weight the lattice has ten elements.
lat = build_lattice("E6", 1)
print(lattice_text(lat))

# W(e), the centralizer of e, is generated by both sets together.
for e in lat.nonzero:
    print(e.label, "W(e) =", we_generators(e))

# Other types work the same way; labels are then generic.
print(lattice_text(build_lattice("B3", 2)))
