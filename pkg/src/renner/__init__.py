"""Conjugacy classes of basic Renner monoids.

The pipeline runs root system -> Weyl group -> cross-section lattice ->
orbits of ``W(e)`` on ``W / W_*(e)``:

>>> from renner import build_root_system, enumerate_group, build_lattice, enumerate_catalog
>>> rs = build_root_system("A2")
>>> gt = enumerate_group(rs)
>>> enumerate_catalog(gt, build_lattice(rs, 1)).total_classes
10
"""

__version__ = "0.1.0"

from .conjorbit import (
    ClassCatalog,
    ClassRecord,
    CosetSpace,
    OrbitPartition,
    act_by_generator,
    are_conjugate,
    build_coset_space,
    enumerate_catalog,
    enumerate_orbits,
    parse_fixture,
    verify_transversal,
)
from .crosslat import CrossSectionLattice, IdempotentDescriptor, build_lattice, stabilizer_j0, we_generators
from .errors import CapacityError, ConfigurationError, FixtureError, RennerError, UsageError
from .oracle import naive_orbits, rook_class_count, weyl_classes_by_conjugation
from .rootsys import CartanType, RootSystem, build_root_system, reflect
from .weyl import (
    GroupTable,
    canonicalize_coset,
    enumerate_group,
    length_of,
    minimal_coset_reps,
    shortlex_word,
    subgroup_elements,
    word_to_element,
)
