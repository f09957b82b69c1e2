"""Cross-section lattices of the basic (J-irreducible) Renner monoids.

For the monoid attached to the fundamental weight ``mu_i`` the nonzero
idempotents of the lattice are indexed by the subsets ``J`` of simple
reflections none of whose connected components avoid generator ``i``.
For such a ``J`` the group ``W^*(e)`` is generated by ``J`` itself and
``W_*(e)`` by the generators of ``J0 = S - {i}`` outside ``J`` that commute
with all of ``J``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import UsageError
from .rootsys import CartanType, RootSystem, build_root_system

__all__ = [
    "IdempotentDescriptor",
    "CrossSectionLattice",
    "stabilizer_j0",
    "build_lattice",
    "we_generators",
    "connected_components",
]

# Names used in the published E6 tables, keyed by lambda^*(e).
_E6_W1_LABELS = {
    (): "e_0",
    (1,): "e_1",
    (1, 3): "e_2",
    (1, 3, 4): "e_3",
    (1, 2, 3, 4): "e_4",
    (1, 2, 3, 4, 5): "e_5",
    (1, 3, 4, 5): "e_6",
    (1, 3, 4, 5, 6): "e_7",
    (1, 2, 3, 4, 5, 6): "e_8",
}


@dataclass(frozen=True)
class IdempotentDescriptor:
    label: str
    lambda_star: tuple[int, ...] = ()
    lambda_sub: tuple[int, ...] = ()
    is_zero: bool = False


@dataclass(frozen=True)
class CrossSectionLattice:
    cartan_type: CartanType
    weight_index: int
    j0: tuple[int, ...]
    idempotents: tuple[IdempotentDescriptor, ...]

    def __getitem__(self, label: str) -> IdempotentDescriptor:
        for e in self.idempotents:
            if e.label == label:
                return e
        raise UsageError(f"unknown idempotent {label!r} (have {', '.join(self.labels)})")

    @property
    def labels(self) -> list[str]:
        return [e.label for e in self.idempotents]

    @property
    def nonzero(self) -> list[IdempotentDescriptor]:
        return [e for e in self.idempotents if not e.is_zero]


def _as_root_system(ct) -> RootSystem:
    if isinstance(ct, RootSystem):
        return ct
    return build_root_system(ct)


def stabilizer_j0(ct, weight_index: int) -> tuple[int, ...]:
    """Simple reflections fixing the fundamental weight ``mu_weight_index``."""
    rs = _as_root_system(ct)
    if not 1 <= weight_index <= rs.rank:
        raise UsageError(f"weight index {weight_index} out of range 1..{rs.rank}")
    # <mu_i, alpha_j^vee> = delta_ij
    return tuple(j for j in range(1, rs.rank + 1) if j != weight_index)


def connected_components(rs: RootSystem, J) -> list[tuple[int, ...]]:
    """Connected components of the Dynkin subgraph on ``J``."""
    remaining = set(J)
    comps = []
    while remaining:
        stack = [min(remaining)]
        comp = set(stack)
        while stack:
            v = stack.pop()
            for u in list(remaining - comp):
                if rs.adjacency[v - 1, u - 1]:
                    comp.add(u)
                    stack.append(u)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    return comps


def build_lattice(ct, weight_index: int) -> CrossSectionLattice:
    rs = _as_root_system(ct)
    j0 = stabilizer_j0(rs, weight_index)
    gens = range(1, rs.rank + 1)
    stars = []
    for k in range(rs.rank + 1):
        for J in combinations(gens, k):
            if all(not set(c) <= set(j0) for c in connected_components(rs, J)):
                stars.append(J)
    stars.sort(key=lambda J: (len(J), J))

    pinned = rs.cartan_type == CartanType("E", 6) and weight_index == 1
    descriptors = []
    for k, J in enumerate(stars):
        sub = tuple(s for s in j0 if s not in J and all(rs.commute(s, t) for t in J))
        label = _E6_W1_LABELS[J] if pinned else f"e[{k}]"
        descriptors.append(IdempotentDescriptor(label, J, sub))
    if pinned:
        descriptors.sort(key=lambda e: int(e.label[2:]))
    zero = IdempotentDescriptor("zero", is_zero=True)
    return CrossSectionLattice(rs.cartan_type, weight_index, j0, (zero, *descriptors))


def we_generators(e: IdempotentDescriptor) -> tuple[int, ...]:
    """Generators of ``W(e)``, the centralizer of ``e`` in ``W``."""
    if e.is_zero:
        raise UsageError("the zero idempotent has no coset space; it forms its own class")
    return tuple(sorted(e.lambda_star + e.lambda_sub))
