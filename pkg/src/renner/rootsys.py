"""Finite crystallographic root systems in simple-root coordinates.

Generators are numbered from 1 to ``rank`` following Bourbaki, which for
E6 is the chain 1-3-4-5-6 with node 2 attached to node 4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ConfigurationError, UsageError

__all__ = [
    "CartanType",
    "RootSystem",
    "cartan_matrix",
    "build_root_system",
    "reflect",
]

_FAMILIES = "ABCDEFG"


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES or len(self.family) != 1:
            raise ConfigurationError(f"unknown Cartan family {self.family!r}")
        if not isinstance(self.rank, (int, np.integer)) or self.rank < 1:
            raise ConfigurationError(f"rank must be a positive integer, got {self.rank!r}")
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 1,
            "C": self.rank >= 1,
            "D": self.rank >= 2,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }[self.family]
        if not ok:
            raise ConfigurationError(f"invalid rank {self.rank} for family {self.family}")

    @classmethod
    def parse(cls, name: str) -> "CartanType":
        """Parse strings such as ``"E6"`` or ``"a3"``."""
        name = name.strip()
        if len(name) < 2 or not name[1:].isdigit():
            raise ConfigurationError(f"cannot parse Cartan type {name!r}")
        return cls(name[0].upper(), int(name[1:]))

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> np.ndarray:
    """Cartan matrix with entries ``A[i, j] = <alpha_j, alpha_i^vee>``.

    Indices are zero-based here; generator ``k`` corresponds to row ``k - 1``.
    """
    n, fam = ct.rank, ct.family
    a = 2 * np.eye(n, dtype=np.int64)

    def link(i, j, aij=-1, aji=-1):
        a[i, j] = aij
        a[j, i] = aji

    if fam in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2 and fam == "B":
            # alpha_n short
            a[n - 1, n - 2] = -2
        elif n >= 2 and fam == "C":
            # alpha_n long
            a[n - 2, n - 1] = -2
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 1)
    elif fam == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)
    return a


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Roots as integer vectors in the simple-root basis.

    Positive roots occupy indices ``0 .. num_positive - 1`` sorted by
    (height, coordinates); root ``k + num_positive`` is the negative of
    root ``k``.  ``reflection_table[i, r]`` is the index of ``s_{i+1}(r)``.
    """

    cartan_type: CartanType
    cartan: np.ndarray
    roots: np.ndarray
    num_positive: int
    reflection_table: np.ndarray
    _index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def num_roots(self) -> int:
        return len(self.roots)

    def index_of(self, coords) -> int:
        """Index of the root with the given simple-root coordinates."""
        key = tuple(int(c) for c in coords)
        try:
            return self._index[key]
        except KeyError:
            raise UsageError(f"{key} is not a root of {self.cartan_type}") from None

    def simple_root(self, gen: int) -> int:
        """Index of the simple root ``alpha_gen`` (1-based generator)."""
        self._check_gen(gen)
        return self._index[tuple(int(j == gen - 1) for j in range(self.rank))]

    def negate(self, r):
        """Index of ``-root`` for an index or array of indices."""
        return (np.asarray(r) + self.num_positive) % self.num_roots

    def is_positive(self, r) -> bool:
        return r < self.num_positive

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Boolean Dynkin adjacency (zero-based)."""
        adj = self.cartan != 0
        np.fill_diagonal(adj, False)
        return adj

    def commute(self, i: int, j: int) -> bool:
        """True if generators ``i`` and ``j`` (1-based) commute."""
        return i == j or self.cartan[i - 1, j - 1] == 0

    def _check_gen(self, gen):
        if not 1 <= gen <= self.rank:
            raise UsageError(f"generator {gen} out of range 1..{self.rank}")


def _reflect_coords(cartan, i, beta):
    # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
    out = list(beta)
    out[i] -= sum(c * cartan[i, j] for j, c in enumerate(beta))
    return tuple(out)


def build_root_system(ct: CartanType | str) -> RootSystem:
    """Close the simple roots under the simple reflections."""
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    cartan = cartan_matrix(ct)
    n = ct.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                gamma = _reflect_coords(cartan, i, beta)
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt

    positive = sorted((r for r in seen if all(c >= 0 for c in r)), key=lambda r: (sum(r), r))
    if 2 * len(positive) != len(seen):
        raise RuntimeError("root closure is not symmetric under negation")
    ordered = positive + [tuple(-c for c in r) for r in positive]
    index = {r: k for k, r in enumerate(ordered)}

    table = np.empty((n, len(ordered)), dtype=np.int64)
    for i in range(n):
        for k, beta in enumerate(ordered):
            table[i, k] = index[_reflect_coords(cartan, i, beta)]

    roots = np.array(ordered, dtype=np.int64)
    cartan.setflags(write=False)
    roots.setflags(write=False)
    table.setflags(write=False)
    return RootSystem(ct, cartan, roots, len(positive), table, index)


def reflect(rs: RootSystem, gen: int, r: int) -> int:
    """Index of ``s_gen`` applied to root ``r``."""
    rs._check_gen(gen)
    if not 0 <= r < rs.num_roots:
        raise UsageError(f"root index {r} out of range 0..{rs.num_roots - 1}")
    return int(rs.reflection_table[gen - 1, r])
