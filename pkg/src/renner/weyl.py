"""Weyl groups enumerated as permutations of roots.

Every element gets a dense integer id; id 0 is the identity and ids follow
breadth-first order from the identity, with ties broken by generator index.
Products with simple reflections are precomputed on both sides, so all
downstream work is table lookups.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, UsageError
from .rootsys import CartanType, RootSystem

__all__ = [
    "DEFAULT_SIZE_LIMIT",
    "GroupTable",
    "predicted_order",
    "enumerate_group",
    "length_of",
    "shortlex_word",
    "word_to_element",
    "minimal_coset_reps",
    "canonicalize_coset",
    "subgroup_elements",
]

DEFAULT_SIZE_LIMIT = 10**7

_EXCEPTIONAL_ORDERS = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}


def predicted_order(ct: CartanType) -> int:
    """Order of the Weyl group of ``ct``, from the classical formulas."""
    n = ct.rank
    if ct.family == "A":
        return math.factorial(n + 1)
    if ct.family in "BC":
        return 2**n * math.factorial(n)
    if ct.family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return _EXCEPTIONAL_ORDERS[ct.family, n]


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A fully enumerated Weyl group.

    Generators are 1-based in the public API; the tables are indexed by
    ``gen - 1`` in their second axis.
    """

    root_system: RootSystem
    perms: np.ndarray  # (order, num_roots); perms[w, r] = index of w(root r)
    right_mul: np.ndarray  # (order, rank); w -> w * s
    left_mul: np.ndarray  # (order, rank); w -> s * w
    length: np.ndarray
    inverse: np.ndarray
    _keys: np.ndarray
    _key_order: np.ndarray
    _key_weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def rank(self) -> int:
        return self.root_system.rank

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def longest(self) -> int:
        return int(np.argmax(self.length))

    def check_gens(self, gens: Iterable[int]) -> tuple[int, ...]:
        gens = tuple(sorted(set(int(g) for g in gens)))
        for g in gens:
            if not 1 <= g <= self.rank:
                raise UsageError(f"generator {g} out of range 1..{self.rank}")
        return gens

    def lookup(self, perms: np.ndarray) -> np.ndarray:
        """Element ids of an array of root permutations (rows)."""
        perms = np.atleast_2d(perms)
        keys = _perm_keys(perms, self._key_weights, self.rank)
        pos = np.searchsorted(self._keys, keys)
        pos = np.minimum(pos, len(self._keys) - 1)
        if not np.array_equal(self._keys[pos], keys):
            raise UsageError("permutation is not an element of the group")
        return self._key_order[pos]

    def multiply(self, a, b) -> np.ndarray | int:
        """Product ``a * b`` computed by composing root permutations.

        Either argument may be an array of ids; the result broadcasts.
        """
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        out = self.lookup(self.perms[a.ravel()][np.arange(a.size)[:, None], self.perms[b.ravel()]])
        if a.ndim == 0:
            return int(out[0])
        return out.reshape(a.shape)

    def rmul(self, w, gen: int):
        return self.right_mul[w, gen - 1]

    def lmul(self, w, gen: int):
        return self.left_mul[w, gen - 1]

    def conjugate_by_gen(self, w, gen: int):
        """``s w s`` for the simple reflection ``s = s_gen``."""
        return self.left_mul[self.right_mul[w, gen - 1], gen - 1]


def _perm_keys(perms, weights, rank):
    # a Weyl element is determined by the images of the simple roots
    return perms[:, :rank].astype(np.uint64) @ weights


def enumerate_group(rs: RootSystem, size_limit: int = DEFAULT_SIZE_LIMIT) -> GroupTable:
    """Enumerate ``W`` by breadth-first closure of the simple reflections.

    Raises :class:`CapacityError` before doing any work when the known
    group order exceeds ``size_limit``.
    """
    expected = predicted_order(rs.cartan_type)
    if expected > size_limit:
        raise CapacityError(
            f"Weyl group of {rs.cartan_type} has order {expected}, above size limit {size_limit}"
        )
    nroots, rank = rs.num_roots, rs.rank
    dtype = np.uint8 if nroots <= 256 else np.uint16
    gens = rs.reflection_table.astype(dtype)
    weights = np.array([nroots**k for k in range(rank)], dtype=np.uint64)

    identity = np.arange(nroots, dtype=dtype)[None, :]
    levels = [identity]
    seen_keys = _perm_keys(identity, weights, rank)
    frontier = identity
    while len(frontier):
        # candidates ordered by (parent id, generator) as a queue-based BFS would visit them
        cand = frontier[:, gens].reshape(-1, nroots)  # w * s: w(s(r))
        keys = _perm_keys(cand, weights, rank)
        uniq, first = np.unique(keys, return_index=True)
        fresh = ~np.isin(uniq, seen_keys, assume_unique=True)
        first = np.sort(first[fresh])
        frontier = cand[first]
        if len(frontier):
            levels.append(frontier)
            seen_keys = np.concatenate([seen_keys, keys[first]])
        if len(seen_keys) > size_limit:
            raise CapacityError(f"enumeration exceeded size limit {size_limit}")

    perms = np.concatenate(levels)
    if len(perms) != expected:
        raise RuntimeError(f"enumerated {len(perms)} elements, expected {expected}")
    keys = _perm_keys(perms, weights, rank)
    key_order = np.argsort(keys)
    sorted_keys = keys[key_order]

    def ids(p):
        return key_order[np.searchsorted(sorted_keys, _perm_keys(p, weights, rank))]

    right_mul = np.stack([ids(perms[:, gens[i]]) for i in range(rank)], axis=1)
    left_mul = np.stack([ids(gens[i][perms]) for i in range(rank)], axis=1)
    length = (perms[:, : rs.num_positive] >= rs.num_positive).sum(axis=1).astype(np.int64)
    inv_perms = np.empty_like(perms)
    np.put_along_axis(inv_perms, perms.astype(np.int64), np.arange(nroots, dtype=dtype)[None, :], axis=1)
    inverse = ids(inv_perms)

    for arr in (perms, right_mul, left_mul, length, inverse, sorted_keys, key_order):
        arr.setflags(write=False)
    return GroupTable(rs, perms, right_mul, left_mul, length, inverse, sorted_keys, key_order, weights)


def length_of(gt: GroupTable, w: int) -> int:
    return int(gt.length[w])


def shortlex_word(gt: GroupTable, w: int) -> list[int]:
    """Lexicographically least reduced word of ``w``.

    Built by repeatedly peeling off the smallest left descent.
    """
    word = []
    w = int(w)
    length, left = gt.length, gt.left_mul
    while w != 0:
        for i in range(gt.rank):
            v = left[w, i]
            if length[v] < length[w]:
                word.append(i + 1)
                w = int(v)
                break
    return word


def word_to_element(gt: GroupTable, word: Sequence[int]) -> int:
    """Evaluate ``[p, q, ..., r]`` as the product ``s_p s_q ... s_r``."""
    w = 0
    for g in word:
        if not 1 <= g <= gt.rank:
            raise UsageError(f"generator {g} out of range 1..{gt.rank}")
        w = gt.right_mul[w, g - 1]
    return int(w)


def minimal_coset_reps(gt: GroupTable, J: Iterable[int]) -> np.ndarray:
    """Sorted ids of the minimal-length representatives of ``W / W_J``."""
    J = gt.check_gens(J)
    mask = np.ones(gt.order, dtype=bool)
    for j in J:
        mask &= gt.length[gt.right_mul[:, j - 1]] > gt.length
    return np.flatnonzero(mask)


def canonicalize_coset(gt: GroupTable, u, J: Iterable[int]):
    """Minimal representative of ``u W_J``; ``u`` may be an id or an array.

    Right descents in ``J`` are removed greedily; in a Coxeter group this
    always terminates at the unique minimal element of the coset.
    """
    J = gt.check_gens(J)
    scalar = np.ndim(u) == 0
    x = np.array(u, dtype=np.int64, ndmin=1)
    length, right = gt.length, gt.right_mul
    changed = bool(J)
    while changed:
        changed = False
        for j in J:
            y = right[x, j - 1]
            down = length[y] < length[x]
            if down.any():
                x = np.where(down, y, x)
                changed = True
    return int(x[0]) if scalar else x


def subgroup_elements(gt: GroupTable, J: Iterable[int]) -> set[int]:
    """Elements of the parabolic subgroup ``W_J`` by breadth-first closure."""
    J = gt.check_gens(J)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for w in frontier:
            for j in J:
                v = int(gt.right_mul[w, j - 1])
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen
