"""Brute-force reference computations for cross-checking the fast path.

Nothing here uses coset canonicalization or the minimal-representative
machinery: cosets are literal sets of group elements, conjugated element
by element and compared by set equality.
"""

from __future__ import annotations

import numpy as np

from .crosslat import IdempotentDescriptor, build_lattice
from .errors import CapacityError
from .rootsys import CartanType
from .weyl import GroupTable, enumerate_group

__all__ = [
    "NAIVE_GROUP_LIMIT",
    "NAIVE_COSET_LIMIT",
    "explicit_cosets",
    "conjugate_coset",
    "naive_orbits",
    "weyl_classes_by_conjugation",
    "rook_class_count",
]

NAIVE_GROUP_LIMIT = 10**4
NAIVE_COSET_LIMIT = 100


def _parabolic(gt: GroupTable, gens) -> np.ndarray:
    members = [0]
    seen = {0}
    i = 0
    while i < len(members):
        w = members[i]
        i += 1
        for g in gens:
            v = int(gt.right_mul[w, g - 1])
            if v not in seen:
                seen.add(v)
                members.append(v)
    return np.array(sorted(members), dtype=np.int64)


def explicit_cosets(gt: GroupTable, gens) -> list[frozenset[int]]:
    """All left cosets ``u W_J`` as explicit element sets."""
    sub = _parabolic(gt, gens)
    covered = np.zeros(gt.order, dtype=bool)
    cosets = []
    for u in range(gt.order):
        if covered[u]:
            continue
        members = gt.multiply(np.full(len(sub), u), sub)
        covered[members] = True
        cosets.append(frozenset(members.tolist()))
    return cosets


def conjugate_coset(gt: GroupTable, coset: frozenset[int], s: int) -> frozenset[int]:
    """``s C s`` computed on every member of ``C``."""
    members = np.fromiter(coset, dtype=np.int64, count=len(coset))
    return frozenset(gt.conjugate_by_gen(members, s).tolist())


def naive_orbits(gt: GroupTable, e: IdempotentDescriptor) -> list[int]:
    """Sorted orbit sizes of ``W(e)`` acting on explicit cosets of ``W_*(e)``."""
    if e.is_zero:
        return [1]
    n_sub = len(_parabolic(gt, e.lambda_sub))
    if gt.order > NAIVE_GROUP_LIMIT and gt.order // n_sub > NAIVE_COSET_LIMIT:
        raise CapacityError(
            f"naive orbit oracle needs |W| <= {NAIVE_GROUP_LIMIT} or at most "
            f"{NAIVE_COSET_LIMIT} cosets; got |W| = {gt.order}, {gt.order // n_sub} cosets"
        )
    cosets = explicit_cosets(gt, e.lambda_sub)
    known = set(cosets)
    gens = sorted(set(e.lambda_star) | set(e.lambda_sub))
    unseen = set(cosets)
    sizes = []
    for start in cosets:
        if start not in unseen:
            continue
        unseen.discard(start)
        orbit = [start]
        for c in orbit:
            for s in gens:
                d = conjugate_coset(gt, c, s)
                if d not in known:
                    raise RuntimeError("conjugated set is not a coset; action ill-defined")
                if d in unseen:
                    unseen.discard(d)
                    orbit.append(d)
        sizes.append(len(orbit))
    return sorted(sizes)


def weyl_classes_by_conjugation(gt: GroupTable) -> list[tuple[int, int]]:
    """Conjugacy classes of ``W`` as sorted ``(size, min length)`` pairs."""
    cls = np.full(gt.order, -1, dtype=np.int64)
    out = []
    for start in range(gt.order):
        if cls[start] >= 0:
            continue
        cls[start] = start
        frontier = np.array([start])
        members = [frontier]
        while len(frontier):
            nxt = np.unique(np.concatenate([gt.conjugate_by_gen(frontier, s) for s in gt.generators]))
            nxt = nxt[cls[nxt] < 0]
            cls[nxt] = start
            members.append(nxt)
            frontier = nxt
        allm = np.concatenate(members)
        out.append((len(allm), int(gt.length[allm].min())))
    return sorted(out)


def rook_class_count(n: int) -> int:
    """Number of classes for type ``A_{n-1}`` with the first fundamental weight.

    Every idempotent is cross-checked against :func:`naive_orbits` before the
    total is returned.
    """
    from .conjorbit import enumerate_catalog
    from .rootsys import build_root_system

    if not 2 <= n <= 5:
        raise CapacityError(f"rook_class_count supports 2 <= n <= 5, got {n}")
    rs = build_root_system(CartanType("A", n - 1))
    gt = enumerate_group(rs)
    lattice = build_lattice(rs, 1)
    catalog = enumerate_catalog(gt, lattice)
    for block in catalog.per_idempotent:
        fast = sorted(r.orbit_size for r in block.classes)
        naive = naive_orbits(gt, block.idempotent)
        if fast != naive:
            raise AssertionError(f"{block.label}: fast orbits {fast} != naive {naive}")
    return catalog.total_classes


SELFTEST_TYPES = ("A1", "A2", "A3", "B2", "B3")


def selftest(deep: bool = False):
    """Yield ``(name, passed, detail)`` for each oracle-equivalence check.

    The default run covers every fundamental weight of the small types in
    ``SELFTEST_TYPES``; ``deep`` adds E6 checks for ``e_0`` and ``e_8``.
    """
    from .conjorbit import build_coset_space, enumerate_orbits
    from .rootsys import build_root_system

    def fast_sizes(gt, e):
        if e.is_zero:
            return [1]
        return sorted(enumerate_orbits(gt, build_coset_space(gt, e)).orbit_sizes.tolist())

    for name in SELFTEST_TYPES:
        rs = build_root_system(name)
        gt = enumerate_group(rs)
        for i in range(1, rs.rank + 1):
            lattice = build_lattice(rs, i)
            for e in lattice.idempotents:
                fast, naive = fast_sizes(gt, e), naive_orbits(gt, e)
                yield f"{name} weight {i} {e.label}", fast == naive, f"{fast} vs {naive}"
        top = build_lattice(rs, 1).idempotents[-1]
        fast = sorted(fast_sizes(gt, top))
        classes = sorted(size for size, _ in weyl_classes_by_conjugation(gt))
        yield f"{name} top idempotent vs Weyl classes", fast == classes, f"{fast} vs {classes}"

    if deep:
        rs = build_root_system("E6")
        gt = enumerate_group(rs)
        lattice = build_lattice(rs, 1)
        e0, e8 = lattice["e_0"], lattice["e_8"]
        fast, naive = fast_sizes(gt, e0), naive_orbits(gt, e0)
        yield "E6 weight 1 e_0", fast == naive, f"{fast} vs {naive}"
        space = build_coset_space(gt, e8)
        part = enumerate_orbits(gt, space)
        fast = sorted(zip(part.orbit_sizes.tolist(), gt.length[part.orbit_min_rep].tolist()))
        ref = weyl_classes_by_conjugation(gt)
        yield "E6 weight 1 e_8 vs Weyl classes", fast == ref, f"{len(fast)} vs {len(ref)} classes"
