"""Conjugacy classes of a Renner monoid via orbits on parabolic cosets.

For a nonzero idempotent ``e`` of the cross-section lattice, the elements
``u e`` and ``v e`` are conjugate exactly when the cosets ``u W_*(e)`` and
``v W_*(e)`` lie in one orbit of ``W(e)`` acting by ``w . uW_* = w u w^-1 W_*``.
Classes attached to different idempotents are never conjugate, so the
catalog is the disjoint union of the per-idempotent orbit lists plus the
zero class.
"""

from __future__ import annotations

import re
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .crosslat import CrossSectionLattice, IdempotentDescriptor, we_generators
from .errors import FixtureError, UsageError
from .weyl import GroupTable, canonicalize_coset, minimal_coset_reps, shortlex_word, word_to_element

__all__ = [
    "CosetSpace",
    "OrbitPartition",
    "ClassRecord",
    "ClassCatalog",
    "build_coset_space",
    "act_by_generator",
    "enumerate_orbits",
    "enumerate_catalog",
    "are_conjugate",
    "parse_fixture",
    "verify_transversal",
    "VerificationReport",
    "IdempotentCheck",
]


@dataclass(frozen=True, eq=False)
class CosetSpace:
    """Minimal representatives of ``W / W_*(e)``, in increasing id order."""

    idempotent: IdempotentDescriptor
    reps: np.ndarray
    index: np.ndarray  # element id -> position in reps, or -1

    def __len__(self):
        return len(self.reps)

    def position(self, w: int) -> int:
        pos = int(self.index[w])
        if pos < 0:
            raise UsageError(f"element {w} is not a minimal coset representative")
        return pos


@dataclass(frozen=True, eq=False)
class OrbitPartition:
    orbit_of: np.ndarray  # position -> orbit id
    orbit_sizes: np.ndarray
    orbit_min_rep: np.ndarray  # orbit id -> element id

    @property
    def num_orbits(self) -> int:
        return len(self.orbit_sizes)


@dataclass(frozen=True)
class ClassRecord:
    idempotent_label: str
    rep_word: tuple[int, ...]
    orbit_size: int
    min_length: int


@dataclass(frozen=True)
class IdempotentClasses:
    idempotent: IdempotentDescriptor
    num_cosets: int
    classes: tuple[ClassRecord, ...]

    @property
    def label(self) -> str:
        return self.idempotent.label


@dataclass(frozen=True)
class ClassCatalog:
    cartan_type: object
    weight_index: int
    per_idempotent: tuple[IdempotentClasses, ...]

    @property
    def total_classes(self) -> int:
        return sum(len(block.classes) for block in self.per_idempotent)

    def counts(self) -> dict[str, int]:
        return {block.label: len(block.classes) for block in self.per_idempotent}

    def __getitem__(self, label: str) -> IdempotentClasses:
        for block in self.per_idempotent:
            if block.label == label:
                return block
        raise UsageError(f"unknown idempotent {label!r}")


def build_coset_space(gt: GroupTable, e: IdempotentDescriptor) -> CosetSpace:
    if e.is_zero:
        raise UsageError("the zero idempotent has no coset space")
    reps = minimal_coset_reps(gt, e.lambda_sub)
    index = np.full(gt.order, -1, dtype=np.int64)
    index[reps] = np.arange(len(reps))
    reps.setflags(write=False)
    index.setflags(write=False)
    return CosetSpace(e, reps, index)


def _action_table(gt: GroupTable, space: CosetSpace, s: int) -> np.ndarray:
    """Positions of ``s u s W_*`` for every representative ``u``."""
    conj = gt.conjugate_by_gen(space.reps, s)
    return space.index[canonicalize_coset(gt, conj, space.idempotent.lambda_sub)]


def act_by_generator(gt: GroupTable, space: CosetSpace, s: int, pos: int) -> int:
    """Act on the coset at ``pos`` by the simple reflection ``s`` of ``W(e)``."""
    if s not in we_generators(space.idempotent):
        raise UsageError(f"s_{s} is not a generator of W({space.idempotent.label})")
    u = int(space.reps[pos])
    return space.position(canonicalize_coset(gt, gt.conjugate_by_gen(u, s), space.idempotent.lambda_sub))


def _min_rep(gt: GroupTable, members: np.ndarray) -> int:
    lengths = gt.length[members]
    shortest = members[lengths == lengths.min()]
    if len(shortest) == 1:
        return int(shortest[0])
    return int(min(shortest, key=lambda w: shortlex_word(gt, w)))


def enumerate_orbits(gt: GroupTable, space: CosetSpace, gens: Sequence[int] | None = None) -> OrbitPartition:
    """Partition the coset space into ``W(e)``-orbits by breadth-first search.

    Orbit ids are assigned in order of their smallest position.
    """
    if gens is None:
        gens = we_generators(space.idempotent)
    allowed = set(we_generators(space.idempotent))
    if not set(gens) <= allowed:
        raise UsageError(f"generators {sorted(set(gens) - allowed)} are not in W({space.idempotent.label})")
    tables = [_action_table(gt, space, s).tolist() for s in sorted(gens)]

    n = len(space)
    orbit_of = [-1] * n
    sizes = []
    for start in range(n):
        if orbit_of[start] >= 0:
            continue
        oid = len(sizes)
        orbit_of[start] = oid
        queue = deque([start])
        size = 0
        while queue:
            p = queue.popleft()
            size += 1
            for table in tables:
                q = table[p]
                if orbit_of[q] < 0:
                    orbit_of[q] = oid
                    queue.append(q)
        sizes.append(size)

    orbit_of = np.array(orbit_of, dtype=np.int64)
    members = np.argsort(orbit_of, kind="stable")
    bounds = np.cumsum([0] + sizes)
    min_rep = np.array(
        [_min_rep(gt, space.reps[members[bounds[o] : bounds[o + 1]]]) for o in range(len(sizes))],
        dtype=np.int64,
    )
    return OrbitPartition(orbit_of, np.array(sizes, dtype=np.int64), min_rep)


def _classes_for(gt: GroupTable, e: IdempotentDescriptor) -> IdempotentClasses:
    if e.is_zero:
        return IdempotentClasses(e, 1, (ClassRecord(e.label, (), 1, 0),))
    space = build_coset_space(gt, e)
    part = enumerate_orbits(gt, space)
    records = [
        ClassRecord(e.label, tuple(shortlex_word(gt, w)), int(size), int(gt.length[w]))
        for w, size in zip(part.orbit_min_rep, part.orbit_sizes)
    ]
    records.sort(key=lambda r: (r.min_length, r.rep_word))
    return IdempotentClasses(e, len(space), tuple(records))


def enumerate_catalog(
    gt: GroupTable,
    lattice: CrossSectionLattice,
    only: str | None = None,
    jobs: int = 1,
) -> ClassCatalog:
    """All conjugacy classes, one block per lattice idempotent.

    ``only`` restricts the catalog to a single idempotent label.  With
    ``jobs > 1`` idempotents are processed concurrently; the result is
    identical to a serial run.
    """
    if gt.root_system.cartan_type != lattice.cartan_type:
        raise UsageError(f"group is {gt.root_system.cartan_type} but lattice is {lattice.cartan_type}")
    idems = [lattice[only]] if only is not None else list(lattice.idempotents)
    if jobs > 1 and len(idems) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(lambda e: _classes_for(gt, e), idems))
    else:
        blocks = [_classes_for(gt, e) for e in idems]
    return ClassCatalog(lattice.cartan_type, lattice.weight_index, tuple(blocks))


class _OrbitCache:
    """Per-idempotent coset spaces and orbit partitions, built on demand."""

    def __init__(self, gt: GroupTable):
        self.gt = gt
        self._data = {}

    def get(self, e: IdempotentDescriptor):
        if e.label not in self._data:
            space = build_coset_space(self.gt, e)
            self._data[e.label] = (space, enumerate_orbits(self.gt, space))
        return self._data[e.label]

    def orbit_of_word(self, e: IdempotentDescriptor, word: Sequence[int]) -> int:
        space, part = self.get(e)
        w = word_to_element(self.gt, word)
        return int(part.orbit_of[space.position(canonicalize_coset(self.gt, w, e.lambda_sub))])


def are_conjugate(
    gt: GroupTable,
    lattice: CrossSectionLattice,
    label: str,
    word_u: Sequence[int],
    word_v: Sequence[int],
    _cache: _OrbitCache | None = None,
) -> bool:
    """Whether ``u e`` and ``v e`` are conjugate, for words ``u`` and ``v``."""
    e = lattice[label]
    if e.is_zero:
        raise UsageError("conjugacy is only defined here for nonzero idempotents")
    cache = _cache or _OrbitCache(gt)
    return cache.orbit_of_word(e, word_u) == cache.orbit_of_word(e, word_v)


# --- fixtures -------------------------------------------------------------

_HEADER = re.compile(r"^(?:#\s*|Conjugacy Classes Associated with\s+)(\S+)\s*$")
_WORD = re.compile(r"^\[([\d,\s]*)\]$")


def parse_fixture(text: str) -> dict[str, list[tuple[int, ...]]]:
    """Parse a class-table fixture into ``{label: [word, ...]}``.

    Sections start with ``# <label>`` (or the header line written by the
    ``paper`` output format).  Each following nonblank line is one
    bracketed word such as ``[ 1, 3, 4 ]``; ``[ ]`` is the empty word and a
    lone ``0`` in the ``zero`` section stands for the zero class.
    """
    sections: dict[str, list[tuple[int, ...]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        m = _HEADER.match(line)
        if m:
            current = m.group(1)
            if current == "0":
                current = "zero"
            sections.setdefault(current, [])
            continue
        if current is None:
            raise FixtureError(f"entry before any section header: {line!r}", lineno)
        if line == "0":
            if current != "zero":
                raise FixtureError("'0' is only allowed in the zero section", lineno)
            sections[current].append(())
            continue
        m = _WORD.match(line)
        if not m:
            raise FixtureError(f"expected a bracketed word, got {line!r}", lineno)
        body = m.group(1).strip()
        try:
            word = tuple(int(tok) for tok in body.split(",")) if body else ()
        except ValueError:
            raise FixtureError(f"bad generator list {line!r}", lineno) from None
        sections[current].append(word)
    return sections


@dataclass
class IdempotentCheck:
    label: str
    listed: int
    computed: int
    pairwise_distinct: bool
    count_matches: bool
    covers_all: bool
    conjugate_pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    missing_orbits: int = 0
    reversed_reading_passes: bool | None = None

    @property
    def passed(self) -> bool:
        return self.pairwise_distinct and self.count_matches and self.covers_all


@dataclass
class VerificationReport:
    checks: list[IdempotentCheck]

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = (
                f"{status} {c.label}: listed {c.listed}, computed {c.computed}, "
                f"distinct={c.pairwise_distinct} count={c.count_matches} cover={c.covers_all}"
            )
            if c.conjugate_pairs:
                u, v = c.conjugate_pairs[0]
                line += f"; conjugate pair {list(u)} ~ {list(v)}"
            if c.reversed_reading_passes:
                line += "; NOTE: passes only with words read right to left"
            out.append(line)
        return out


def _check_words(cache: _OrbitCache, e: IdempotentDescriptor, words) -> IdempotentCheck:
    space, part = cache.get(e)
    seen: dict[int, tuple[int, ...]] = {}
    pairs = []
    for word in words:
        oid = cache.orbit_of_word(e, word)
        if oid in seen:
            pairs.append((seen[oid], word))
        else:
            seen[oid] = word
    n = part.num_orbits
    return IdempotentCheck(
        label=e.label,
        listed=len(words),
        computed=n,
        pairwise_distinct=not pairs,
        count_matches=len(words) == n,
        covers_all=len(seen) == n,
        conjugate_pairs=pairs,
        missing_orbits=n - len(seen),
    )


def verify_transversal(gt: GroupTable, lattice: CrossSectionLattice, fixture) -> VerificationReport:
    """Check that the listed words form a transversal of the class orbits.

    ``fixture`` is fixture text or the mapping returned by
    :func:`parse_fixture`.  When a section fails under the usual left to
    right reading, the reversed reading is also tried and flagged.
    """
    if isinstance(fixture, str):
        fixture = parse_fixture(fixture)
    cache = _OrbitCache(gt)
    checks = []
    for label, words in fixture.items():
        e = lattice[label]
        if e.is_zero:
            ok = words == [()]
            checks.append(IdempotentCheck(label, len(words), 1, len(words) <= 1, ok, bool(words)))
            continue
        check = _check_words(cache, e, words)
        if not check.passed:
            check.reversed_reading_passes = _check_words(cache, e, [w[::-1] for w in words]).passed
        checks.append(check)
    return VerificationReport(checks)
