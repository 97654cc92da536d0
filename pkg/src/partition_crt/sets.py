"""Difference classes ``aN \\ bN``, their disjoint unions, and multiplicity sets.

Natural numbers start at 1 everywhere; 0 belongs to no class and no
multiplicity set.  An excluded modulus of ``None`` stands for infinity, i.e.
the class keeps every positive multiple of its base.
"""
from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import DisjointnessViolation, InfiniteExclusion, InvalidParams


@dataclass(frozen=True, order=True)
class DifferenceClass:
    base: int
    excluded: int | None = None

    def __post_init__(self):
        if self.base < 1:
            raise InvalidParams(f"class base must be positive, got {self.base}")
        if self.excluded is not None and self.excluded < 1:
            raise InvalidParams(
                f"excluded modulus must be positive or None, got {self.excluded}")

    @property
    def is_empty(self) -> bool:
        return self.excluded is not None and self.base % self.excluded == 0

    @property
    def period(self) -> int:
        """Period of the class indicator function."""
        if self.excluded is None:
            return self.base
        return math.lcm(self.base, self.excluded)

    def to_json(self) -> dict:
        return {"base": self.base, "excluded": self.excluded}

    @classmethod
    def from_json(cls, obj: dict) -> "DifferenceClass":
        return cls(int(obj["base"]),
                   None if obj.get("excluded") is None else int(obj["excluded"]))

    def __str__(self):
        if self.excluded is None:
            return f"{self.base}N"
        return f"{self.base}N\\{self.excluded}N"


def class_contains(c: DifferenceClass, x: int) -> bool:
    if x < 1 or x % c.base:
        return False
    return c.excluded is None or x % c.excluded != 0


def expand_residues(c: DifferenceClass, allow_infinite: bool = False
                    ) -> list[tuple[int, int]]:
    """Split a class into residue classes modulo ``lcm(base, excluded)``.

    With ``allow_infinite`` an unbounded class expands to the single pair
    ``(base, 0)``; otherwise it raises :class:`InfiniteExclusion`.
    """
    if c.excluded is None:
        if allow_infinite:
            return [(c.base, 0)]
        raise InfiniteExclusion(f"{c} has no finite exclusion")
    L = c.period
    return [(L, r) for r in range(c.base, L, c.base) if r % c.excluded]


def _pair_intersects(c1: DifferenceClass, c2: DifferenceClass) -> bool:
    if c1.is_empty or c2.is_empty:
        return False
    step = math.lcm(c1.base, c2.base)
    L = math.lcm(c1.period, c2.period)
    # every common element is congruent mod L to one of these candidates
    for x in range(step, L + 1, step):
        if class_contains(c1, x) and class_contains(c2, x):
            return True
    return False


def verify_disjoint(classes: Sequence[DifferenceClass]) -> bool:
    """Exact pairwise disjointness check.

    Both indicators are periodic with period ``lcm`` of the pair's parameters,
    and a common element must be a multiple of both bases, so scanning common
    multiples of the bases over one period decides the question.
    """
    return not any(_pair_intersects(c1, c2)
                   for c1, c2 in itertools.combinations(classes, 2))


def first_overlap(classes: Sequence[DifferenceClass]) -> tuple[int, int] | None:
    for (i, c1), (j, c2) in itertools.combinations(enumerate(classes), 2):
        if _pair_intersects(c1, c2):
            return i, j
    return None


@dataclass(frozen=True)
class ResidueClassUnion:
    classes: tuple[DifferenceClass, ...]

    def __post_init__(self):
        classes = tuple(self.classes)
        object.__setattr__(self, "classes", classes)
        bad = first_overlap(classes)
        if bad is not None:
            i, j = bad
            raise DisjointnessViolation(
                f"classes {classes[i]} and {classes[j]} intersect")

    def __contains__(self, x: int) -> bool:
        return any(class_contains(c, x) for c in self.classes)

    def __len__(self):
        return len(self.classes)

    @property
    def period(self) -> int:
        return math.lcm(1, *(c.period for c in self.classes))

    def members(self, limit: int) -> list[int]:
        """Sorted members in ``[1, limit]``."""
        out: set[int] = set()
        for c in self.classes:
            out.update(x for x in range(c.base, limit + 1, c.base)
                       if class_contains(c, x))
        return sorted(out)

    def residues(self, modulus: int | None = None) -> tuple[int, list[int]]:
        """Residues mod ``modulus`` (default: the union's period) of the members."""
        L = modulus or self.period
        if L % self.period:
            raise InvalidParams(f"{L} is not a multiple of the period {self.period}")
        return L, sorted({x % L for x in self.members(L)})

    def without(self, index: int) -> "ResidueClassUnion":
        return ResidueClassUnion(self.classes[:index] + self.classes[index + 1:])

    def set_equal(self, other: "ResidueClassUnion") -> bool:
        L = math.lcm(self.period, other.period)
        return self.members(L) == other.members(L)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.classes]

    @classmethod
    def from_json(cls, obj: Iterable[dict]) -> "ResidueClassUnion":
        return cls(tuple(DifferenceClass.from_json(c) for c in obj))


@dataclass(frozen=True)
class MultiplicitySet:
    """Either a finite set (``period is None``) or ``{c + period*t : c in core, t >= 0}``."""

    core: frozenset[int]
    period: int | None = None
    _by_residue: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        core = frozenset(int(c) for c in self.core)
        object.__setattr__(self, "core", core)
        if any(c < 1 for c in core):
            raise InvalidParams("multiplicity sets contain positive integers only")
        by_residue: dict[int, int] = {}
        if self.period is not None:
            if self.period < 1:
                raise InvalidParams(f"period must be positive, got {self.period}")
            for c in core:
                r = c % self.period
                if r in by_residue:
                    raise InvalidParams(
                        f"core elements {by_residue[r]} and {c} are congruent "
                        f"mod {self.period}")
                by_residue[r] = c
        object.__setattr__(self, "_by_residue", by_residue)

    @property
    def is_finite(self) -> bool:
        return self.period is None

    def __contains__(self, d: int) -> bool:
        return mult_contains(self, d)

    def elements_upto(self, limit: int) -> Iterator[int]:
        """Members ``<= limit`` in increasing order, generated from core and period."""
        if self.period is None:
            return iter(sorted(c for c in self.core if c <= limit))
        return heapq.merge(*(range(c, limit + 1, self.period) for c in self.core))

    def sorted_upto(self, limit: int) -> list[int]:
        return list(self.elements_upto(limit))

    def without(self, d: int) -> "MultiplicitySet":
        """Remove one element of a finite set."""
        if self.period is not None:
            raise InvalidParams("single-element removal needs a finite set")
        if d not in self.core:
            raise InvalidParams(f"{d} is not a member")
        return MultiplicitySet(self.core - {d})

    def set_equal(self, other: "MultiplicitySet") -> bool:
        if self.is_finite != other.is_finite:
            # a periodic set with nonempty core is infinite
            return not self.core and not other.core
        if self.is_finite:
            return self.core == other.core
        bound = max(self.core | other.core | {0}) + math.lcm(self.period, other.period)
        return self.sorted_upto(bound) == other.sorted_upto(bound)

    def to_json(self) -> dict:
        return {"core": sorted(self.core), "period": self.period}

    @classmethod
    def from_json(cls, obj: dict) -> "MultiplicitySet":
        period = obj.get("period")
        return cls(frozenset(int(c) for c in obj["core"]),
                   None if period is None else int(period))


def mult_contains(A: MultiplicitySet, d: int) -> bool:
    if d < 1:
        return False
    if A.period is None:
        return d in A.core
    c = A._by_residue.get(d % A.period)
    return c is not None and c <= d

