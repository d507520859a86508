"""Ordered tripartitions of a finite set and the pair-compatibility test.

An ordered tripartition of S is a triple of disjoint subsets (first, middle,
last) whose union is S.  They index degenerations both of strata (where the
middle part becomes the new equality locus) and of torus orbits in
Grassmannians, and in the two-sided situation a pair of tripartitions of
overlapping index sets must satisfy two implication constraints, checked by
``pair_compatible``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class Tripartition:
    first: frozenset
    middle: frozenset
    last: frozenset

    def __post_init__(self):
        if (self.first & self.middle) or (self.first & self.last) or (self.middle & self.last):
            raise ValueError("tripartition parts must be disjoint")

    @property
    def ambient(self) -> frozenset:
        return self.first | self.middle | self.last


def tripartitions(ambient):
    """All ordered tripartitions of ``ambient``, in a deterministic order."""
    items = sorted(ambient)
    for assignment in product((0, 1, 2), repeat=len(items)):
        parts = ([], [], [])
        for x, slot in zip(items, assignment):
            parts[slot].append(x)
        yield Tripartition(frozenset(parts[0]), frozenset(parts[1]), frozenset(parts[2]))


def pair_compatible(tri_i: Tripartition, tri_j: Tripartition, I, J) -> bool:
    """The two implications constraining a pair of tripartitions.

    With (I', Ibar, I'') a tripartition of I and (J', Jbar, J'') of J:
      * if I' cap J is not within J' cap I, or J'' cap I is not within
        I'' cap J, then J cap (I - I') must lie within J'' cap I;
      * symmetrically with the roles of the two sides swapped.
    """
    I = frozenset(I)
    J = frozenset(J)
    i1, i3 = tri_i.first, tri_i.last
    j1, j3 = tri_j.first, tri_j.last
    if not (i1 & J <= j1 & I) or not (j3 & I <= i3 & J):
        if not (J & (I - i1) <= j3 & I):
            return False
    if not (j1 & I <= i1 & J) or not (i3 & J <= j3 & I):
        if not (I & (J - j1) <= i3 & J):
            return False
    return True
