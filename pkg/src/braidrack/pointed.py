"""Pointed racks and the pointed rack counting invariant of braids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braids import BraidWord
from .coloring import apply_braid
from .errors import BasepointCountMismatch, SizeCapExceeded
from .racks import DEFAULT_ISO_CAP, FiniteRack, RackHom, _search, hom_search


@dataclass(frozen=True)
class PointedRack:
    rack: FiniteRack
    basepoints: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "basepoints", tuple(int(x) for x in self.basepoints))
        for x in self.basepoints:
            if not 0 <= x < self.rack.order:
                raise ValueError(f"basepoint {x} not in rack of order {self.rack.order}")

    @property
    def k(self) -> int:
        return len(self.basepoints)

    @classmethod
    def for_braid(cls, rack: FiniteRack, top: Sequence[int], bottom: Sequence[int]) -> "PointedRack":
        if len(top) != len(bottom):
            raise BasepointCountMismatch(f"{len(top)} top vs {len(bottom)} bottom basepoints")
        return cls(rack, tuple(top) + tuple(bottom))


def pointed_counting_invariant(px: PointedRack, word: BraidWord) -> int:
    """Number of pointed homomorphisms from the braid's fundamental pointed
    rack to ``px``; always 0 or 1.

    A homomorphism is fixed by where it sends the top generators, and those
    images are forced to be the first ``n`` basepoints, so the count reduces
    to one propagation check.
    """
    n = word.strands
    if px.k != 2 * n:
        raise BasepointCountMismatch(f"need {2 * n} basepoints for a {n}-braid, got {px.k}")
    top, bottom = px.basepoints[:n], px.basepoints[n:]
    return int(apply_braid(px.rack, top, word) == bottom)


def _forced(source: PointedRack, target: PointedRack):
    if source.k != target.k:
        raise BasepointCountMismatch(f"{source.k} vs {target.k} basepoints")
    forced = {}
    for x, y in zip(source.basepoints, target.basepoints):
        if forced.setdefault(x, y) != y:
            return None
    return forced


def pointed_hom_search(source: PointedRack, target: PointedRack) -> list[RackHom]:
    forced = _forced(source, target)
    if forced is None:
        return []
    return hom_search(source.rack, target.rack, forced)


def pointed_isomorphic(a: PointedRack, b: PointedRack, cap: int = DEFAULT_ISO_CAP):
    """``(True, witness)`` if a basepoint-preserving rack isomorphism exists."""
    if a.rack.order > cap:
        raise SizeCapExceeded(a.rack.order, cap)
    forced = _forced(a, b)
    if forced is None or a.rack.order != b.rack.order:
        return False, None
    maps = _search(a.rack, b.rack, forced, injective=True, first_only=True)
    if not maps:
        return False, None
    return True, RackHom(a.rack, b.rack, maps[0])
