"""
Projective points over GF(q) in canonical form (first nonzero coordinate = 1)
and ordered, duplicate-free point sets.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.prmweights.combinatorics.binomial import pi
from src.prmweights.config.settings import DEFAULT_POINT_BUDGET
from src.prmweights.gf.field import FieldSpec, field_from_json
from src.prmweights.utils.errors import BudgetExceededError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjectivePoint:
    coords: Tuple[int, ...]
    field: FieldSpec

    def __post_init__(self):
        lead = next((c for c in self.coords if c), None)
        if lead is None:
            raise DomainError("the zero vector is not a projective point")
        if lead != 1:
            raise DomainError(f"{self.coords} is not canonical (leading coordinate must be 1)")

    @classmethod
    def normalize(cls, coords: Sequence[int], field: FieldSpec) -> "ProjectivePoint":
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise DomainError("the zero vector is not a projective point")
        inv = field.inv(int(lead))
        return cls(tuple(field.mul(int(c), inv) for c in coords), field)

    @property
    def m(self) -> int:
        return len(self.coords) - 1

    @property
    def lead_position(self) -> int:
        return next(i for i, c in enumerate(self.coords) if c)

    def sort_key(self):
        return (self.lead_position, self.coords)


@dataclass
class PointSet:
    """A reduced set of canonical points of P^m(F_q), kept in canonical order."""

    m: int
    field: FieldSpec
    points: List[Tuple[int, ...]] = dc_field(default_factory=list)

    def __post_init__(self):
        pts = [ProjectivePoint(tuple(int(c) for c in p), self.field) for p in self.points]
        if any(pt.m != self.m for pt in pts):
            raise DomainError(f"every point needs {self.m + 1} coordinates")
        unique = {pt.coords: pt for pt in pts}
        if len(unique) != len(pts):
            raise DomainError("point set contains duplicates")
        self.points = [pt.coords for pt in sorted(unique.values(), key=ProjectivePoint.sort_key)]

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]], m: int, field: FieldSpec, normalize: bool = False) -> "PointSet":
        pts = [ProjectivePoint.normalize(p, field).coords if normalize else tuple(p) for p in points]
        if normalize:
            pts = list(dict.fromkeys(pts))
        return cls(m=m, field=field, points=pts)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.points)

    def __contains__(self, point) -> bool:
        return tuple(point) in set(self.points)

    def contains(self, point: Sequence[int]) -> bool:
        return tuple(int(c) for c in point) in set(self.points)

    @property
    def coords(self) -> np.ndarray:
        """|X| x (m+1) array of coordinate indices."""
        if not self.points:
            return np.zeros((0, self.m + 1), dtype=np.int64)
        return np.array(self.points, dtype=np.int64)

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(m=self.m, field=self.field, points=[self.points[i] for i in indices])

    def is_subset_of(self, other: "PointSet") -> bool:
        return set(self.points) <= set(other.points)

    def difference(self, other: "PointSet") -> "PointSet":
        drop = set(other.points)
        return PointSet(m=self.m, field=self.field, points=[p for p in self.points if p not in drop])

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(m=self.m, field=self.field, points=list(dict.fromkeys(self.points + other.points)))

    def to_json(self) -> dict:
        return {"m": self.m, "field": self.field.to_json(), "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data: dict) -> "PointSet":
        return cls(m=int(data["m"]), field=field_from_json(data["field"]), points=[tuple(p) for p in data["points"]])


def enumerate_projective_points(m: int, field: FieldSpec, budget: Optional[int] = None) -> PointSet:
    """All of P^m(F_q), ordered by leading-one position then lexicographically."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    budget = DEFAULT_POINT_BUDGET if budget is None else budget
    size = pi(m, field.q)
    if size > budget:
        raise BudgetExceededError(f"P^{m}(F_{field.q}) has {size} points, over the point budget", size, budget)

    points = []
    for lead in range(m + 1):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(field.q), repeat=m - lead):
            points.append(head + tail)
    logger.debug("enumerated %d points of P^%d(F_%d)", len(points), m, field.q)
    # already canonical and sorted; skip the re-validation in __post_init__
    out = PointSet.__new__(PointSet)
    out.m, out.field, out.points = m, field, points
    return out


def grid_points(root_lists: Sequence[Sequence[int]], field: FieldSpec) -> PointSet:
    """{(1, a_1, ..., a_m) : a_i in root_lists[i-1]}."""
    m = len(root_lists)
    pts = [(1,) + tuple(combo) for combo in itertools.product(*root_lists)]
    return PointSet(m=m, field=field, points=pts)
