"""Named simple closed curves and mapping words acting on them.

A curve is only ever known through its homology class plus combinatorial
metadata (separating flag, boundary partition).  Mapping classes fix the
boundary pointwise, so conjugating a curve never changes which boundary
components lie on which side of it.

Words are read as functions: ``(l1, l2, ..., lk)`` denotes ``l1 o l2 o ... o lk``
and acts on a class rightmost letter first.  So for ``psi = inv(a5) inv(a4)``,
``psi(b2)`` twists by ``a4`` inverse first.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import SurfaceMismatch
from .surface import HomologyClass, Surface, boundary_class, transvection


@dataclass(frozen=True)
class Partition:
    """Unordered pair of complementary sets of boundary labels."""

    sides: frozenset[tuple[str, ...]]

    @classmethod
    def of(cls, left: Iterable[str], right: Iterable[str]) -> "Partition":
        a, b = set(left), set(right)
        if a & b:
            raise ValueError(f"partition sides overlap in {sorted(a & b)}")
        return cls(frozenset({tuple(sorted(a)), tuple(sorted(b))}))

    @property
    def pair(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        s = sorted(self.sides, key=lambda side: (len(side), side))
        # both sides empty on a closed surface collapse to one element
        return (s[0], s[-1]) if len(s) == 2 else (s[0], s[0])

    @property
    def labels(self) -> frozenset[str]:
        return frozenset(x for side in self.sides for x in side)

    def drop(self, labels: Iterable[str]) -> "Partition":
        gone = set(labels)
        a, b = self.pair
        return Partition.of([x for x in a if x not in gone], [x for x in b if x not in gone])

    def has_side_missing(self, labels: Iterable[str]) -> bool:
        """True when some side contains none of ``labels``."""
        keep = set(labels)
        return any(not keep.intersection(side) for side in self.pair)

    def __str__(self):
        a, b = self.pair
        return "{" + ",".join(a) + "}|{" + ",".join(b) + "}"

    def to_json(self) -> list[list[str]]:
        return [list(side) for side in self.pair]


@dataclass(frozen=True)
class CurveClass:
    name: str
    homology: HomologyClass
    separating: bool = False
    partition: Partition | None = None
    genus_split: tuple[int, int] | None = None
    # (word name, curve name) when the curve was produced as word:curve
    origin: tuple[str, str] | None = None

    @property
    def surface(self) -> Surface:
        return self.homology.surface

    def renamed(self, name: str) -> "CurveClass":
        return CurveClass(name, self.homology, self.separating, self.partition,
                          self.genus_split, self.origin)


@dataclass(frozen=True)
class MappingWord:
    name: str
    letters: tuple[tuple[CurveClass, int], ...]

    def __post_init__(self):
        surfaces = {c.surface for c, _ in self.letters}
        if len(surfaces) > 1:
            raise SurfaceMismatch(f"word {self.name} mixes curves on several surfaces")
        for _, s in self.letters:
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")

    @classmethod
    def twist(cls, c: CurveClass, sign: int = 1) -> "MappingWord":
        return cls(c.name if sign == 1 else f"inv({c.name})", ((c, sign),))

    def inverse(self) -> "MappingWord":
        return MappingWord(f"inv({self.name})", tuple((c, -s) for c, s in reversed(self.letters)))

    def __mul__(self, other: "MappingWord") -> "MappingWord":
        return MappingWord(f"{self.name}*{other.name}", self.letters + other.letters)

    def __str__(self):
        return " ".join(c.name if s == 1 else f"inv({c.name})" for c, s in self.letters)


def word_action(w: MappingWord, x: HomologyClass) -> HomologyClass:
    for c, s in reversed(w.letters):
        if c.surface != x.surface:
            raise SurfaceMismatch(f"word {w.name} acts on {c.surface}, class lives on {x.surface}")
        x = transvection(c.homology, x, s)
    return x


MAX_NAME = 48


def conjugate_curve(w: MappingWord, c: CurveClass) -> CurveClass:
    name = f"{w.name}:{c.name}"
    if len(name) > MAX_NAME:
        # repeated moves nest names exponentially; keep a stable short digest
        name = "h_" + hashlib.sha1(name.encode()).hexdigest()[:10]
    return CurveClass(name, word_action(w, c.homology), c.separating,
                      c.partition, c.genus_split, (w.name, c.name))


@dataclass(frozen=True)
class Diagnostic:
    curve: str
    level: str  # "error" or "warning"
    message: str

    def __str__(self):
        return f"{self.level}: curve {self.curve}: {self.message}"


def check_curve_consistency(c: CurveClass) -> list[Diagnostic]:
    """Necessary conditions a curve record must satisfy; an empty list is clean."""
    out: list[Diagnostic] = []
    s = c.surface
    labels = set(s.labels)
    if c.separating:
        if not c.homology.in_boundary_span():
            out.append(Diagnostic(c.name, "error", "flagged separating but its class "
                                  "is not in the span of boundary classes"))
        if c.partition is None:
            out.append(Diagnostic(c.name, "error", "separating curve without a boundary partition"))
        else:
            if c.partition.labels != labels:
                out.append(Diagnostic(c.name, "error", f"partition {c.partition} does not "
                                      f"cover the boundary labels {sorted(labels)}"))
            elif not _matches_side(c):
                out.append(Diagnostic(c.name, "error", f"class does not equal +-(sum of boundary "
                                      f"classes) over a side of {c.partition}"))
    else:
        if c.partition is not None:
            out.append(Diagnostic(c.name, "error", "nonseparating curve carries a partition"))
        if c.homology.in_boundary_span():
            out.append(Diagnostic(c.name, "warning", "nonseparating curve whose class lies "
                                  "in the boundary span"))
    if c.genus_split is not None and sum(c.genus_split) != s.genus:
        out.append(Diagnostic(c.name, "error", f"genus split {c.genus_split} does not sum "
                              f"to genus {s.genus}"))
    return out


def side_class(s: Surface, side: Sequence[str]) -> HomologyClass:
    x = s.zero()
    for lab in side:
        x = x + boundary_class(s, s.label_index(lab))
    return x


def _matches_side(c: CurveClass) -> bool:
    s = c.surface
    if s.boundary_count == 0:
        return c.homology.is_zero()
    side = side_class(s, c.partition.pair[0])
    return c.homology == side or c.homology == -side
