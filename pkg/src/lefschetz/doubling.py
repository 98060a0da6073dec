"""Partial doubling arithmetic and the reducible-fiber inequivalence recipe.

The doubled monodromy word itself is never constructed.  What is tracked is
the numerology of a double (genus 2g + m - 1, 4m base points) and which
separating vanishing cycles survive as separating cycles of the double: those
bounding a subsurface free of the kept base points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .curves import Partition
from .errors import PreconditionError
from .pencil import (LefschetzPencil, ManifoldDescriptor, blow_up, identify_manifold,
                     reducible_fibers)

NOT_CONSTRUCTED = "monodromy word not constructed; arithmetic and partition bookkeeping only"
BASE_FREE_MARKER = "one side base-free"
VERDICT = "inequivalent-and-Luttinger-robust"


@dataclass(frozen=True)
class Contribution:
    index: int
    curve: str
    partition: Partition | str  # str only for the iterated-double marker


@dataclass(frozen=True)
class DoubleSummary:
    source: str
    source_genus: int
    source_base_count: int
    kept: tuple[str, ...]
    genus: int
    base_count: int
    reducible_count: int
    separating_in_source: int
    contributions: tuple[Contribution, ...]
    ambient: ManifoldDescriptor | None
    iterations: int = 1
    provenance: str = NOT_CONSTRUCTED

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "kind": "double-summary",
            "source": self.source,
            "source_genus": self.source_genus,
            "source_base_count": self.source_base_count,
            "kept": list(self.kept),
            "genus": self.genus,
            "base_count": self.base_count,
            "reducible_count": self.reducible_count,
            "contributions": [
                {"index": c.index, "curve": c.curve,
                 "partition": c.partition if isinstance(c.partition, str) else c.partition.to_json()}
                for c in self.contributions],
            "ambient": self.ambient.to_json() if self.ambient else None,
            "iterations": self.iterations,
            "provenance": self.provenance,
        }


def check_doubling_bounds(g: int, m: int):
    if g < 2:
        raise PreconditionError(f"doubling needs fiber genus >= 2, got {g}")
    if m < 1:
        raise PreconditionError("doubling needs at least one base point")
    if m > 2 * g - 2:
        raise PreconditionError(f"doubling needs m <= 2g - 2; got m = {m} > {2 * g - 2}")


def partial_double(p: LefschetzPencil, kept: Iterable[str]) -> DoubleSummary:
    """Blow up every base point outside ``kept`` and double the result."""
    kept = tuple(dict.fromkeys(kept))
    for b in kept:
        p.boundary_of(b)
    check_doubling_bounds(p.genus, len(kept))
    q = blow_up(p, [b for b in p.base_labels if b not in kept])
    remaining = set(q.surface.labels)
    contributions = []
    separating = reducible_fibers(q)
    for r in separating:
        # a nonempty base set cannot be missed by both sides, so this is 0 or 1
        if r.partition.has_side_missing(remaining):
            contributions.append(Contribution(r.index, r.curve, r.partition))
    return DoubleSummary(
        source=p.name, source_genus=p.genus, source_base_count=p.base_count, kept=kept,
        genus=2 * p.genus + len(kept) - 1, base_count=4 * len(kept),
        reducible_count=len(contributions), separating_in_source=len(separating),
        contributions=tuple(contributions), ambient=identify_manifold(q))


def iterate_double(s: DoubleSummary, times: int) -> DoubleSummary:
    """Double the double ``times`` more times, keeping every base point.

    The base points of each new double sit on one component of every
    reducible fiber, so the count of reducible fibers is carried unchanged.
    """
    if times < 1:
        raise PreconditionError("times must be >= 1")
    g, m = s.genus, s.base_count
    for _ in range(times):
        check_doubling_bounds(g, m)
        g, m = 2 * g + m - 1, 4 * m
    marked = tuple(Contribution(c.index, c.curve, BASE_FREE_MARKER) for c in s.contributions)
    return DoubleSummary(
        source=s.source, source_genus=s.genus, source_base_count=s.base_count, kept=(),
        genus=g, base_count=m, reducible_count=s.reducible_count,
        separating_in_source=s.reducible_count, contributions=marked, ambient=s.ambient,
        iterations=s.iterations + times)


@dataclass(frozen=True)
class InequivalenceCertificate:
    primed: DoubleSummary
    doubled: DoubleSummary
    genus: int
    base_count: int
    ambient: ManifoldDescriptor | None
    verdict: str | None

    @property
    def counts(self) -> tuple[int, int]:
        return self.primed.reducible_count, self.doubled.reducible_count

    def blowup_options(self) -> list[dict]:
        out = []
        for m0 in range(self.base_count + 1):
            out.append({"m0": m0, "kind": "fibrations" if m0 == self.base_count else "pencils",
                        "remaining_base_points": self.base_count - m0})
        return out

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "kind": "inequivalence-certificate",
            "primed": self.primed.to_json(),
            "doubled": self.doubled.to_json(),
            "shared": {"genus": self.genus, "base_count": self.base_count,
                       "ambient": self.ambient.to_json() if self.ambient else None},
            "distinguishing": {"K_primed": self.primed.reducible_count,
                               "K_doubled": self.doubled.reducible_count},
            "verdict": self.verdict,
            "blowup_options": self.blowup_options() if self.verdict else [],
        }


def doubling_recipe(p: LefschetzPencil, primed: Iterable[str],
                    doubled: Iterable[str]) -> InequivalenceCertificate:
    primed, doubled = tuple(primed), tuple(doubled)
    if len(set(primed)) != len(set(doubled)):
        raise PreconditionError(f"subsets must have equal size; got {len(set(primed))} "
                                f"and {len(set(doubled))}")
    s1 = partial_double(p, primed)
    s2 = partial_double(p, doubled)
    agree = (s1.genus == s2.genus and s1.base_count == s2.base_count
             and s1.ambient is not None and s2.ambient is not None
             and s1.ambient.same_ambient(s2.ambient))
    verdict = VERDICT if agree and s1.reducible_count != s2.reducible_count else None
    return InequivalenceCertificate(s1, s2, s1.genus, s1.base_count,
                                    s1.ambient if agree else None, verdict)
