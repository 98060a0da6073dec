"""Lefschetz pencils as factorizations with labelled base points.

Base point ``b_j`` corresponds to boundary component ``d_j`` of the fiber
surface.  Blowing up a base point caps the matching boundary component and
records one exceptional class in ``blowups``; exceptional spheres are not
tracked as curves.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from .curves import CurveClass, MappingWord, Partition
from .errors import PreconditionError
from .factorization import PositiveFactorization, homological_boundary_check
from .homlin import AbelianGroup, IntMatrix, cokernel_structure
from .surface import cap_boundary


@dataclass(frozen=True)
class LefschetzPencil:
    factorization: PositiveFactorization
    base_points: tuple[tuple[str, str], ...]  # (boundary label, base label), boundary order
    blowups: int = 0
    # evidence that the total space is rational or ruled, from outside the word
    known_rational_ruled: bool = False
    # singular fibers contain no exceptional spheres; assumed, never checked
    relatively_minimal_assumed: bool = True
    name: str = field(default="", compare=False)

    def __post_init__(self):
        labels = tuple(d for d, _ in self.base_points)
        if labels != self.surface.labels:
            raise PreconditionError(f"base points {labels} do not match boundary components "
                                    f"{self.surface.labels}")
        bases = [b for _, b in self.base_points]
        if len(set(bases)) != len(bases):
            raise PreconditionError(f"duplicate base point labels {bases}")

    @property
    def surface(self):
        return self.factorization.surface

    @property
    def genus(self) -> int:
        return self.surface.genus

    @property
    def base_count(self) -> int:
        return self.surface.boundary_count

    @property
    def twist_count(self) -> int:
        return len(self.factorization)

    @property
    def base_labels(self) -> tuple[str, ...]:
        return tuple(b for _, b in self.base_points)

    def boundary_of(self, base: str) -> str:
        for d, b in self.base_points:
            if b == base:
                return d
        raise PreconditionError(f"unknown base point {base!r}; pencil has {list(self.base_labels)}")

    def base_of(self, boundary: str) -> str:
        return dict(self.base_points)[boundary]

    def with_factorization(self, f: PositiveFactorization) -> "LefschetzPencil":
        return replace(self, factorization=f)


def euler_characteristic(p: LefschetzPencil) -> int:
    """e(X) = 4 - 4g + |C| - |B| for the current total space.

    Blowing up base points lowers |B|, so this already counts exceptional
    spheres added by ``blow_up``.
    """
    return 4 - 4 * p.genus + p.twist_count - p.base_count


def unblown_euler_characteristic(p: LefschetzPencil) -> int:
    """Euler characteristic of the manifold before the recorded blow-ups."""
    return euler_characteristic(p) - p.blowups


def closed_fiber_matrix(p: LefschetzPencil) -> IntMatrix:
    g2 = 2 * p.genus
    return IntMatrix.from_columns([c.homology.closed_part for c in p.factorization.twists], g2)


def first_homology(p: LefschetzPencil) -> AbelianGroup:
    """H_1(X): closed-fiber homology modulo the vanishing cycles."""
    return cokernel_structure(closed_fiber_matrix(p))


@dataclass(frozen=True)
class ReducibleFiber:
    index: int  # 1-based position in the factorization
    curve: str
    partition: Partition

    def to_json(self, p: LefschetzPencil | None = None) -> dict:
        d = {"index": self.index, "curve": self.curve, "partition": self.partition.to_json()}
        if p is not None:
            d["base_partition"] = [[p.base_of(x) for x in side] for side in self.partition.pair]
        return d


def reducible_fibers(p: LefschetzPencil) -> list[ReducibleFiber]:
    return [ReducibleFiber(i, c.name, c.partition)
            for i, c in enumerate(p.factorization.twists, 1) if c.separating]


def adjunction_flag(p: LefschetzPencil) -> bool:
    """True when the fiber violates 2g - 2 >= [F]^2 = m.

    Only a violation is informative: it certifies a rational or ruled total
    space.  No violation proves nothing.
    """
    return 2 * p.genus - 2 < p.base_count


def is_rational_ruled(p: LefschetzPencil) -> bool:
    return adjunction_flag(p) or p.known_rational_ruled


@dataclass(frozen=True)
class ManifoldDescriptor:
    euler: int
    h1: AbelianGroup
    fiber_genus: int
    fiber_square: int
    rational_ruled: bool
    candidates: tuple[str, ...]

    def same_ambient(self, other: "ManifoldDescriptor") -> bool:
        return (self.euler, self.h1, self.rational_ruled, self.candidates) == \
               (other.euler, other.h1, other.rational_ruled, other.candidates)

    def to_json(self) -> dict:
        return {"euler": self.euler, "h1": self.h1.to_json(), "fiber_genus": self.fiber_genus,
                "fiber_square": self.fiber_square, "rational_ruled": self.rational_ruled,
                "candidates": list(self.candidates)}


def _blown(base: str, k: int) -> str:
    if k == 0:
        return base
    return f"{base}#{k}CP2bar" if k > 1 else f"{base}#CP2bar"


def rational_ruled_candidates(euler: int, h1: AbelianGroup) -> tuple[str, ...]:
    """Smooth types of rational/ruled surfaces with the given e and H_1.

    Only free H_1 of even rank 2h is possible; then the surface is a blow-up
    of CP2 (h = 0) or of an S^2-bundle over Sigma_h.
    """
    if not h1.is_free or h1.free_rank % 2:
        return ()
    h = h1.free_rank // 2
    if h == 0:
        if euler == 3:
            return ("CP2",)
        if euler == 4:
            return ("S2xS2", "CP2#CP2bar")
        if euler > 4:
            # S2xS2#CP2bar is CP2#2CP2bar, so after one blow-up the type is unique
            return (_blown("CP2", euler - 3),)
        return ()
    k = euler - (4 - 4 * h)
    base = "S2xT2" if h == 1 else f"S2xSigma_{h}"
    twisted = "S2~xT2" if h == 1 else f"S2~xSigma_{h}"
    if k == 0:
        return (base, twisted)
    if k > 0:
        # the two bundles become diffeomorphic after one blow-up
        return (_blown(base, k),)
    return ()


def identify_manifold(p: LefschetzPencil) -> ManifoldDescriptor:
    e = euler_characteristic(p)
    h1 = first_homology(p)
    rr = is_rational_ruled(p)
    cands = rational_ruled_candidates(e, h1) if rr else ()
    return ManifoldDescriptor(e, h1, p.genus, p.base_count, rr, cands)


def blow_up(p: LefschetzPencil, bases: Iterable[str]) -> LefschetzPencil:
    bases = list(dict.fromkeys(bases))
    if not bases:
        return p
    boundary = [p.boundary_of(b) for b in bases]
    cap = cap_boundary(p.surface, boundary)
    f = p.factorization
    cache: dict[tuple, CurveClass] = {}

    def project(c: CurveClass) -> CurveClass:
        key = (c.name, c.homology.coords, c.partition)
        if key not in cache:
            part = c.partition.drop(boundary) if c.partition is not None else None
            cache[key] = CurveClass(c.name, cap.project(c.homology), c.separating, part,
                                    c.genus_split, c.origin)
        return cache[key]

    words = tuple(MappingWord(w.name, tuple((project(c), s) for c, s in w.letters))
                  for w in f.words)
    nf = PositiveFactorization(cap.target, tuple(project(c) for c in f.twists),
                               tuple(project(c) for c in f.atlas), words,
                               homological_only=f.homological_only)
    kept = tuple((d, b) for d, b in p.base_points if d not in cap.capped)
    return LefschetzPencil(nf, kept, p.blowups + len(bases),
                           known_rational_ruled=is_rational_ruled(p),
                           relatively_minimal_assumed=p.relatively_minimal_assumed,
                           name=p.name)


def pencil_report(p: LefschetzPencil) -> dict:
    desc = identify_manifold(p)
    check = homological_boundary_check(p.factorization)
    return {
        "schema": 1,
        "kind": "pencil-report",
        "name": p.name,
        "genus": p.genus,
        "base_count": p.base_count,
        "base_points": list(p.base_labels),
        "twist_count": p.twist_count,
        "blowups": p.blowups,
        "euler": desc.euler,
        "h1": desc.h1.to_json(),
        "reducible": [r.to_json(p) for r in reducible_fibers(p)],
        "flags": {
            "boundary_check": check.ok,
            "adjunction_violated": adjunction_flag(p),
            "rational_ruled": desc.rational_ruled,
            "relatively_minimal_assumed": p.relatively_minimal_assumed,
            "homologically_certified_moves": p.factorization.homological_only,
        },
        "candidates": list(desc.candidates),
    }
