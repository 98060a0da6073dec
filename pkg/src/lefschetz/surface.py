"""The surface Sigma_g^m, its first homology and the Dehn twist action on it.

Coordinates are taken in the ordered basis

    (alpha_1, beta_1, ..., alpha_g, beta_g, delta_1, ..., delta_{m-1})

where ``delta_j`` is the class of the j-th boundary component.  The last
boundary class is not stored: it equals ``-(delta_1 + ... + delta_{m-1})``.
The pairing is <alpha_i, beta_i> = 1; boundary classes lie in its radical.

Sign convention: the positive (right-handed) twist about ``a`` acts by
``x -> x + <x, a> a``.  Every invariant computed downstream is insensitive to
this global choice, but it is used consistently everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import mul
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError, SurfaceMismatch
from .homlin import IntMatrix


@dataclass(frozen=True)
class Surface:
    genus: int
    boundary_count: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.genus < 0 or self.boundary_count < 0:
            raise ValueError("genus and boundary count must be nonnegative")
        if not self.labels:
            object.__setattr__(self, "labels",
                               tuple(f"d{j}" for j in range(1, self.boundary_count + 1)))
        if len(self.labels) != self.boundary_count:
            raise ValueError(f"{len(self.labels)} labels for {self.boundary_count} boundary components")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate boundary labels {self.labels}")

    @property
    def rank(self) -> int:
        return 2 * self.genus + max(self.boundary_count - 1, 0)

    def label_index(self, label: str) -> int:
        """1-based boundary index of ``label``."""
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise PreconditionError(f"surface has no boundary component {label!r}") from None

    def zero(self) -> "HomologyClass":
        return HomologyClass(self, (0,) * self.rank)

    def basis(self) -> list["HomologyClass"]:
        return [HomologyClass(self, tuple(int(i == j) for i in range(self.rank)))
                for j in range(self.rank)]

    def alpha(self, i: int) -> "HomologyClass":
        return self._unit(2 * (i - 1))

    def beta(self, i: int) -> "HomologyClass":
        return self._unit(2 * (i - 1) + 1)

    def _unit(self, pos: int) -> "HomologyClass":
        return HomologyClass(self, tuple(int(k == pos) for k in range(self.rank)))

    def vector(self, *, alpha: dict[int, int] | None = None, beta: dict[int, int] | None = None,
               delta: dict[str, int] | None = None) -> "HomologyClass":
        """Build a class from sparse coefficients; ``delta`` is keyed by label
        and may mention the implicit last boundary component."""
        x = self.zero()
        for i, c in (alpha or {}).items():
            x = x + c * self.alpha(i)
        for i, c in (beta or {}).items():
            x = x + c * self.beta(i)
        for lab, c in (delta or {}).items():
            x = x + c * boundary_class(self, self.label_index(lab))
        return x

    def __str__(self):
        return f"Sigma_{self.genus}^{self.boundary_count}"


@dataclass(frozen=True)
class HomologyClass:
    surface: Surface
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.surface.rank:
            raise DimensionError(
                f"{len(self.coords)} coordinates for a rank-{self.surface.rank} lattice")

    def _check(self, other: "HomologyClass"):
        if self.surface != other.surface:
            raise SurfaceMismatch(f"classes on {self.surface} and {other.surface}")

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._check(other)
        return HomologyClass(self.surface, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        self._check(other)
        return HomologyClass(self.surface, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.surface, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "HomologyClass":
        return HomologyClass(self.surface, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def closed_part(self) -> tuple[int, ...]:
        """The alpha/beta block, i.e. the image in H_1 of the closed surface."""
        return self.coords[:2 * self.surface.genus]

    def in_boundary_span(self) -> bool:
        return not any(self.closed_part)


def intersection_number(x: HomologyClass, y: HomologyClass) -> int:
    x._check(y)
    c, d = x.coords, y.coords
    return sum(c[2 * i] * d[2 * i + 1] - c[2 * i + 1] * d[2 * i] for i in range(x.surface.genus))


def boundary_class(s: Surface, j: int) -> HomologyClass:
    """Class of the j-th boundary component (1-based)."""
    if s.boundary_count == 0 or not 1 <= j <= s.boundary_count:
        raise PreconditionError(f"boundary index {j} out of range for {s}")
    g2, m = 2 * s.genus, s.boundary_count
    if j < m:
        return HomologyClass(s, tuple(int(k == g2 + j - 1) for k in range(s.rank)))
    return HomologyClass(s, (0,) * g2 + (-1,) * (m - 1))


def transvection(a: HomologyClass, x: HomologyClass, sign: int = 1) -> HomologyClass:
    """Action of the twist ``t_a`` (or its inverse when ``sign == -1``)."""
    k = sign * intersection_number(x, a)
    if not k:
        return x
    return HomologyClass(x.surface, tuple(xi + k * ai for xi, ai in zip(x.coords, a.coords)))


def transvection_matrix(a: HomologyClass, sign: int = 1) -> IntMatrix:
    s = a.surface
    return IntMatrix.from_columns([transvection(a, e, sign).coords for e in s.basis()], s.rank)


def product_matrix(classes: Sequence[HomologyClass], s: Surface) -> IntMatrix:
    """Matrix of ``t_{c_1} o ... o t_{c_n}`` on H_1(s)."""
    for a in classes:
        if a.surface != s:
            raise SurfaceMismatch(f"class on {a.surface} in a product over {s}")
    # hot path for the property suite: <x, a> is x . Ja with Ja precomputed
    g, n = s.genus, s.rank
    pairs = []
    for a in reversed(classes):
        c = a.coords
        ja = [0] * n
        ja[0:2 * g:2] = c[1:2 * g:2]
        ja[1:2 * g:2] = [-t for t in c[0:2 * g:2]]
        pairs.append((c, ja))
    cols = []
    for e in range(n):
        x = [0] * n
        x[e] = 1
        for a, ja in pairs:
            k = sum(map(mul, x, ja))
            if k:
                x = [xi + k * ai for xi, ai in zip(x, a)]
        cols.append(x)
    return IntMatrix.from_columns(cols, n)


@dataclass(frozen=True)
class CapMap:
    """Homological effect of capping some boundary components with disks."""

    source: Surface
    capped: frozenset[str]
    target: Surface
    matrix: IntMatrix  # target.rank x source.rank

    def project(self, x: HomologyClass) -> HomologyClass:
        if x.surface != self.source:
            raise SurfaceMismatch(f"cap map from {self.source} applied to a class on {x.surface}")
        return HomologyClass(self.target, self.matrix.apply(x.coords))


def cap_boundary(s: Surface, labels: Iterable[str]) -> CapMap:
    """Cap the boundary components named in ``labels``.

    The retained components keep their order; the last retained one becomes
    the implicit class of the target surface.
    """
    capped = frozenset(labels)
    unknown = capped - set(s.labels)
    if unknown:
        raise PreconditionError(f"cannot cap unknown boundary components {sorted(unknown)}")
    kept = tuple(lab for lab in s.labels if lab not in capped)
    t = Surface(s.genus, len(kept), kept)
    g2 = 2 * s.genus
    cols = []
    for k in range(s.rank):
        if k < g2:
            cols.append(tuple(int(i == k) for i in range(t.rank)))
            continue
        lab = s.labels[k - g2]
        if lab in capped:
            cols.append((0,) * t.rank)
        else:
            cols.append(boundary_class(t, t.label_index(lab)).coords)
    return CapMap(s, capped, t, IntMatrix.from_columns(cols, t.rank))
