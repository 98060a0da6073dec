"""Positive factorizations of the boundary multi-twist and moves on them.

A factorization ``(t_1, ..., t_l)`` stands for the composite ``t_1 o ... o t_l``.
Homology cannot decide equivalence of factorizations; here it is used only as
a machine-checked necessary condition for each move.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple, Sequence

from .curves import CurveClass, MappingWord, conjugate_curve
from .errors import CertificateError, PreconditionError, SurfaceMismatch
from .homlin import IntMatrix
from .surface import Surface, product_matrix, transvection

HOMOLOGICAL_ONLY = "homologically certified"


@dataclass(frozen=True)
class Move:
    """One applied move.  Positions are 1-based and inclusive."""

    kind: str  # hurwitz | global | partial | substitute
    start: int = 0
    stop: int = 0
    direction: str = ""
    word: MappingWord | None = None
    curve: CurveClass | None = None
    sign: int = 1
    replacement: tuple[CurveClass, ...] = ()
    certificate: IntMatrix | None = None
    note: str = ""

    def describe(self) -> str:
        if self.kind == "hurwitz":
            return f"hurwitz {self.start} {self.direction}"
        if self.kind == "global":
            return f"conjugate {self.word.name}"
        if self.kind == "partial":
            return f"partial {self.start} {self.stop} {self.curve.name} {'+' if self.sign > 0 else '-'}"
        return f"substitute {self.start} {self.stop} -> " + " ".join(c.name for c in self.replacement)


@dataclass(frozen=True)
class PositiveFactorization:
    surface: Surface
    twists: tuple[CurveClass, ...]
    atlas: tuple[CurveClass, ...] = ()
    words: tuple[MappingWord, ...] = ()
    log: tuple[Move, ...] = field(default=(), compare=False)
    homological_only: bool = False

    def __post_init__(self):
        if not self.twists:
            raise PreconditionError("a positive factorization needs at least one twist")
        for c in self.twists + self.atlas:
            if c.surface != self.surface:
                raise SurfaceMismatch(f"curve {c.name} lives on {c.surface}, not {self.surface}")

    def __len__(self):
        return len(self.twists)

    def curve(self, name: str) -> CurveClass:
        for c in self.atlas:
            if c.name == name:
                return c
        raise KeyError(name)

    def word(self, name: str) -> MappingWord:
        for w in self.words:
            if w.name == name:
                return w
        raise KeyError(name)

    def _derive(self, twists: Sequence[CurveClass], move: Move, *, atlas=None,
                homological_only: bool | None = None) -> "PositiveFactorization":
        return replace(self, twists=tuple(twists),
                       atlas=self.atlas if atlas is None else tuple(atlas),
                       log=self.log + (move,),
                       homological_only=self.homological_only if homological_only is None
                       else homological_only)


class BoundaryCheck(NamedTuple):
    ok: bool
    matrix: IntMatrix


def twist_product(curves: Sequence[CurveClass], s: Surface) -> IntMatrix:
    return product_matrix([c.homology for c in curves], s)


def homological_boundary_check(f: PositiveFactorization) -> BoundaryCheck:
    m = twist_product(f.twists, f.surface)
    return BoundaryCheck(m.is_identity(), m)


def _check_range(f: PositiveFactorization, i: int, k: int):
    if not 1 <= i <= k <= len(f):
        raise PreconditionError(f"range [{i}..{k}] invalid for a word of length {len(f)}")


def hurwitz_move(f: PositiveFactorization, i: int, direction: str = "right") -> PositiveFactorization:
    """Trade the twists at positions i, i+1.

    right: (t_a, t_b) -> (t_{t_a(b)}, t_a);  left: (t_a, t_b) -> (t_b, t_{t_b^-1(a)}).
    """
    if not 1 <= i < len(f):
        raise PreconditionError(f"Hurwitz position {i} out of range for length {len(f)}")
    a, b = f.twists[i - 1], f.twists[i]
    if direction == "right":
        pair = (conjugate_curve(MappingWord.twist(a), b), a)
    elif direction == "left":
        pair = (b, conjugate_curve(MappingWord.twist(b, -1), a))
    else:
        raise PreconditionError(f"direction must be 'left' or 'right', got {direction!r}")
    twists = f.twists[:i - 1] + pair + f.twists[i + 1:]
    return f._derive(twists, Move("hurwitz", i, i + 1, direction))


def global_conjugate(f: PositiveFactorization, w: MappingWord) -> PositiveFactorization:
    for c, _ in w.letters:
        if c.surface != f.surface:
            raise SurfaceMismatch(f"word {w.name} does not live on {f.surface}")
    return f._derive([conjugate_curve(w, c) for c in f.twists], Move("global", word=w))


def fixes_class(curves: Sequence[CurveClass], b: CurveClass) -> bool:
    x = b.homology
    for c in reversed(curves):
        x = transvection(c.homology, x)
    return x == b.homology


def partial_conjugate(f: PositiveFactorization, i: int, k: int, b: CurveClass,
                      sign: int = 1) -> PositiveFactorization:
    """Conjugate the subword at positions i..k by ``t_b^sign``.

    Only the homological shadow of the admissibility condition is checked:
    the subword's action must fix [b].  The result is marked accordingly.
    """
    _check_range(f, i, k)
    if b.surface != f.surface:
        raise SurfaceMismatch(f"curve {b.name} does not live on {f.surface}")
    if sign not in (1, -1):
        raise PreconditionError("sign must be +1 or -1")
    sub = f.twists[i - 1:k]
    if not fixes_class(sub, b):
        raise CertificateError(f"subword [{i}..{k}] moves the class of {b.name}; "
                               "not a fibered Luttinger surgery even homologically")
    w = MappingWord.twist(b, sign)
    twists = f.twists[:i - 1] + tuple(conjugate_curve(w, c) for c in sub) + f.twists[k:]
    return f._derive(twists, Move("partial", i, k, word=w, curve=b, sign=sign,
                                  note=HOMOLOGICAL_ONLY), homological_only=True)


def substitute_relation(f: PositiveFactorization, i: int, k: int,
                        replacement: Sequence[CurveClass]) -> PositiveFactorization:
    """Replace positions i..k by ``replacement`` after checking that both
    sides act identically on homology."""
    _check_range(f, i, k)
    replacement = tuple(replacement)
    if not replacement:
        raise PreconditionError("empty replacement")
    for c in replacement:
        if c.surface != f.surface:
            raise SurfaceMismatch(f"replacement curve {c.name} does not live on {f.surface}")
    old = twist_product(f.twists[i - 1:k], f.surface)
    new = twist_product(replacement, f.surface)
    if old != new:
        raise CertificateError(f"replacement for [{i}..{k}] acts differently on homology")
    known = {c.name for c in f.atlas}
    atlas = f.atlas + tuple(c for c in replacement if c.name not in known)
    twists = f.twists[:i - 1] + replacement + f.twists[k:]
    return f._derive(twists, Move("substitute", i, k, replacement=replacement, certificate=new),
                     atlas=atlas)


def apply_move(f: PositiveFactorization, m: Move) -> PositiveFactorization:
    if m.kind == "hurwitz":
        return hurwitz_move(f, m.start, m.direction)
    if m.kind == "global":
        return global_conjugate(f, m.word)
    if m.kind == "partial":
        return partial_conjugate(f, m.start, m.stop, m.curve, m.sign)
    if m.kind == "substitute":
        return substitute_relation(f, m.start, m.stop, m.replacement)
    raise PreconditionError(f"unknown move kind {m.kind!r}")


def replay(f: PositiveFactorization, log: Sequence[Move]) -> PositiveFactorization:
    for m in log:
        f = apply_move(f, m)
    return f


def same_twists(f: PositiveFactorization, g: PositiveFactorization) -> bool:
    """Twist-for-twist agreement with curve names ignored."""
    if f.surface != g.surface or len(f) != len(g):
        return False
    return all(a.homology == b.homology and a.separating == b.separating
               and a.partition == b.partition for a, b in zip(f.twists, g.twists))
