"""Randomized move sequences with every homological invariant re-checked.

Hurwitz moves and admissible partial conjugations must leave the boundary
check, e, H_1 and the reducible-fiber data untouched.  A run is a pure
function of the pencil and the seed.

Unconstrained random Hurwitz moves grow coordinates doubly exponentially, so
proposals whose new curve exceeds ``bound`` in some coordinate are rejected
and redrawn.  The inverse of the previous move is always within bounds.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .curves import CurveClass
from .errors import InvariantBreach
from .factorization import (PositiveFactorization, fixes_class, homological_boundary_check,
                            hurwitz_move, partial_conjugate, twist_product)
from .pencil import LefschetzPencil, euler_characteristic, first_homology, reducible_fibers


def invariants(p: LefschetzPencil) -> dict:
    return {
        "boundary_check": homological_boundary_check(p.factorization).ok,
        "euler": euler_characteristic(p),
        "h1": str(first_homology(p)),
        "reducible": len(reducible_fibers(p)),
        "partitions": Counter(str(r.partition) for r in reducible_fibers(p)),
    }


@dataclass
class FuzzReport:
    name: str
    seed: int
    hurwitz: int = 0
    partial: int = 0
    checks: int = 0
    rejected: int = 0
    final: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        final = dict(self.final)
        final["partitions"] = dict(sorted(final.get("partitions", {}).items()))
        return {"schema": 1, "kind": "fuzz-report", "name": self.name, "seed": self.seed,
                "hurwitz_moves": self.hurwitz, "partial_conjugations": self.partial,
                "rejected_proposals": self.rejected, "checks": self.checks,
                "invariants": final}


def random_partial(f: PositiveFactorization, rng: random.Random,
                   tries: int = 40) -> tuple[int, int, CurveClass]:
    """An admissible (i, k, b), preferring choices that change the word."""
    pool = list(f.atlas) + list(f.twists)
    n = len(f)
    for _ in range(tries):
        i = rng.randint(1, n)
        k = rng.randint(i, min(n, i + rng.randint(0, n)))
        sub = f.twists[i - 1:k]
        b = rng.choice(pool)
        if fixes_class(sub, b) and not all(fixes_class([b], c) for c in sub):
            return i, k, b
    # the whole word acts trivially on homology, so any curve is admissible
    return 1, n, rng.choice(pool)


def _size(f: PositiveFactorization) -> int:
    return max(abs(x) for c in f.twists for x in c.homology.coords)


def random_hurwitz(f: PositiveFactorization, rng: random.Random, bound: int,
                   last: tuple[int, str] | None, report: FuzzReport,
                   tries: int = 30) -> tuple[PositiveFactorization, tuple[int, str]]:
    for _ in range(tries):
        i = rng.randint(1, len(f) - 1)
        d = rng.choice(("left", "right"))
        g = hurwitz_move(f, i, d)
        if _size(g) <= bound:
            return g, (i, d)
        report.rejected += 1
    if last is None:
        raise InvariantBreach("no Hurwitz move stays within the coordinate bound")
    i, d = last[0], "left" if last[1] == "right" else "right"
    return hurwitz_move(f, i, d), (i, d)


def _local_certificate(old: PositiveFactorization, new: PositiveFactorization, i: int, k: int):
    """Positions i..k hold the only changed twists; their products must agree."""
    if twist_product(old.twists[i - 1:k], old.surface) != twist_product(new.twists[i - 1:k],
                                                                          new.surface):
        raise InvariantBreach(f"move on [{i}..{k}] changed the product of the subword")


def _cheap(f: PositiveFactorization) -> tuple:
    seps = Counter(str(c.partition) for c in f.twists if c.separating)
    return len(f), seps


def fuzz(p: LefschetzPencil, hurwitz: int = 1000, partial: int = 100, seed: int = 0,
         check_every: int = 1, bound: int = 64) -> FuzzReport:
    """Interleave ``hurwitz`` Hurwitz moves with ``partial`` partial conjugations.

    Every move gets a local certificate (the rewritten subword has the same
    product) and a check of length and partition multiset; the full invariant
    set is recomputed every ``check_every`` moves and after the last one.
    """
    rng = random.Random(seed)
    expected = invariants(p)
    if not expected["boundary_check"]:
        raise InvariantBreach(f"{p.name or 'pencil'} fails the boundary check before any move")
    kinds = ["h"] * hurwitz + ["p"] * partial
    rng.shuffle(kinds)
    report = FuzzReport(p.name, seed)
    f = p.factorization
    cheap = _cheap(f)
    bound = max(bound, _size(f))
    last = None
    for step, kind in enumerate(kinds, 1):
        if kind == "h":
            g, last = random_hurwitz(f, rng, bound, last, report)
            span = (last[0], last[0] + 1)
            report.hurwitz += 1
        else:
            i, k, b = random_partial(f, rng)
            g = partial_conjugate(f, i, k, b, rng.choice((1, -1)))
            if _size(g) > bound:
                report.rejected += 1
                i, k = 1, len(f)
                g = partial_conjugate(f, i, k, b, 1)
                # conjugating everything by a twist can still grow; fall back to a no-op
                if _size(g) > bound:
                    i = k = rng.randint(1, len(f))
                    g = partial_conjugate(f, i, k, f.twists[i - 1], 1)
            span = (i, k)
            last = None
            report.partial += 1
        _local_certificate(f, g, *span)
        f = g
        if _cheap(f) != cheap:
            raise InvariantBreach(f"step {step} ({kind}): length or reducible fibers changed")
        if step % check_every == 0 or step == len(kinds):
            got = invariants(p.with_factorization(f))
            report.checks += 1
            if got != expected:
                bad = [k for k in expected if got[k] != expected[k]]
                raise InvariantBreach(f"step {step} ({kind}): {', '.join(bad)} changed")
    report.final = invariants(p.with_factorization(f))
    return report
