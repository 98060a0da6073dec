"""Encoded factorizations with their curve atlases and expected reports.

Onaran's genus-2 relation on Sigma_2^3
--------------------------------------
All atlas curves lift curves of a genus-2 chain ``c1, ..., c5`` with
[c1] = alpha_1, [c2] = beta_1, [c3] = alpha_2 - alpha_1, [c4] = beta_2,
[c5] = alpha_2.  Base point d1 sits between two parallel copies of c1, while
d2 and d3 sit between parallel copies of c5.  The four lifts of c5 are the four
ways to put those two base points on either side:

    a4 = alpha_2,   a5 = alpha_2 - d2 - d3,   a4' = alpha_2 - d3,   a6 = alpha_2 - d2

and a1 = alpha_1, a2 = alpha_1 + d1.  The lantern sphere is bounded by
a1, a2, a4, a5.  Its interior curves are a3 = a1 - a4, x = a2 - a1 = d1 (the
one-holed torus side contains d1 only), and y = a1 + a5.

Hamada's family on Sigma_{2h}^3
-------------------------------
The closed relation is (t_{B_0} ... t_{B_2h} t_C)^2 = 1 with C separating the
surface into two genus-h halves.  Handle k is paired with handle 2h+1-k.  With
s_k = sum_{j<=k} (beta_j - alpha_j) in the paired coordinates, the chain is

    B_{2k} = s_k + alpha_{k+1},  B_{2k+1} = s_k + beta_{k+1}  (0 <= k < h),  B_{2h} = s_h.

These classes pair to 2 in every order i < j, and the product of their
transvections is an involution.  The second half passes on the other side of
base point d1: B_{i,2} = B_{i,1} + d1, C_1 = 0 with all base points on one
side, and C_2 = d1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import CurveClass, MappingWord, Partition, conjugate_curve
from .errors import PreconditionError
from .factorization import Move, PositiveFactorization, replay, substitute_relation
from .pencil import LefschetzPencil
from .surface import HomologyClass, Surface


@dataclass(frozen=True)
class Expected:
    value: object
    basis: str  # "published" or "computed"
    note: str = ""


@dataclass(frozen=True)
class CorpusEntry:
    identifier: str
    pencil: LefschetzPencil
    expected: dict = field(default_factory=dict)
    citation: str = ""


def _base_points(s: Surface) -> tuple[tuple[str, str], ...]:
    return tuple((d, "b" + d[1:]) for d in s.labels)


def _nonsep(name: str, x: HomologyClass) -> CurveClass:
    return CurveClass(name, x)


def _sep(name: str, x: HomologyClass, left, right) -> CurveClass:
    return CurveClass(name, x, True, Partition.of(left, right))


# --------------------------------------------------------------------------
# Onaran

ONARAN_SURFACE = Surface(2, 3)


def onaran_atlas() -> dict[str, CurveClass]:
    s = ONARAN_SURFACE
    v = s.vector
    curves = [
        _nonsep("a1", v(alpha={1: 1})),
        _nonsep("a2", v(alpha={1: 1}, delta={"d1": 1})),
        _nonsep("a3", v(alpha={1: 1, 2: -1})),
        _nonsep("a4", v(alpha={2: 1})),
        _nonsep("a5", v(alpha={2: 1}, delta={"d2": -1, "d3": -1})),
        _nonsep("a4'", v(alpha={2: 1}, delta={"d3": -1})),
        _nonsep("a6", v(alpha={2: 1}, delta={"d2": -1})),
        _nonsep("b1", v(beta={1: 1})),
        _nonsep("b2", v(beta={2: 1})),
    ]
    return {c.name: c for c in curves}


def onaran_lantern_curves() -> dict[str, CurveClass]:
    s = ONARAN_SURFACE
    v = s.vector
    return {
        "x": _sep("x", v(delta={"d1": 1}), ["d1"], ["d2", "d3"]),
        "y": _nonsep("y", v(alpha={1: 1, 2: 1}, delta={"d1": 1})),
    }


def onaran_words(atlas: dict[str, CurveClass]) -> dict[str, MappingWord]:
    psi = MappingWord("psi", ((atlas["a5"], -1), (atlas["a4"], -1)))
    psi2 = MappingWord("psi2", psi.letters + psi.letters)
    return {"psi": psi, "psi2": psi2}


ONARAN_WORD = ["a3", "b1"] + ["a1", "a2", "a3", "b1"] * 2 + [
    "a3", "psi:b2", "a3", "b2", "a4", "a5", "a3", "b2", "a4'", "a6"]
ONARAN_REWRITTEN_WORD = ["a3", "b1", "a1", "a2", "a3", "b1", "a1", "a2", "a4", "a5",
                         "psi:a3", "psi:b1", "psi:a3", "psi2:b2", "psi:a3", "psi:b2",
                         "a3", "b2", "a4'", "a6"]
# t_a1 t_a2 t_a4 t_a5 in the rewritten word: the lantern boundary
LANTERN_RANGE = (7, 10)
LANTERN_REPLACEMENT = ["a3", "x", "y"]


def resolve(expr: str, atlas: dict[str, CurveClass], words: dict[str, MappingWord]) -> CurveClass:
    if ":" in expr:
        w, c = expr.split(":", 1)
        return conjugate_curve(words[w], atlas[c])
    return atlas[expr]


def _onaran_pencil(word: list[str], name: str, extra: dict | None = None) -> LefschetzPencil:
    atlas = onaran_atlas()
    if extra:
        atlas.update(extra)
    words = onaran_words(atlas)
    f = PositiveFactorization(ONARAN_SURFACE, tuple(resolve(t, atlas, words) for t in word),
                              tuple(atlas.values()), tuple(words.values()))
    return LefschetzPencil(f, _base_points(ONARAN_SURFACE), name=name)


def onaran_pencil() -> LefschetzPencil:
    return _onaran_pencil(ONARAN_WORD, "onaran")


def onaran_rewritten_pencil() -> LefschetzPencil:
    """Same monodromy with t_a4 t_a5 pushed left through six twists, which
    conjugates those six by psi."""
    return _onaran_pencil(ONARAN_REWRITTEN_WORD, "onaran-rewritten")


def onaran_rewriting_moves() -> list[Move]:
    """Twelve left Hurwitz moves taking the original word to the rewritten one."""
    return ([Move("hurwitz", i, i + 1, "left") for i in range(14, 8, -1)]
            + [Move("hurwitz", i, i + 1, "left") for i in range(15, 9, -1)])


def onaran_lantern_pencil() -> tuple[LefschetzPencil, tuple[Move, ...]]:
    """Lantern-substituted pencil plus the move log from ``onaran_pencil``.

    The log replays the Hurwitz route above and then the certified lantern
    substitution.
    """
    src = onaran_pencil()
    f = replay(src.factorization, onaran_rewriting_moves())
    lantern = {**onaran_atlas(), **onaran_lantern_curves()}
    i, k = LANTERN_RANGE
    f = substitute_relation(f, i, k, [lantern[n] for n in LANTERN_REPLACEMENT])
    # twist names follow the literature form psi:c rather than the nested Hurwitz names
    names = ONARAN_REWRITTEN_WORD[:i - 1] + LANTERN_REPLACEMENT + ONARAN_REWRITTEN_WORD[k:]
    twists = tuple(c.renamed(n) for c, n in zip(f.twists, names))
    clean = _onaran_pencil(names, "onaran-lantern", onaran_lantern_curves())
    for a, b in zip(twists, clean.factorization.twists):
        if a.homology != b.homology:
            raise AssertionError(f"Hurwitz route disagrees with the stored word at {b.name}")
    return clean, f.log


# --------------------------------------------------------------------------
# Hamada

def hamada_surface(h: int) -> Surface:
    return Surface(2 * h, 3)


def hamada_chain(h: int) -> list[HomologyClass]:
    """Closed parts of B_0, ..., B_{2h} on Sigma_{2h}^3."""
    if h < 1:
        raise PreconditionError(f"Hamada family needs h >= 1, got {h}")
    s = hamada_surface(h)
    g = 2 * h

    def paired(alpha: dict[int, int], beta: dict[int, int]) -> HomologyClass:
        a, b = {}, {}
        for k, c in alpha.items():
            a[k] = a.get(k, 0) + c
            a[g + 1 - k] = a.get(g + 1 - k, 0) + c
        for k, c in beta.items():
            b[k] = b.get(k, 0) + c
            b[g + 1 - k] = b.get(g + 1 - k, 0) + c
        return s.vector(alpha=a, beta=b)

    chain = []
    for k in range(h + 1):
        sa = {j: -1 for j in range(1, k + 1)}
        sb = {j: 1 for j in range(1, k + 1)}
        if k < h:
            chain.append(paired({**sa, k + 1: sa.get(k + 1, 0) + 1}, sb))
            chain.append(paired(sa, {**sb, k + 1: sb.get(k + 1, 0) + 1}))
        else:
            chain.append(paired(sa, sb))
    return chain


def hamada_atlas(h: int) -> dict[str, CurveClass]:
    s = hamada_surface(h)
    d1 = s.vector(delta={"d1": 1})
    atlas = {}
    for i, b in enumerate(hamada_chain(h)):
        atlas[f"B{i}_1"] = _nonsep(f"B{i}_1", b)
        atlas[f"B{i}_2"] = _nonsep(f"B{i}_2", b + d1)
    atlas["C1"] = _sep("C1", s.zero(), [], ["d1", "d2", "d3"])
    atlas["C2"] = _sep("C2", d1, ["d1"], ["d2", "d3"])
    return atlas


def hamada_word(h: int) -> list[str]:
    n = 2 * h + 1
    return [f"B{i}_1" for i in range(n)] + ["C1"] + [f"B{i}_2" for i in range(n)] + ["C2"]


def hamada_pencil(h: int) -> LefschetzPencil:
    atlas = hamada_atlas(h)
    s = hamada_surface(h)
    f = PositiveFactorization(s, tuple(atlas[n] for n in hamada_word(h)), tuple(atlas.values()))
    # identification of the total space comes from the closed relation, not adjunction
    return LefschetzPencil(f, _base_points(s), known_rational_ruled=True, name=f"hamada-h{h}")


# --------------------------------------------------------------------------
# expected reports

def onaran_entry() -> CorpusEntry:
    return CorpusEntry("onaran", onaran_pencil(), {
        "twist_count": Expected(20, "computed", "word length"),
        "boundary_check": Expected(True, "computed", "transvection product"),
        "reducible": Expected(0, "computed", "all atlas curves nonseparating"),
        "euler_all_blown": Expected(16, "published", "e after blowing up every base point"),
    }, "positive factorization in Gamma_2^3 found by S. Onaran")


def onaran_rewritten_entry() -> CorpusEntry:
    return CorpusEntry("onaran-rewritten", onaran_rewritten_pencil(), {
        "twist_count": Expected(20, "computed", "Hurwitz moves keep the length"),
        "boundary_check": Expected(True, "computed", "transvection product"),
        "reducible": Expected(0, "computed", "all atlas curves nonseparating"),
        "euler_all_blown": Expected(16, "published", "e after blowing up every base point"),
    }, "the Onaran word with t_a4 t_a5 moved six places left")


def onaran_lantern_entry() -> CorpusEntry:
    p, _ = onaran_lantern_pencil()
    return CorpusEntry("onaran-lantern", p, {
        "twist_count": Expected(19, "computed", "one lantern substitution"),
        "boundary_check": Expected(True, "computed", "transvection product"),
        "euler": Expected(12, "published", "4 - 4g + l - m"),
        "h1": Expected("0", "published", "a1, b1, a3, b2 span the closed fiber homology"),
        "reducible": Expected(1, "published", "only x separates"),
        "x_partition": Expected("{d1}|{d2,d3}", "computed", "unique assignment matching K-counts"),
        "manifold": Expected("CP2#9CP2bar", "published", "rational, e = 12, simply connected"),
    }, "lantern substitution along t_a1 t_a2 t_a4 t_a5")


def hamada_entry(h: int) -> CorpusEntry:
    return CorpusEntry(f"hamada-h{h}", hamada_pencil(h), {
        "twist_count": Expected(4 * h + 4, "computed", "2h+1 B-curves per half"),
        "boundary_check": Expected(True, "computed", "transvection product"),
        "euler": Expected(5 - 4 * h, "computed", "e = 4 - 4g + l - m"),
        "h1": Expected(f"Z^{2 * h}", "computed", "cokernel of the vanishing cycles"),
        "reducible": Expected(2, "published", "C1 and C2"),
        "manifold": Expected(f"S2x{'T2' if h == 1 else f'Sigma_{h}'}#CP2bar", "published",
                             "ruled over Sigma_h, one blow-up"),
    }, "W_IIA for even genus, three boundary components, due to N. Hamada")


def entries(max_h: int = 5) -> list[CorpusEntry]:
    onaran = [onaran_entry(), onaran_rewritten_entry(), onaran_lantern_entry()]
    return onaran + [hamada_entry(h) for h in range(1, max_h + 1)]


def by_name(name: str, h: int = 1) -> LefschetzPencil:
    if name == "onaran":
        return onaran_pencil()
    if name == "onaran-rewritten":
        return onaran_rewritten_pencil()
    if name == "onaran-lantern":
        return onaran_lantern_pencil()[0]
    if name == "hamada":
        return hamada_pencil(h)
    raise KeyError(name)


CORPUS_NAMES = ("onaran", "onaran-rewritten", "onaran-lantern", "hamada")
