from dataclasses import replace
from itertools import product

import pytest

from lefschetz import corpus
from lefschetz.curves import CurveClass, Partition, check_curve_consistency
from lefschetz.doubling import doubling_recipe
from lefschetz.errors import PreconditionError
from lefschetz.factorization import homological_boundary_check
from lefschetz.pencil import blow_up, identify_manifold, pencil_report
from lefschetz.surface import intersection_number, product_matrix

LABELS = ("d1", "d2", "d3")
ALL_PARTITIONS = [Partition.of([], LABELS)] + [
    Partition.of([d], [e for e in LABELS if e != d]) for d in LABELS]


def computed(entry):
    p = entry.pencil
    r = pencil_report(p)
    out = {"twist_count": r["twist_count"], "boundary_check": r["flags"]["boundary_check"],
           "reducible": len(r["reducible"]), "euler": r["euler"], "h1": r["h1"]["text"],
           "manifold": r["candidates"][0] if r["candidates"] else None,
           "euler_all_blown": identify_manifold(blow_up(p, p.base_labels)).euler}
    for f in r["reducible"]:
        a, b = f["partition"]
        out[f"{f['curve']}_partition"] = "{" + ",".join(a) + "}|{" + ",".join(b) + "}"
    return out


@pytest.mark.parametrize("entry", corpus.entries(5), ids=lambda e: e.identifier)
def test_expected_reports_match(entry):
    got = computed(entry)
    for key, exp in entry.expected.items():
        assert exp.basis in ("published", "computed")
        assert got[key] == exp.value, key


@pytest.mark.parametrize("entry", corpus.entries(5), ids=lambda e: e.identifier)
def test_atlas_consistency(entry):
    f = entry.pencil.factorization
    assert homological_boundary_check(f).ok
    for c in f.atlas + f.twists:
        assert not [d for d in check_curve_consistency(c) if d.level == "error"], c.name


def test_onaran_atlas_structure():
    a = corpus.onaran_atlas()
    s = corpus.ONARAN_SURFACE
    # capping every boundary component recovers a genus-2 chain c1..c5
    closed = [a[n].homology.closed_part for n in ("a1", "b1", "a3", "b2", "a4")]
    pair = lambda x, y: sum(x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i] for i in range(2))
    for i in range(5):
        for j in range(i + 1, 5):
            assert abs(pair(closed[i], closed[j])) == (1 if j == i + 1 else 0)
    # all lifts of c5 agree after capping
    assert {a[n].homology.closed_part for n in ("a4", "a5", "a4'", "a6")} == {closed[4]}
    # the lantern relation holds on the nose for the four-holed sphere
    cur = {**a, **corpus.onaran_lantern_curves()}
    lhs = product_matrix([cur[n].homology for n in ("a1", "a2", "a4", "a5")], s)
    rhs = product_matrix([cur[n].homology for n in ("a3", "x", "y")], s)
    assert lhs == rhs


def test_psi_b2():
    p = corpus.onaran_pencil()
    t = p.factorization.twists[corpus.ONARAN_WORD.index("psi:b2")]
    s = corpus.ONARAN_SURFACE
    assert t.homology == s.vector(alpha={2: 2}, beta={2: 1}, delta={"d1": 1})


@pytest.mark.parametrize("h", [1, 2, 3])
def test_hamada_chain(h):
    chain = corpus.hamada_chain(h)
    assert len(chain) == 2 * h + 1
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            # mirrored to both halves, so each pairing counts twice
            assert intersection_number(chain[i], chain[j]) == 2
    s = chain[0].surface
    m = product_matrix(chain, s)
    assert (m @ m).is_identity()


def test_hamada_rejects_h0():
    with pytest.raises(PreconditionError):
        corpus.hamada_pencil(0)


def test_lantern_log_replays():
    p, log = corpus.onaran_lantern_pencil()
    kinds = [m.kind for m in log]
    assert kinds == ["hurwitz"] * 12 + ["substitute"]


def _with_partitions(p, parts: dict):
    def fix(c: CurveClass):
        return replace(c, partition=parts[c.name]) if c.name in parts else c
    f = p.factorization
    f = replace(f, twists=tuple(fix(c) for c in f.twists), atlas=tuple(fix(c) for c in f.atlas))
    return p.with_factorization(f)


def _counts(p):
    return doubling_recipe(p, ["b2", "b3"], ["b1", "b2"]).counts


def partition_oracle(h: int = 1):
    """Every (x, C1, C2) partition assignment reproducing the counts (1,0) and (2,1)."""
    lantern = corpus.onaran_lantern_pencil()[0]
    hamada = corpus.hamada_pencil(h)
    x_ok = [px for px in ALL_PARTITIONS if _counts(_with_partitions(lantern, {"x": px})) == (1, 0)]
    c_ok = [(p1, p2) for p1, p2 in product(ALL_PARTITIONS, repeat=2)
            if _counts(_with_partitions(hamada, {"C1": p1, "C2": p2})) == (2, 1)]
    return [(px, p1, p2) for px in x_ok for p1, p2 in c_ok]


def test_partition_oracle_forces_stored_assignment():
    sols = partition_oracle()
    assert len(ALL_PARTITIONS) ** 3 == 64
    lantern = corpus.onaran_lantern_pencil()[0].factorization
    hamada = corpus.hamada_pencil(1).factorization
    stored = (lantern.curve("x").partition, hamada.curve("C1").partition,
              hamada.curve("C2").partition)
    # the counts fix x outright and the Hamada pair up to order
    assert {s[0] for s in sols} == {stored[0]}
    assert {frozenset(s[1:]) for s in sols} == {frozenset(stored[1:])}
    # homology breaks the tie: C2 = d1 only fits {d1}|{d2,d3}
    fits = [s for s in sols if not any(
        d.level == "error" for name, part in zip(("C1", "C2"), s[1:])
        for d in check_curve_consistency(replace(hamada.curve(name), partition=part)))]
    assert fits == [stored]
