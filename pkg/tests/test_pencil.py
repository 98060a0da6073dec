import pytest

from lefschetz import corpus
from lefschetz.errors import PreconditionError
from lefschetz.homlin import AbelianGroup
from lefschetz.pencil import (LefschetzPencil, adjunction_flag, blow_up, euler_characteristic,
                              first_homology, identify_manifold, pencil_report,
                              rational_ruled_candidates, reducible_fibers,
                              unblown_euler_characteristic)


def test_onaran_invariants():
    p = corpus.onaran_pencil()
    assert euler_characteristic(p) == 13
    assert first_homology(p).is_trivial
    assert reducible_fibers(p) == []
    assert adjunction_flag(p)  # 2g - 2 = 2 < 3


def test_blowing_up_every_base_point():
    p = blow_up(corpus.onaran_pencil(), ["b1", "b2", "b3"])
    assert p.base_count == 0 and p.blowups == 3
    assert euler_characteristic(p) == 16
    assert unblown_euler_characteristic(p) == 13
    assert identify_manifold(p).candidates == ("CP2#13CP2bar",)


def test_blow_up_projects_partitions():
    p, _ = corpus.onaran_lantern_pencil()
    q = blow_up(p, ["b1"])
    (r,) = reducible_fibers(q)
    assert str(r.partition) == "{}|{d2,d3}"
    assert q.known_rational_ruled  # carried from the adjunction violation before blowing up
    with pytest.raises(PreconditionError):
        blow_up(p, ["b9"])


def test_base_point_labels_validated():
    p = corpus.onaran_pencil()
    with pytest.raises(PreconditionError):
        LefschetzPencil(p.factorization, (("d1", "b1"), ("d2", "b1"), ("d3", "b3")))
    with pytest.raises(PreconditionError):
        LefschetzPencil(p.factorization, (("d1", "b1"), ("d2", "b2")))


def test_candidates():
    z = AbelianGroup(0, ())
    assert rational_ruled_candidates(3, z) == ("CP2",)
    assert rational_ruled_candidates(4, z) == ("S2xS2", "CP2#CP2bar")
    assert rational_ruled_candidates(12, z) == ("CP2#9CP2bar",)
    assert rational_ruled_candidates(0, AbelianGroup(2, ())) == ("S2xT2", "S2~xT2")
    assert rational_ruled_candidates(1, AbelianGroup(2, ())) == ("S2xT2#CP2bar",)
    assert rational_ruled_candidates(5, AbelianGroup(0, (2,))) == ()


def test_no_adjunction_violation_means_no_identification():
    p = corpus.hamada_pencil(2)
    q = LefschetzPencil(p.factorization, p.base_points)
    assert not adjunction_flag(q)  # genus 4, three base points
    assert identify_manifold(q).candidates == ()
    assert identify_manifold(p).candidates == ("S2xSigma_2#CP2bar",)
    assert adjunction_flag(corpus.hamada_pencil(1))


def test_report_schema():
    r = pencil_report(corpus.onaran_lantern_pencil()[0])
    assert r["schema"] == 1 and r["kind"] == "pencil-report"
    assert r["reducible"][0]["base_partition"] == [["b1"], ["b2", "b3"]]
    assert r["flags"]["relatively_minimal_assumed"]


def test_blow_up_empty_is_identity():
    p = corpus.onaran_pencil()
    assert blow_up(p, []) is p


def test_blow_up_composes():
    p = corpus.hamada_pencil(2)
    a = blow_up(blow_up(p, ["b1"]), ["b3"])
    b = blow_up(p, ["b1", "b3"])
    assert pencil_report(a) == pencil_report(b)
    assert first_homology(a) == first_homology(p)


def test_blown_up_identifications():
    q = blow_up(corpus.onaran_lantern_pencil()[0], ["b1"])
    assert euler_characteristic(q) == 13 and q.base_count == 2
    assert "CP2#10CP2bar" in identify_manifold(q).candidates
    for h in (1, 2, 3):
        q = blow_up(corpus.hamada_pencil(h), ["b1"])
        base = "S2xT2" if h == 1 else f"S2xSigma_{h}"
        assert identify_manifold(q).candidates == (base + "#2CP2bar",)
        c2 = [r for r in reducible_fibers(q) if r.curve == "C2"][0]
        assert str(c2.partition) == "{}|{d2,d3}"


def test_boundary_parallel_cycles_leave_h1_free():
    from lefschetz.curves import CurveClass
    from lefschetz.factorization import PositiveFactorization
    from lefschetz.surface import Surface, boundary_class
    s = Surface(2, 2)
    d = CurveClass("d", boundary_class(s, 1))
    p = LefschetzPencil(PositiveFactorization(s, (d, d)), (("d1", "b1"), ("d2", "b2")))
    assert first_homology(p) == AbelianGroup(4, ())
