import pytest

from lefschetz import corpus
from lefschetz.doubling import (BASE_FREE_MARKER, NOT_CONSTRUCTED, VERDICT, check_doubling_bounds,
                                doubling_recipe, iterate_double, partial_double)
from lefschetz.errors import PreconditionError

LANTERN = corpus.onaran_lantern_pencil()[0]


def test_bounds():
    check_doubling_bounds(2, 2)
    for g, m in [(1, 1), (2, 0), (2, 3), (3, 5)]:
        with pytest.raises(PreconditionError):
            check_doubling_bounds(g, m)


def test_partial_double_counts():
    s = partial_double(LANTERN, ["b2", "b3"])
    assert (s.genus, s.base_count, s.reducible_count) == (5, 8, 1)
    assert s.provenance == NOT_CONSTRUCTED
    assert partial_double(LANTERN, ["b1", "b2"]).reducible_count == 0
    assert partial_double(LANTERN, ["b1", "b3"]).reducible_count == 0
    with pytest.raises(PreconditionError):
        partial_double(LANTERN, ["b1", "b2", "b3"])
    with pytest.raises(PreconditionError):
        partial_double(LANTERN, ["b7"])


def test_recipe_needs_equal_sizes():
    with pytest.raises(PreconditionError):
        doubling_recipe(LANTERN, ["b1"], ["b1", "b2"])


def test_recipe_without_difference_has_no_verdict():
    c = doubling_recipe(LANTERN, ["b1", "b2"], ["b1", "b3"])
    assert c.counts == (0, 0) and c.verdict is None
    assert c.to_json()["blowup_options"] == []


def test_recipe_certificate():
    c = doubling_recipe(LANTERN, ["b2", "b3"], ["b1", "b2"])
    assert c.counts == (1, 0) and c.verdict == VERDICT
    assert c.ambient.candidates == ("CP2#10CP2bar",)
    opts = c.to_json()["blowup_options"]
    assert len(opts) == 9 and opts[-1]["kind"] == "fibrations"


def test_iterated_doubles():
    s = iterate_double(partial_double(LANTERN, ["b2", "b3"]), 1)
    assert (s.genus, s.base_count, s.reducible_count) == (17, 32, 1)
    assert s.contributions[0].partition == BASE_FREE_MARKER
    s = iterate_double(s, 1)
    assert (s.genus, s.base_count, s.iterations) == (65, 128, 3)
    with pytest.raises(PreconditionError):
        iterate_double(s, 0)
