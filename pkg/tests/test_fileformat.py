from importlib import resources

import pytest
from hypothesis import given, settings, strategies as st

from lefschetz import corpus
from lefschetz.errors import CertificateError
from lefschetz.factorization import hurwitz_move, same_twists
from lefschetz.fileformat import ParseError, apply_script, emit, parse
from lefschetz.pencil import blow_up, pencil_report

DATA = resources.files("lefschetz").joinpath("data")

SMALL = """\
surface g=1 m=1
curve a hom=(1,0) sep=no ;
curve b hom=(0,1) sep=no ;
factorization t[a] t[b] t[a] t[b] t[a] t[b]
factorization t[a] t[b] t[a] t[b] t[a] t[b]
basepoints d1=p
"""


def shipped(name):
    return DATA.joinpath(name).read_text(encoding="utf-8")


def test_small_file():
    p = parse(SMALL)
    r = pencil_report(p)
    assert r["twist_count"] == 12 and r["flags"]["boundary_check"]
    assert r["euler"] == 11 and r["h1"]["text"] == "0"


@pytest.mark.parametrize("entry", corpus.entries(5), ids=lambda e: e.identifier)
def test_round_trip(entry):
    text = emit(entry.pencil)
    q = parse(text)
    assert pencil_report(q) == pencil_report(entry.pencil)
    assert same_twists(q.factorization, entry.pencil.factorization)
    assert emit(q) == text


@pytest.mark.parametrize("entry", corpus.entries(5), ids=lambda e: e.identifier)
def test_shipped_files_match_corpus(entry):
    q = parse(shipped(entry.identifier + ".fac"))
    assert pencil_report(q) == pencil_report(entry.pencil)


def test_onaran_file_has_20_twists():
    assert parse(shipped("onaran.fac")).twist_count == 20


def test_blown_up_round_trip():
    p = blow_up(corpus.onaran_lantern_pencil()[0], ["b1"])
    assert pencil_report(parse(emit(p))) == pencil_report(p)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 19), st.sampled_from(["left", "right"])), max_size=8))
def test_round_trip_after_moves(moves):
    p = corpus.onaran_pencil()
    f = p.factorization
    for i, d in moves:
        f = hurwitz_move(f, i, d)
    p = p.with_factorization(f)
    q = parse(emit(p))
    assert same_twists(q.factorization, f)


def test_declaration_order_does_not_matter():
    text = shipped("onaran-lantern.fac")
    lines = text.splitlines()
    curves = [l for l in lines if l.startswith("curve")]
    rest = [l for l in lines if not l.startswith("curve")]
    shuffled = "\n".join(rest[:3] + curves[::-1] + rest[3:])
    assert pencil_report(parse(shuffled)) == pencil_report(parse(text))


def test_move_script_reproduces_lantern_pencil():
    p = apply_script(parse(shipped("onaran.fac")), shipped("onaran-lantern.moves"))
    target = corpus.onaran_lantern_pencil()[0]
    assert same_twists(p.factorization, target.factorization)
    assert pencil_report(parse(emit(p)))["euler"] == 12


def test_move_script_rejects_bad_substitution():
    script = "curve y hom=(1,0,1,0,1,1) sep=no ;\nsubstitute 7 10 a3 y\n"
    with pytest.raises(CertificateError):
        apply_script(corpus.onaran_rewritten_pencil(), script)


def _error(text):
    with pytest.raises(ParseError) as e:
        parse(text)
    return e.value


def test_separating_without_sides():
    e = _error(SMALL.replace("curve b hom=(0,1) sep=no", "curve b hom=(0,1) sep=yes"))
    assert e.line == 3 and "sides" in e.message


def test_sides_on_nonseparating():
    e = _error(SMALL.replace("sep=no ;", "sep=no sides={}|{d1} ;", 1))
    assert e.line == 2 and "nonseparating" in e.message


def test_undefined_word_is_named():
    e = _error(SMALL.replace("t[a] t[b] t[a] t[b] t[a] t[b]\nbase", "t[a] t[b] t[a] t[b] t[a] "
                                                                   "t[psi:b]\nbase"))
    assert "psi" in e.message and e.line == 5


def test_undefined_curve():
    e = _error(SMALL.replace("t[a] t[b] t[a] t[b] t[a] t[b]\nbase", "t[a] t[b] t[a] t[b] t[a] "
                                                                   "t[zz]\nbase"))
    assert "zz" in e.message


def test_coordinate_length():
    e = _error(SMALL.replace("hom=(1,0)", "hom=(1,0,0)"))
    assert e.line == 2 and "coordinates" in e.message


def test_syntax_error_position():
    e = _error(SMALL.replace("hom=(1,0)", "hom=(1 0)"))
    assert (e.line, e.col) == (2, 16)  # the stray 0
    e = _error("surface g=1 m=1\ncurve a hom=(1,0) sep=no ; extra\n")
    assert e.line == 2


def test_comments_and_whitespace():
    text = "# header\n" + SMALL.replace("curve a hom=(1,0)", "curve   a  hom = ( 1 , 0 )") + \
        "   # trailing\n"
    assert parse(text).twist_count == 12


def test_missing_declarations():
    assert "surface" in _error("curve a hom=(1,0) sep=no ;\n").message
    assert "basepoints" in _error(SMALL.replace("basepoints d1=p\n", "")).message
    assert "no base point" in _error(SMALL.replace("basepoints d1=p", "basepoints")).message
