"""Line-oriented factorization files.

    # comment
    name onaran
    surface g=2 m=3                      # optional: labels=d1,d2,d3
    curve a1 hom=(1,0,0,0,0,0) sep=no ;
    curve x  hom=(0,0,0,0,1,0) sep=yes sides={d1}|{d2,d3} ;
    word psi = inv(a5) inv(a4)
    factorization t[a3] t[b1] t[psi:b2] ...   # repeated lines concatenate
    basepoints d1=b1 d2=b2 d3=b3
    blowups 0
    assume rational-ruled

Declarations may appear in any order.  Coordinates follow the basis
(alpha_1, beta_1, ..., alpha_g, beta_g, d_1, ..., d_{m-1}).

Move scripts use the same ``curve`` and ``word`` lines plus

    hurwitz <i> left|right
    conjugate <word>
    partial <i> <k> <curve> +|-
    substitute <i> <k> <curveexpr>...
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .curves import CurveClass, MappingWord, Partition, check_curve_consistency, conjugate_curve
from .errors import LefschetzError
from .factorization import (PositiveFactorization, global_conjugate, hurwitz_move,
                            partial_conjugate, substitute_relation)
from .pencil import LefschetzPencil
from .surface import HomologyClass, Surface


class ParseError(LefschetzError):
    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col
        self.message = message


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>-?\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_'\-]*)
  | (?P<punct>[()\[\]{}|,=:;+\-])
""", re.VERBOSE)

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_'\-]*\Z")


@dataclass
class Token:
    kind: str
    text: str
    col: int


class Line:
    """Cursor over the tokens of one logical line."""

    def __init__(self, number: int, text: str):
        self.number = number
        self.tokens: list[Token] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(number, pos + 1, f"unexpected character {text[pos]!r}")
            if m.lastgroup != "ws":
                self.tokens.append(Token(m.lastgroup, m.group(), pos + 1))
            pos = m.end()
        self.i = 0
        self.end_col = len(text) + 1

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        if tok is None:
            tok = self.peek()
        return ParseError(self.number, tok.col if tok else self.end_col, message)

    def peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)

    def next(self, what: str) -> Token:
        tok = self.peek()
        if tok is None:
            raise self.error(f"expected {what}, found end of line")
        self.i += 1
        return tok

    def ident(self, what: str = "identifier") -> Token:
        tok = self.next(what)
        if tok.kind != "ident":
            raise self.error(f"expected {what}, found {tok.text!r}", tok)
        return tok

    def integer(self, what: str = "integer") -> int:
        tok = self.next(what)
        if tok.kind != "int":
            raise self.error(f"expected {what}, found {tok.text!r}", tok)
        return int(tok.text)

    def punct(self, ch: str) -> Token:
        tok = self.next(repr(ch))
        if tok.text != ch:
            raise self.error(f"expected {ch!r}, found {tok.text!r}", tok)
        return tok

    def accept(self, ch: str) -> bool:
        tok = self.peek()
        if tok is not None and tok.text == ch:
            self.i += 1
            return True
        return False

    def keyvalue(self, key: str) -> Token:
        tok = self.ident(f"{key}=")
        if tok.text != key:
            raise self.error(f"expected {key}=, found {tok.text!r}", tok)
        self.punct("=")
        return tok

    def finish(self):
        self.accept(";")
        if not self.at_end():
            raise self.error(f"unexpected {self.peek().text!r}")


def _lines(text: str) -> Iterator[Line]:
    for n, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield Line(n, body)


# ---------------------------------------------------------------- records

@dataclass
class _CurveDecl:
    line: Line
    name: Token
    coords: list[int]
    coords_tok: Token
    separating: bool
    sides: tuple[list[str], list[str]] | None
    sides_tok: Token | None
    split: tuple[int, int] | None


@dataclass
class _WordDecl:
    line: Line
    name: Token
    letters: list[tuple[Token, int]]


def _side(ln: Line) -> list[str]:
    ln.punct("{")
    out = []
    if not ln.accept("}"):
        while True:
            out.append(ln.ident("boundary label").text)
            if ln.accept("}"):
                break
            ln.punct(",")
    return out


def _curve_decl(ln: Line) -> _CurveDecl:
    name = ln.ident("curve name")
    ctok = ln.keyvalue("hom")
    ln.punct("(")
    coords = []
    if not ln.accept(")"):
        while True:
            coords.append(ln.integer("coordinate"))
            if ln.accept(")"):
                break
            ln.punct(",")
    ln.keyvalue("sep")
    flag = ln.ident("yes or no")
    if flag.text not in ("yes", "no"):
        raise ln.error(f"sep must be yes or no, found {flag.text!r}", flag)
    sides = stok = split = None
    while not ln.at_end() and ln.peek().text != ";":
        key = ln.peek()
        if key.text == "sides":
            stok = ln.keyvalue("sides")
            left = _side(ln)
            ln.punct("|")
            sides = (left, _side(ln))
        elif key.text == "split":
            ln.keyvalue("split")
            a = ln.integer("genus")
            ln.punct("+")
            split = (a, ln.integer("genus"))
        else:
            raise ln.error(f"unexpected {key.text!r} in curve declaration", key)
    ln.finish()
    if flag.text == "yes" and sides is None:
        raise ln.error(f"separating curve {name.text} needs sides={{...}}|{{...}}", flag)
    if flag.text == "no" and sides is not None:
        raise ln.error(f"nonseparating curve {name.text} cannot have sides", stok)
    return _CurveDecl(ln, name, coords, ctok, flag.text == "yes", sides, stok, split)


def _word_decl(ln: Line) -> _WordDecl:
    name = ln.ident("word name")
    ln.punct("=")
    letters = []
    while not ln.at_end():
        tok = ln.ident("curve or inv(curve)")
        if tok.text == "inv" and ln.accept("("):
            tok = ln.ident("curve name")
            ln.punct(")")
            letters.append((tok, -1))
        else:
            letters.append((tok, 1))
    if not letters:
        raise ln.error(f"word {name.text} has no letters")
    return _WordDecl(ln, name, letters)


def _twist_exprs(ln: Line) -> list[tuple[Token, Token | None]]:
    out = []
    while not ln.at_end():
        t = ln.ident("t[...]")
        if t.text != "t":
            raise ln.error(f"expected t[...], found {t.text!r}", t)
        ln.punct("[")
        out.append(_curve_expr(ln))
        ln.punct("]")
    return out


def _curve_expr(ln: Line) -> tuple[Token, Token | None]:
    a = ln.ident("curve expression")
    if ln.accept(":"):
        return (ln.ident("curve name"), a)
    return (a, None)


class Scope:
    """Resolved curves and words on one surface."""

    def __init__(self, surface: Surface):
        self.surface = surface
        self.curves: dict[str, CurveClass] = {}
        self.words: dict[str, MappingWord] = {}

    def add_curves(self, decls: list[_CurveDecl]):
        for d in decls:
            if d.name.text in self.curves:
                raise d.line.error(f"curve {d.name.text} declared twice", d.name)
            s = self.surface
            if len(d.coords) != s.rank:
                raise d.line.error(f"curve {d.name.text} has {len(d.coords)} coordinates; "
                                   f"{s} needs {s.rank}", d.coords_tok)
            part = None
            if d.sides is not None:
                try:
                    part = Partition.of(*d.sides)
                except ValueError as e:
                    raise d.line.error(str(e), d.sides_tok) from None
                if part.labels != set(s.labels):
                    raise d.line.error(f"sides {part} must cover exactly {', '.join(s.labels)}",
                                       d.sides_tok)
            c = CurveClass(d.name.text, HomologyClass(s, tuple(d.coords)), d.separating, part,
                           d.split)
            errors = [x for x in check_curve_consistency(c) if x.level == "error"]
            if errors:
                raise d.line.error(errors[0].message, d.name)
            self.curves[c.name] = c

    def add_words(self, decls: list[_WordDecl]):
        for d in decls:
            if d.name.text in self.words:
                raise d.line.error(f"word {d.name.text} declared twice", d.name)
            self.words[d.name.text] = MappingWord(
                d.name.text, tuple((self.curve(d.line, tok), s) for tok, s in d.letters))

    def curve(self, ln: Line, tok: Token) -> CurveClass:
        try:
            return self.curves[tok.text]
        except KeyError:
            raise ln.error(f"undefined curve {tok.text!r}", tok) from None

    def expr(self, ln: Line, e: tuple[Token, Token | None]) -> CurveClass:
        c, w = e
        base = self.curve(ln, c)
        if w is None:
            return base
        if w.text not in self.words:
            raise ln.error(f"undefined word {w.text!r}", w)
        return conjugate_curve(self.words[w.text], base)


def parse(text: str) -> LefschetzPencil:
    surface_line = None
    name = ""
    curves: list[_CurveDecl] = []
    words: list[_WordDecl] = []
    twists: list[tuple[Line, list]] = []
    basepoints = None
    blowups = 0
    assume_rr = False
    for ln in _lines(text):
        kw = ln.ident("keyword")
        if kw.text == "surface":
            if surface_line is not None:
                raise ln.error("second surface declaration", kw)
            ln.keyvalue("g")
            g = ln.integer("genus")
            ln.keyvalue("m")
            m = ln.integer("boundary count")
            labels = ()
            if not ln.at_end():
                ln.keyvalue("labels")
                labels = [ln.ident("boundary label").text]
                while ln.accept(","):
                    labels.append(ln.ident("boundary label").text)
            ln.finish()
            try:
                surface_line = Surface(g, m, tuple(labels))
            except ValueError as e:
                raise ln.error(str(e), kw) from None
        elif kw.text == "name":
            name = ln.ident("pencil name").text
            ln.finish()
        elif kw.text == "curve":
            curves.append(_curve_decl(ln))
        elif kw.text == "word":
            words.append(_word_decl(ln))
        elif kw.text == "factorization":
            twists.append((ln, _twist_exprs(ln)))
        elif kw.text == "basepoints":
            if basepoints is not None:
                raise ln.error("second basepoints line", kw)
            basepoints = []
            while not ln.at_end():
                d = ln.ident("boundary label")
                ln.punct("=")
                basepoints.append((d, ln.ident("base point label")))
            basepoints = (ln, basepoints)
        elif kw.text == "blowups":
            blowups = ln.integer("blow-up count")
            if blowups < 0:
                raise ln.error("blow-up count must be nonnegative", kw)
            ln.finish()
        elif kw.text == "assume":
            what = ln.ident("assumption")
            if what.text != "rational-ruled":
                raise ln.error(f"unknown assumption {what.text!r}", what)
            ln.finish()
            assume_rr = True
        else:
            raise ln.error(f"unknown keyword {kw.text!r}", kw)

    if surface_line is None:
        raise ParseError(1, 1, "missing surface declaration")
    scope = Scope(surface_line)
    scope.add_curves(curves)
    scope.add_words(words)
    seq = [scope.expr(ln, e) for ln, exprs in twists for e in exprs]
    if not seq:
        raise ParseError(1, 1, "missing factorization line")
    if basepoints is None:
        raise ParseError(1, 1, "missing basepoints line")
    bln, pairs = basepoints
    given = {}
    for d, b in pairs:
        if d.text not in surface_line.labels:
            raise bln.error(f"unknown boundary component {d.text!r}", d)
        if d.text in given:
            raise bln.error(f"boundary component {d.text} assigned twice", d)
        given[d.text] = b.text
    missing = [d for d in surface_line.labels if d not in given]
    if missing:
        raise bln.error(f"no base point for {', '.join(missing)}")
    f = PositiveFactorization(surface_line, tuple(seq), tuple(scope.curves.values()),
                              tuple(scope.words.values()))
    try:
        return LefschetzPencil(f, tuple((d, given[d]) for d in surface_line.labels), blowups,
                               known_rational_ruled=assume_rr, name=name)
    except LefschetzError as e:
        raise bln.error(str(e)) from None


# ---------------------------------------------------------------- emission

def _coords(x: HomologyClass) -> str:
    return "(" + ",".join(str(c) for c in x.coords) + ")"


def _curve_line(name: str, c: CurveClass) -> str:
    s = f"curve {name} hom={_coords(c.homology)} sep={'yes' if c.separating else 'no'}"
    if c.separating:
        a, b = c.partition.pair
        s += " sides={" + ",".join(a) + "}|{" + ",".join(b) + "}"
    if c.genus_split is not None:
        s += f" split={c.genus_split[0]}+{c.genus_split[1]}"
    return s + " ;"


def emit(p: LefschetzPencil, per_line: int = 10) -> str:
    f = p.factorization
    s = f.surface
    out = ["# Lefschetz pencil as a positive factorization"]
    if p.name:
        out.append(f"name {p.name}")
    head = f"surface g={s.genus} m={s.boundary_count}"
    if s.labels != Surface(s.genus, s.boundary_count).labels:
        head += " labels=" + ",".join(s.labels)
    out.append(head)

    declared: dict[str, CurveClass] = {}
    lines: list[str] = []

    def same(a: CurveClass, b: CurveClass) -> bool:
        return (a.homology == b.homology and a.separating == b.separating
                and a.partition == b.partition)

    def declare(c: CurveClass) -> str:
        if IDENT.match(c.name) and c.name not in declared and c.name != "t":
            name = c.name
        elif c.name in declared and same(declared[c.name], c):
            return c.name
        else:
            for name, d in declared.items():
                if same(d, c):
                    return name
            k = len(declared)
            while f"c{k}" in declared:
                k += 1
            name = f"c{k}"
        declared[name] = c
        lines.append(_curve_line(name, c))
        return name

    for c in f.atlas:
        declare(c)
    wlines = []
    words = {}
    for w in f.words:
        if not IDENT.match(w.name):
            continue
        letters = " ".join(declare(c) if sg == 1 else f"inv({declare(c)})"
                           for c, sg in w.letters)
        words[w.name] = w
        wlines.append(f"word {w.name} = {letters}")

    exprs = []
    for c in f.twists:
        if c.name in declared and same(declared[c.name], c):
            exprs.append(f"t[{c.name}]")
            continue
        if c.origin is not None:
            wname, cname = c.origin
            if wname in words and cname in declared:
                cand = conjugate_curve(words[wname], declared[cname])
                if same(cand, c):
                    exprs.append(f"t[{wname}:{cname}]")
                    continue
        exprs.append(f"t[{declare(c)}]")

    out += lines + wlines
    for i in range(0, len(exprs), per_line):
        out.append("factorization " + " ".join(exprs[i:i + per_line]))
    out.append("basepoints " + " ".join(f"{d}={b}" for d, b in p.base_points))
    if p.blowups:
        out.append(f"blowups {p.blowups}")
    if p.known_rational_ruled:
        out.append("assume rational-ruled")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- move scripts

def apply_script(p: LefschetzPencil, text: str) -> LefschetzPencil:
    """Run a move script against ``p``; curves and words declared in the
    script join the pencil's scope."""
    f = p.factorization
    scope = Scope(f.surface)
    for c in f.atlas:
        scope.curves[c.name] = c
    for w in f.words:
        scope.words[w.name] = w
    for ln in _lines(text):
        kw = ln.ident("move keyword")
        try:
            if kw.text == "curve":
                scope.add_curves([_curve_decl(ln)])
                f = _with_scope(f, scope)
            elif kw.text == "word":
                scope.add_words([_word_decl(ln)])
                f = _with_scope(f, scope)
            elif kw.text == "hurwitz":
                i = ln.integer("position")
                d = ln.ident("left or right").text
                ln.finish()
                f = hurwitz_move(f, i, d)
            elif kw.text == "conjugate":
                w = ln.ident("word name")
                ln.finish()
                if w.text not in scope.words:
                    raise ln.error(f"undefined word {w.text!r}", w)
                f = global_conjugate(f, scope.words[w.text])
            elif kw.text == "partial":
                i, k = ln.integer("start"), ln.integer("stop")
                b = scope.expr(ln, _curve_expr(ln))
                sign = ln.next("+ or -")
                if sign.text not in "+-":
                    raise ln.error("sign must be + or -", sign)
                ln.finish()
                f = partial_conjugate(f, i, k, b, 1 if sign.text == "+" else -1)
            elif kw.text == "substitute":
                i, k = ln.integer("start"), ln.integer("stop")
                repl = []
                while not ln.at_end():
                    repl.append(scope.expr(ln, _curve_expr(ln)))
                f = substitute_relation(f, i, k, repl)
            else:
                raise ln.error(f"unknown move {kw.text!r}", kw)
        except ParseError:
            raise
        except LefschetzError as e:
            e.args = (f"line {ln.number}: {e}",)
            raise
    return p.with_factorization(f)


def _with_scope(f: PositiveFactorization, scope: Scope) -> PositiveFactorization:
    from dataclasses import replace
    return replace(f, atlas=tuple(scope.curves.values()), words=tuple(scope.words.values()))
