"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or input error,
3 precondition violation, 4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .curves import check_curve_consistency
from .doubling import iterate_double, partial_double, doubling_recipe
from .errors import InvariantBreach, LefschetzError
from .factorization import homological_boundary_check
from .fileformat import ParseError, apply_script, emit, parse
from .fuzz import fuzz
from .pencil import LefschetzPencil, blow_up, pencil_report

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BREACH = 0, 1, 2, 3, 4


class InputError(LefschetzError):
    pass


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str | None) -> LefschetzPencil:
    return parse(_read(path))


def _bases(text: str) -> list[str]:
    return [b.strip() for b in text.split(",") if b.strip()]


def _write(path: str, text: str):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror}") from None


# ---------------------------------------------------------------- text rendering

def _text_report(r: dict) -> str:
    out = [f"pencil {r['name'] or '(unnamed)'}: genus {r['genus']}, {r['base_count']} base points "
           f"({', '.join(r['base_points']) or 'none'}), {r['twist_count']} twists"]
    if r["blowups"]:
        out.append(f"blow-ups recorded: {r['blowups']}")
    out.append(f"e(X) = {r['euler']}")
    out.append(f"H_1(X) = {r['h1']['text']}")
    out.append(f"reducible fibers: {len(r['reducible'])}")
    for f in r["reducible"]:
        a, b = f["partition"]
        out.append(f"  #{f['index']} {f['curve']}: {{{','.join(a)}}}|{{{','.join(b)}}}")
    flags = r["flags"]
    out.append(f"boundary check: {'pass' if flags['boundary_check'] else 'FAIL'}")
    out.append(f"adjunction violated: {'yes' if flags['adjunction_violated'] else 'no'}")
    if flags["homologically_certified_moves"]:
        out.append("note: contains partial conjugations certified only homologically")
    out.append("manifold: " + (" or ".join(r["candidates"]) if r["candidates"]
                               else "not identified"))
    return "\n".join(out)


def _text_double(d: dict) -> str:
    out = [f"double of {d['source'] or 'pencil'} keeping {', '.join(d['kept']) or 'all'}"
           f" (x{d['iterations']})",
           f"genus {d['genus']}, {d['base_count']} base points",
           f"reducible fibers: {d['reducible_count']}"]
    for c in d["contributions"]:
        part = c["partition"] if isinstance(c["partition"], str) else \
            "|".join("{" + ",".join(s) + "}" for s in c["partition"])
        out.append(f"  #{c['index']} {c['curve']}: {part}")
    if d["ambient"]:
        out.append("ambient: " + (" or ".join(d["ambient"]["candidates"]) or
                                  f"e = {d['ambient']['euler']}"))
    out.append(d["provenance"])
    return "\n".join(out)


def _text_certificate(c: dict) -> str:
    sh = c["shared"]
    ds = c["distinguishing"]
    p, q = c["primed"], c["doubled"]
    out = [f"primed  keep {','.join(p['kept'])}: K = {ds['K_primed']}",
           f"doubled keep {','.join(q['kept'])}: K = {ds['K_doubled']}",
           f"genus {sh['genus']}, {sh['base_count']} base points"]
    if sh["ambient"]:
        out.append("ambient: " + " or ".join(sh["ambient"]["candidates"]))
    out.append(f"verdict: {c['verdict'] or 'no conclusion'}")
    return "\n".join(out)


def _emit_result(args, data: dict, text: str):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------- commands

def cmd_verify(args) -> int:
    p = _load(args.file)
    f = p.factorization
    check = homological_boundary_check(f)
    diags = []
    seen = set()
    for c in f.atlas + f.twists:
        if c.name in seen:
            continue
        seen.add(c.name)
        diags += check_curve_consistency(c)
    errors = [d for d in diags if d.level == "error"]
    ok = check.ok and not errors
    data = {"schema": 1, "kind": "verify", "name": p.name, "ok": ok,
            "boundary_check": check.ok,
            "diagnostics": [{"curve": d.curve, "level": d.level, "message": d.message}
                            for d in diags]}
    if not check.ok:
        data["product"] = check.matrix.to_rows()
    lines = [f"boundary check: {'pass' if check.ok else 'FAIL'}"] + [str(d) for d in diags]
    lines.append("ok" if ok else "verification failed")
    _emit_result(args, data, "\n".join(lines))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_invariants(args) -> int:
    r = pencil_report(_load(args.file))
    _emit_result(args, r, _text_report(r))
    return EXIT_OK


def cmd_double(args) -> int:
    s = partial_double(_load(args.file), _bases(args.keep))
    if args.iterate:
        s = iterate_double(s, args.iterate)
    d = s.to_json()
    _emit_result(args, d, _text_double(d))
    return EXIT_OK


def cmd_recipe(args) -> int:
    c = doubling_recipe(_load(args.file), _bases(args.primed), _bases(args.doubled))
    d = c.to_json()
    _emit_result(args, d, _text_certificate(d))
    return EXIT_OK


def cmd_corpus(args) -> int:
    p = corpus.by_name(args.name, args.h)
    text = emit(p)
    if args.emit:
        _write(args.emit, text)
        r = pencil_report(p)
        _emit_result(args, r, _text_report(r))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_moves(args) -> int:
    p = apply_script(_load(args.file), _read(args.script))
    text = emit(p)
    if args.emit:
        _write(args.emit, text)
        r = pencil_report(p)
        _emit_result(args, r, _text_report(r))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_blowup(args) -> int:
    p = blow_up(_load(args.file), _bases(args.bases))
    sys.stdout.write(emit(p))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    r = fuzz(_load(args.file), args.hurwitz, args.partial, args.seed, args.check_every)
    d = r.to_json()
    inv = d["invariants"]
    _emit_result(args, d, f"{d['hurwitz_moves']} Hurwitz moves, {d['partial_conjugations']} "
                          f"partial conjugations, {d['checks']} full checks (seed {d['seed']}): "
                          f"e = {inv['euler']}, H_1 = {inv['h1']}, "
                          f"{inv['reducible']} reducible; invariants preserved")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="report format (default text)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized commands (default 0)")

    ap = argparse.ArgumentParser(prog="lefschetz", parents=[common],
                                 description="Exact homological computations with positive "
                                             "Dehn-twist factorizations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def command(name, fn, help_, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file:
            sp.add_argument("file", nargs="?", default="-",
                            help="factorization file ('-' or omitted: stdin)")
        sp.set_defaults(func=fn)
        return sp

    command("verify", cmd_verify, "boundary check and curve consistency")
    command("invariants", cmd_invariants, "e, H_1, reducible fibers, manifold candidates")
    sp = command("double", cmd_double, "partial doubling summary")
    sp.add_argument("--keep", required=True, help="comma-separated base points to keep")
    sp.add_argument("--iterate", type=int, default=0, help="further full doublings")
    sp = command("recipe", cmd_recipe, "inequivalence certificate from two partial doubles")
    sp.add_argument("--primed", required=True)
    sp.add_argument("--doubled", required=True)
    sp = command("corpus", cmd_corpus, "emit a built-in factorization", file=False)
    sp.add_argument("name", choices=corpus.CORPUS_NAMES)
    sp.add_argument("--h", type=int, default=1, help="Hamada family parameter")
    sp.add_argument("--emit", metavar="PATH", help="write the file here and print its report")
    sp = command("moves", cmd_moves, "apply a move script and emit the result")
    sp.add_argument("--script", required=True)
    sp.add_argument("--emit", metavar="PATH")
    sp = command("blowup", cmd_blowup, "blow up base points and emit the result")
    sp.add_argument("--bases", required=True)
    sp = command("fuzz", cmd_fuzz, "random invariant-preserving moves")
    sp.add_argument("--hurwitz", type=int, default=1000)
    sp.add_argument("--partial", type=int, default=100)
    sp.add_argument("--check-every", type=int, default=1)
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    args.format = getattr(args, "format", "text")
    args.seed = getattr(args, "seed", 0)
    try:
        return args.func(args)
    except (ParseError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantBreach as e:
        print(f"invariant breach: {e}", file=sys.stderr)
        return EXIT_BREACH
    except (LefschetzError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Exception as e:  # anything else is a bug, reported as a breach
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_BREACH


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
