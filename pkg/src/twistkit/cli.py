"""Command line front end: ``twistkit <module> <action> ...``.

Exit codes: 0 success, 1 a computation failed (or a claim did not pass),
2 bad usage or unreadable input.  All integers in ``--json`` output are
decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .claims import to_plain, verify_paper
from .cobordism import NotRealizableError, b2plus_certificate, config_from_word, regluing_matrix
from .layers import reduce_torsion_script
from .linalg import ContractError, DimensionError
from .mcg import TwistWord, classify_monodromy, conjugate_word, eval_word, layer_slopes
from .plumbing import CatalogError, PlumbingGraph, analyze, catalog
from .seifert import DomainError, SeifertData, UndecidableError, UnsupportedError, lspace_check, seifert_to_plumbing
from .wordparse import WordSyntaxError, parse_word


class UsageError(Exception):
    pass


def _dump(obj) -> None:
    print(json.dumps(to_plain(obj), indent=2))


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None


def _word(arg: str) -> TwistWord:
    """Shorthand like "(b^3 a)^6", or a path to a JSON factor list."""
    if arg.endswith(".json"):
        try:
            return TwistWord.from_json(_read_json(arg)).normalized()
        except (KeyError, TypeError) as exc:
            raise UsageError(f"{arg}: malformed word JSON ({exc})") from None
    return parse_word(arg)


def _executor(args):
    return ProcessPoolExecutor() if getattr(args, "parallel", False) else None


# --- mcg ------------------------------------------------------------------

def cmd_mcg(args) -> int:
    w = _word(args.word)
    if args.action == "conjugate":
        if not args.by:
            raise UsageError("mcg conjugate needs --by WORD")
        w2 = conjugate_word(w, _word(args.by))
        out = {"word": w2.to_json(), "slopes": layer_slopes(w2), "matrix": eval_word(w2)}
        text = f"{w2}\nslopes: {', '.join(map(str, layer_slopes(w2)))}"
    else:
        M = eval_word(w)
        cls = classify_monodromy(M)
        out = {"word": w.to_json(), "matrix": M, "trace": M.trace, "kind": cls.kind,
               "order": cls.order, "identity": M.is_identity(), "slopes": layer_slopes(w)}
        if args.action == "eval":
            text = f"{M}" + ("  (identity)" if M.is_identity() else "")
        elif args.action == "classify":
            order = "infinite (or > 12)" if cls.order is None else str(cls.order)
            text = f"{cls.kind}, trace {M.trace}, order {order}"
        else:
            text = ", ".join(map(str, layer_slopes(w)))
    _dump(out) if args.json else print(text)
    return 0


# --- plumbing -------------------------------------------------------------

def _graph(args) -> PlumbingGraph:
    if args.catalog:
        name, *params = args.catalog
        return catalog(name, *(int(p) for p in params))
    if not args.file:
        raise UsageError("give a graph file or --catalog NAME [PARAMS]")
    try:
        return PlumbingGraph.from_json(_read_json(args.file))
    except CatalogError as exc:
        raise UsageError(str(exc)) from None


def cmd_plumbing(args) -> int:
    G = _graph(args)
    if args.action == "show":
        _dump(G.to_json()) if args.json else print(json.dumps(G.to_json()))
        return 0
    res = analyze(G)
    if args.json:
        _dump({"det": res["det"], "inertia": res["inertia"], "homology": res["homology"],
               "bad_vertices": res["bad_vertices"]})
    else:
        i = res["inertia"]
        print(f"det          {res['det']}")
        print(f"inertia      (+{i.n_plus}, 0:{i.n_zero}, -{i.n_minus})")
        print(f"H_1(boundary) {res['homology']}")
        print(f"bad vertices {res['bad_vertices']}")
    return 0


# --- seifert --------------------------------------------------------------

def _seifert(path) -> SeifertData:
    try:
        return SeifertData.from_json(_read_json(path))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ContractError):
            raise
        raise UsageError(f"{path}: malformed Seifert JSON ({exc})") from None


def cmd_seifert(args) -> int:
    data = _seifert(args.file)
    if args.action == "plumbing":
        G = seifert_to_plumbing(data)
        _dump(G.to_json()) if args.json else print(json.dumps(G.to_json()))
        return 0
    t_values = None if args.t is None else [args.t]
    ex = _executor(args)
    try:
        rep = lspace_check(data, args.xi0, t_values, args.xi, args.window, ex)
    finally:
        if ex:
            ex.shutdown()
    if args.json:
        _dump({
            "applicable": rep.applicable, "verdict": rep.verdict, "diagnostic": rep.diagnostic,
            "normalized": rep.normalized.to_json(),
            "scans": [{"t": s.params.t, "xi0": s.params.xi0, "xi": list(s.params.xi),
                       "changes": s.changes.changes, "tail_certain": s.changes.tail_certain,
                       "window": list(s.changes.window), "unique_min": s.unique_min, "ok": s.ok}
                      for s in rep.scans],
        })
        return 0
    if not rep.applicable:
        print(rep.diagnostic)
    for s in rep.scans:
        p = s.params
        print(f"t={p.t:+d} xi0={p.xi0} xi={list(p.xi)} window={list(s.changes.window)} "
              f"changes={s.changes.changes} tail_certain={s.changes.tail_certain} "
              f"unique_min={s.unique_min} -> {'ok' if s.ok else 'FAIL'}")
    print(f"verdict: {rep.verdict}")
    return 0


# --- cobordism ------------------------------------------------------------

def cmd_cobordism(args) -> int:
    w = _word(args.word)
    if args.action == "reglue":
        cfg = config_from_word(w)
        M = regluing_matrix(cfg)
        out = {"layers": [{"level": str(l.level), "slope": l.slope.to_json(), "count": l.count}
                          for l in cfg.layers], "regluing": M}
        if args.json:
            _dump(out)
        else:
            for l in cfg.layers:
                print(f"t={l.level}  slope {l.slope}  x{l.count}")
            print(f"regluing {M}")
        return 0
    cert = b2plus_certificate(w, relaxed=args.relaxed_pattern)
    if args.json:
        _dump(cert.to_json())
    elif not cert.found:
        print("no gamma pattern found")
    else:
        print(f"found ({cert.normalization}), positions {list(cert.positions)}, rotation {cert.rotation}")
        print(f"x = {cert.roles['x']}, y = {cert.roles['y']}")
        print(f"slides {cert.script}")
        print(f"block det {cert.det}, inertia {cert.inertia.astuple()}, matches Plum: {cert.matches_plum}")
    return 0


# --- layers ---------------------------------------------------------------

def cmd_layers(args) -> int:
    trace = reduce_torsion_script(args.n)
    if args.json:
        print(json.dumps(trace.to_json(), indent=2))
        return 0
    print(f"{'step':>4}  {'surgery':<10} {'torus':<6} {'outer (N1..)':<14} gluings / note")
    for s in trace.steps:
        gl = " ".join("I" if g.is_identity() else str(g).replace(" ", "") for g in s.gluings)
        outer = f"({s.outer[0]}, {s.outer[1]})"
        extra = f"{s.region}  {s.note}" if s.region else gl
        print(f"{s.step:>4}  {s.surgery:<10} {s.interface:<6} {outer:<14} {extra}")
    print(f"regluing {trace.regluing}")
    print(f"final    {trace.final}")
    print("basic-slice signs are not tracked; only slopes are")
    print(json.dumps(trace.to_json()))
    return 0


# --- verify-paper ---------------------------------------------------------

def cmd_verify(args) -> int:
    ex = _executor(args)
    try:
        results = verify_paper(ex)
    finally:
        if ex:
            ex.shutdown()
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            print(f"{r.status.upper():4}  {r.claim_id:<32} [{r.provenance}] {r.description}")
        print(f"{sum(r.passed for r in results)}/{len(results)} claims pass")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--parallel", action="store_true", help="run independent pieces in worker processes")

    p = argparse.ArgumentParser(prog="twistkit", description="Exact torus-bundle and plumbing calculator.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mcg", parents=[common], help="Dehn twist words in SL(2, Z)")
    m.add_argument("action", choices=["eval", "classify", "slopes", "conjugate"])
    m.add_argument("word", help='shorthand such as "(a^3 b)^3", or a .json factor list')
    m.add_argument("--by", help="conjugating word for `conjugate`")
    m.set_defaults(func=cmd_mcg)

    pl = sub.add_parser("plumbing", parents=[common], help="plumbing graph invariants")
    pl.add_argument("action", choices=["analyze", "show"])
    pl.add_argument("file", nargs="?")
    pl.add_argument("--catalog", nargs="+", metavar="NAME", help="catalog graph and integer parameters")
    pl.set_defaults(func=cmd_plumbing)

    s = sub.add_parser("seifert", parents=[common], help="Seifert criterion scans")
    s.add_argument("action", choices=["lspace-check", "plumbing"])
    s.add_argument("file")
    s.add_argument("--t", type=int)
    s.add_argument("--xi", type=int, nargs="+")
    s.add_argument("--xi0", type=int)
    s.add_argument("--window", type=int, help="scan [-N, N] instead of the certain window")
    s.set_defaults(func=cmd_seifert)

    c = sub.add_parser("cobordism", parents=[common], help="surgery regluing and the b2+ certificate")
    c.add_argument("action", choices=["certify", "reglue"])
    c.add_argument("word")
    c.add_argument("--relaxed-pattern", action="store_true",
                   help="also accept the ten-handle subsequence pattern")
    c.set_defaults(func=cmd_cobordism)

    la = sub.add_parser("layers", parents=[common], help="toric layer slope trace")
    la.add_argument("action", choices=["trace"])
    la.add_argument("--n", type=int, default=1)
    la.set_defaults(func=cmd_layers)

    v = sub.add_parser("verify-paper", parents=[common], help="recompute every recorded claim")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) < 1:
        parser.error("--n must be a positive integer")
    if getattr(args, "window", None) is not None and args.window < 1:
        parser.error("--window must be positive")
    try:
        return args.func(args)
    except (UsageError, WordSyntaxError, CatalogError) as exc:
        print(f"twistkit: error: {exc}", file=sys.stderr)
        return 2
    except (ContractError, DimensionError, DomainError, UndecidableError, UnsupportedError,
            NotRealizableError, AssertionError, ValueError) as exc:
        print(f"twistkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
