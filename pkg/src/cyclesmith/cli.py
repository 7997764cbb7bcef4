"""Command line entry point.

Exit codes: 0 success or valid, 1 failed verification, 2 usage error,
3 infeasible parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from cyclesmith import coding, juggling, posetcycle, words
from cyclesmith.cache import cache_dir, cached_posets
from cyclesmith.coding import CodeError, CyclicCode, format_symbols, parse_symbols
from cyclesmith.eulergraph import best_count, format_matrix, laplacian
from cyclesmith.poset import NLPoset, PosetError, antichains, seed_enumeration, to_dot, to_json
from cyclesmith.verify import WindowScheme, make_decoder, verify_cycle

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _out_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit JSON (same as --format json)")
    p.add_argument("--format", choices=["text", "json", "dot"], default=None)
    p.add_argument("--output", "-o", help="write output to this file instead of stdout")
    p.add_argument("--cache-dir", help="enumeration cache directory (default: $CYCLESMITH_CACHE)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _out_options()
    parser = _Parser(prog="cyclesmith", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    posets = top.add_parser("posets", help="naturally labeled posets and their universal cycles")
    ps = posets.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, helptext in [
        ("enumerate", "list all NL posets of a size by code"),
        ("ucycle", "generate a universal cycle"),
        ("count-circuits", "count universal cycles (Eulerian circuits) exactly"),
        ("graph", "export the arc digraph"),
    ]:
        sp = ps.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--size", "-k", type=int, required=True)
    sp = ps.add_parser("encode", parents=[common], help="code of a poset given by its covers")
    sp.add_argument("--size", "-k", type=int, required=True)
    sp.add_argument("covers", nargs="*", help="cover pairs like 1-2 2-5")
    sp = ps.add_parser("decode", parents=[common], help="poset named by a code")
    sp.add_argument("code")
    sp.add_argument("--mode", choices=[coding.STRICT, coding.NORMALIZE], default=coding.STRICT)
    sp = ps.add_parser("verify", parents=[common], help="check a cyclic code 'k=<k>;s1,s2,...'")
    sp.add_argument("code")
    sp.add_argument("--size", "-k", type=int, help="window size when the code has no k= prefix")

    wp = top.add_parser("words", help="overlap cycles of weight-k words")
    ws = wp.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("ocycle", "reduce", "verify"):
        sp = ws.add_parser(name, parents=[common])
        sp.add_argument("--length", "-n", type=int, required=True)
        sp.add_argument("--weight", "-k", type=int, required=True)
        sp.add_argument("--alphabet", "-q", type=int, required=True, help="largest letter q")
        sp.add_argument("--overlap", "-s", type=int, required=True)
        if name == "reduce":
            sp.add_argument("--vertex", required=True)
            sp.add_argument("--order", choices=[words.Q_FIRST, words.REMAINDER_FIRST], default=words.Q_FIRST)
        if name == "verify":
            sp.add_argument("symbols")

    jp = top.add_parser("juggle", help="site-swap juggling sequences")
    js = jp.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("validate", "permutation"):
        sp = js.add_parser(name, parents=[common])
        sp.add_argument("sequence")
    sp = js.add_parser("ocycle", parents=[common])
    sp.add_argument("--period", "-n", type=int, required=True)
    sp.add_argument("--balls", "-b", type=int, required=True)
    sp = js.add_parser("reduce", parents=[common])
    sp.add_argument("sequence")
    sp.add_argument("--period", "-n", type=int)

    vp = top.add_parser("verify", parents=[common], help="check any cyclic string against a window scheme")
    vp.add_argument("--window", "-w", type=int, required=True)
    vp.add_argument("--stride", "-d", type=int, default=1)
    vp.add_argument("--decoder", required=True,
                    choices=["literal-word", "k-subset-of-n", "characteristic-vector", "permutation", "poset-code"])
    vp.add_argument("--params", default="", help="decoder parameters, e.g. k=2,n=5 or low=2,high=3")
    vp.add_argument("symbols")
    return parser


def _fmt(args) -> str:
    if args.json:
        return "json"
    return args.format or "text"


def _parse_params(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    last = None
    for piece in [p for p in text.split(",") if p]:
        if "=" in piece:
            key, value = piece.split("=", 1)
            out[key.strip()] = value.strip()
            last = key.strip()
        elif last is not None:
            out[last] += "," + piece.strip()
        else:
            raise UsageError(f"bad decoder parameter {piece!r}")
    return out


def _parse_covers(items: Sequence[str]) -> list[tuple[int, int]]:
    pairs = []
    for item in items:
        for chunk in item.split():
            a, sep, b = chunk.replace(":", "-").partition("-")
            if not sep:
                raise UsageError(f"cover pairs look like 1-2, got {chunk!r}")
            pairs.append((int(a), int(b)))
    return pairs


def _seq(text: str) -> tuple[int, ...]:
    try:
        return parse_symbols(text)
    except (CodeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _warm_cache(args, *sizes: int) -> None:
    root = cache_dir(args.cache_dir)
    if root is None:
        return
    for k in sizes:
        if k >= 2:
            seed_enumeration(k, cached_posets(k, root))


def _run_posets(args, fmt: str) -> tuple[int, str]:
    cmd = args.command
    if cmd in ("ucycle", "count-circuits", "graph", "verify") and args.size is not None:
        _warm_cache(args, args.size - 1, args.size)
    if cmd == "enumerate":
        if args.size < 0:
            raise words.InfeasibleParams("size must be nonnegative")
        posets = cached_posets(args.size, cache_dir(args.cache_dir))
        labels = [posetcycle.poset_label(P) for P in posets]
        if fmt == "json":
            return EXIT_OK, _dumps({"k": args.size, "count": len(posets), "codes": labels,
                                    "posets": [to_json(P) for P in posets]})
        if fmt == "dot":
            return EXIT_OK, "".join(to_dot(P, name=f"p{i}") for i, P in enumerate(posets))
        return EXIT_OK, "\n".join(labels) + "\n"
    if cmd in ("ucycle", "count-circuits", "graph") and args.size < 2:
        raise words.InfeasibleParams("size must be at least 2")
    if cmd == "ucycle":
        code = posetcycle.generate_ucycle(args.size).canonical()
        rep = posetcycle.verify_ucycle(code)
        if fmt == "json":
            return EXIT_OK, _dumps({"k": code.k, "cycle": list(code.symbols), "valid": rep.valid,
                                    "count": rep.window_count})
        return EXIT_OK, format_symbols(code.symbols) + "\n"
    if cmd == "count-circuits":
        res = best_count(posetcycle.build_arc_digraph(args.size).graph)
        if fmt == "json":
            return EXIT_OK, _dumps({"k": args.size, "arborescences": res.arborescences, "circuits": res.circuits})
        return EXIT_OK, f"{res.circuits}\n"
    if cmd == "graph":
        arc = posetcycle.build_arc_digraph(args.size)
        if fmt == "dot":
            return EXIT_OK, arc.to_dot()
        if fmt == "json":
            g = arc.graph
            return EXIT_OK, _dumps({
                "k": args.size,
                "vertices": [posetcycle.poset_label(P) for P in arc.vertices],
                "edges": [[e.tail, e.head, posetcycle.poset_label(e.key)] for e in g.edges],
                "laplacian": laplacian(g),
            })
        return EXIT_OK, format_matrix(laplacian(arc.graph)) + "\n"
    if cmd == "encode":
        P = NLPoset.from_covers(args.size, _parse_covers(args.covers))
        code = coding.encode_poset(P)
        if fmt == "json":
            return EXIT_OK, _dumps({"size": P.size, "code": list(code)})
        return EXIT_OK, format_symbols(code) + "\n"
    if cmd == "decode":
        P = coding.decode_code(_seq(args.code), args.mode)
        if fmt == "json":
            data = to_json(P)
            data["antichains"] = len(antichains(P))
            return EXIT_OK, _dumps(data)
        if fmt == "dot":
            return EXIT_OK, to_dot(P)
        return EXIT_OK, " ".join(f"{i}<{j}" for i, j in sorted(to_json(P)["covers"])) + "\n"
    if cmd == "verify":
        text = args.code.strip()
        if text.startswith("k="):
            code = CyclicCode.from_text(text)
        elif args.size is None:
            raise UsageError("give the code as 'k=<k>;...' or pass --size")
        else:
            code = CyclicCode(args.size, _seq(text))
        rep = posetcycle.verify_ucycle(code)
        status = EXIT_OK if rep.valid else EXIT_INVALID
        if fmt == "json":
            return status, _dumps(rep.to_json(code))
        return status, ("valid" if rep.valid else "invalid") + f" windows={rep.window_count} coverage={rep.coverage}\n"
    raise UsageError(f"unknown posets command {cmd}")


def _word_params(args) -> words.WordCycleParams:
    return words.WordCycleParams(n=args.length, k=args.weight, q=args.alphabet, s=args.overlap)


def _run_words(args, fmt: str) -> tuple[int, str]:
    params = _word_params(args)
    if args.command == "ocycle":
        cyc = words.generate_ocycle(params)
        rep = words.verify_ocycle(cyc, params)
        if fmt == "json":
            return EXIT_OK, _dumps({"n": params.n, "k": params.k, "q": params.q, "s": params.s,
                                    "cycle": list(cyc), "length": len(cyc),
                                    "count": rep.window_count, "valid": rep.valid})
        return EXIT_OK, format_symbols(cyc) + "\n"
    if args.command == "reduce":
        v = _seq(args.vertex)
        steps = words.reduction_trace(v, params, args.order)
        final = steps[-1].next_vertex if steps else v
        if fmt == "json":
            return EXIT_OK, _dumps({
                "steps": [{"vertex": list(st.vertex), "word": list(st.word), "rearranged": list(st.rearranged)}
                          for st in steps],
                "sink": list(final),
            })
        lines = [f"{format_symbols(st.vertex)} -> {format_symbols(st.word)} -> {format_symbols(st.rearranged)}"
                 for st in steps]
        lines.append(format_symbols(final))
        return EXIT_OK, "\n".join(lines) + "\n"
    rep = words.verify_ocycle(_seq(args.symbols), params)
    return _report(rep, fmt)


def _report(rep, fmt: str) -> tuple[int, str]:
    status = EXIT_OK if rep.valid else EXIT_INVALID
    if fmt == "json":
        return status, _dumps(rep.to_json())
    text = "valid" if rep.valid else "invalid"
    text += f" windows={rep.window_count}"
    if rep.coverage_complete is not None:
        text += f" coverage={rep.coverage_complete}"
    for idx, msg in rep.invalid_windows:
        text += f"\n  window {idx}: {msg}"
    for a, b in rep.duplicates:
        text += f"\n  windows {a} and {b} decode to the same object"
    return status, text + "\n"


def _run_juggle(args, fmt: str) -> tuple[int, str]:
    cmd = args.command
    if cmd == "validate":
        seq = _seq(args.sequence)
        ok = juggling.validate(seq)
        if fmt == "json":
            data = {"sequence": list(seq), "valid": ok}
            if ok:
                data["balls"] = juggling.ball_count(seq)
            return (EXIT_OK if ok else EXIT_INVALID), _dumps(data)
        if ok:
            return EXIT_OK, f"valid balls={juggling.ball_count(seq)}\n"
        return EXIT_INVALID, "invalid\n"
    if cmd == "permutation":
        seq = _seq(args.sequence)
        if not juggling.validate(seq):
            return EXIT_INVALID, ("{}" if fmt == "json" else "invalid") + "\n"
        perm = juggling.underlying_permutation(seq)
        if fmt == "json":
            return EXIT_OK, _dumps({"sequence": list(seq), "permutation": list(perm)})
        return EXIT_OK, format_symbols(perm) + "\n"
    if cmd == "ocycle":
        params = juggling.JuggleParams(args.period, args.balls)
        cyc = juggling.generate_ocycle(params)
        rep = juggling.verify_ocycle(cyc, params)
        if fmt == "json":
            return EXIT_OK, _dumps({"n": params.n, "b": params.b, "s": params.s, "cycle": list(cyc),
                                    "length": len(cyc), "count": rep.window_count, "valid": rep.valid})
        return EXIT_OK, format_symbols(cyc) + "\n"
    if cmd == "reduce":
        seq = _seq(args.sequence)
        if args.period is not None and args.period != len(seq):
            raise words.InfeasibleParams(f"sequence has length {len(seq)}, not period {args.period}")
        if not juggling.validate(seq):
            return EXIT_INVALID, "invalid\n"
        steps = juggling.reduce_to_zero(seq)
        if fmt == "json":
            return EXIT_OK, _dumps({"steps": [list(s) for s in steps]})
        return EXIT_OK, "\n".join(format_symbols(s) for s in steps) + "\n"
    raise UsageError(f"unknown juggle command {cmd}")


def _run_verify(args, fmt: str) -> tuple[int, str]:
    try:
        decoder = make_decoder(args.decoder, args.window, _parse_params(args.params))
        scheme = WindowScheme(args.window, args.stride, decoder)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad decoder parameters: {exc}") from exc
    return _report(verify_cycle(_seq(args.symbols), scheme), fmt)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv or "--format=json" in argv
    try:
        args = build_parser().parse_args(argv)
        fmt = _fmt(args)
        runner = {"posets": _run_posets, "words": _run_words, "juggle": _run_juggle, "verify": _run_verify}
        status, text = runner[args.group](args, fmt)
        if fmt == "json" and not text.endswith("\n"):
            text += "\n"
    except UsageError as exc:
        return _fail(EXIT_USAGE, str(exc), want_json)
    except (words.InfeasibleParams, PosetError, CodeError, juggling.InvalidSequence) as exc:
        return _fail(EXIT_INFEASIBLE, str(exc), want_json)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


def _fail(code: int, message: str, as_json: bool) -> int:
    if as_json:
        sys.stderr.write(json.dumps({"error": message, "exit_code": code}) + "\n")
    else:
        sys.stderr.write(f"cyclesmith: error: {message}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
