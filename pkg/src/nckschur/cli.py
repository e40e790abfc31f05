"""
Command-line front end.

Output is deterministic: terms are sorted, nothing depends on the clock.
Malformed arguments exit with status 2.  Arguments that parse but describe
an invalid mathematical object exit with status 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .affine import AffinePermutation, from_word, is_reduced, reduced_word
from .kschur import (multiply_kschur, nckschur_rectangle,
                     nckschur_rectangle_column, nckschur_rectangle_strip)
from .nilcoxeter import NilCoxeterElement, format_word, u, zero
from .shapes import (bounded_to_core, core_to_bounded, core_to_grassmannian,
                     grassmannian_to_core, normalize)
from .strong import D_J, emit_graph, format_edges, to_dot

EXIT_USAGE = 2
EXIT_DOMAIN = 3


class DomainError(ValueError):
    pass


def int_list(text: str) -> tuple[int, ...]:
    """Parse ``"3,1,2"``; the empty string is the empty list."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _element_json(e: NilCoxeterElement) -> dict:
    data = e.to_dict()
    for term, (w, _) in zip(data["terms"], sorted(e.items(), key=lambda t: t[0].window)):
        term["word"] = reduced_word(w)
    return data


def _render_element(e: NilCoxeterElement, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_element_json(e), sort_keys=True)
    return str(e)


def cmd_down_op(args) -> str:
    k = args.k
    word = [letter % (k + 1) for letter in args.word]
    if is_reduced(k, word):
        element = u(from_word(k, word))
    else:
        print(f"warning: {format_word(word, k)} is not reduced; u of it is 0",
              file=sys.stderr)
        element = zero(k)
    if not 0 <= args.m <= k:
        raise DomainError(f"marking {args.m} out of range for k={k}")
    return _render_element(D_J(element, args.comp, args.m), args.format)


def cmd_expand(args) -> str:
    k, c, i = args.k, args.c, args.i
    if args.family == "rectangle":
        if not 0 <= c <= k:
            raise DomainError(f"c={c} out of range for k={k}")
        e = nckschur_rectangle(k, c)
    elif args.family == "strip":
        e = nckschur_rectangle_strip(k, c, i)
    else:
        e = nckschur_rectangle_column(k, c, i)
    if args.count:
        return str(len(e))
    return _render_element(e, args.format)


def cmd_multiply(args) -> str:
    result = multiply_kschur(args.k, normalize(args.left), normalize(args.right),
                             general=args.general)
    if args.format == "json":
        return json.dumps(result.to_dict(), sort_keys=True)
    return str(result)


def cmd_graph(args) -> str:
    if args.max_length < 0:
        raise DomainError("max-length must be nonnegative")
    if not 0 <= args.m <= args.k:
        raise DomainError(f"marking {args.m} out of range for k={args.k}")
    vertices, edges = emit_graph(args.k, args.max_length, args.m)
    if args.format == "edges":
        return format_edges(edges).rstrip("\n")
    if args.format == "json":
        return json.dumps({
            "vertices": [w.to_dict() for w in vertices],
            "edges": [{"source": e.source.to_dict(), "target": e.target.to_dict(),
                       "label": e.label} for e in edges],
        }, sort_keys=True)
    return to_dot(vertices, edges).rstrip("\n")


def _grassmannian_from(args) -> AffinePermutation:
    k = args.k
    if args.bounded is not None:
        return core_to_grassmannian(k, bounded_to_core(k, normalize(args.bounded)))
    if args.core is not None:
        return core_to_grassmannian(k, normalize(args.core))
    if args.window is not None:
        w = AffinePermutation(k, args.window)
    else:
        w = from_word(k, args.word)
        if w.length != len(args.word):
            raise DomainError(f"{list(args.word)} is not a reduced word")
    if not w.is_grassmannian():
        raise DomainError(f"{w} is not 0-Grassmannian")
    return w


def cmd_convert(args) -> str:
    w = _grassmannian_from(args)
    core = grassmannian_to_core(w)
    data = {
        "k": w.k,
        "bounded": list(core_to_bounded(w.k, core)),
        "core": list(core),
        "window": list(w.window),
        "word": reduced_word(w),
    }
    if args.format == "json":
        return json.dumps(data, sort_keys=True)
    show = lambda xs: ",".join(map(str, xs))
    return "\n".join([f"bounded: {show(data['bounded'])}", f"core: {show(data['core'])}",
                      f"window: {show(data['window'])}",
                      f"word: {format_word(data['word'], w.k)}"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nckschur",
        description="Non-commutative k-Schur functions in the affine nilCoxeter algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--format", choices=formats, default=formats[0])

    p = sub.add_parser("down-op", help="apply D_J to a basis element u_w")
    common(p)
    p.add_argument("--word", type=int_list, required=True, help="e.g. 1,2,1,0")
    p.add_argument("--comp", type=int_list, required=True, help="composition J, e.g. 2,1")
    p.add_argument("--m", type=int, default=0, help="marking")
    p.set_defaults(func=cmd_down_op)

    p = sub.add_parser("expand", help="closed-form expansion of a rectangle family")
    common(p)
    p.add_argument("--family", choices=("rectangle", "strip", "column"), required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--count", action="store_true", help="print only the number of terms")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("multiply", help="product of two k-Schur functions")
    common(p)
    p.add_argument("--left", type=int_list, required=True)
    p.add_argument("--right", type=int_list, required=True)
    p.add_argument("--general", action="store_true",
                   help="expand the left factor through the h basis")
    p.set_defaults(func=cmd_multiply)

    p = sub.add_parser("graph", help="marked strong order graph")
    common(p, formats=("dot", "edges", "json"))
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("convert", help="bounded partition, core, window and word")
    common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bounded", type=int_list)
    group.add_argument("--core", type=int_list)
    group.add_argument("--window", type=int_list)
    group.add_argument("--word", type=int_list)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.k < 1:
        parser.error("--k must be at least 1")
    try:
        out = args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
