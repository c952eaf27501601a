"""Command-line interface.

Subcommands: generate, resolve, validate, scaffold, export, serve.
Exit codes: 0 success / validation pass, 1 validation or resolution failure,
2 usage errors (malformed flags, unreadable input, inadmissible orders).
Every subcommand accepts "-" for stdin/stdout; reports print as text on a
terminal and as JSON when redirected or when --json is passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .graphs import EXPORT_FORMATS, export_graph, to_decomposition
from .interchange import InterchangeError, dump_system, load_document
from .orders import InadmissibleOrderError
from .poems import PoemParseError, parse_poem, poem_to_text
from .resolution import ResolvableSearchError, find_resolution
from .scaffold import scaffold as build_scaffold
from .systems import construct_sts
from .validation import PoemReport, validate_poem

USAGE_ERROR = 2
FAILURE = 1


class CliError(Exception):
    """Usage-class failure; the message goes to stderr and the exit code is 2."""


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None


def _write_output(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from None


def _want_json(args: argparse.Namespace) -> bool:
    if getattr(args, "json", False):
        return True
    out = getattr(args, "output", None)
    if out not in (None, "-"):
        return True
    return not sys.stdout.isatty()


def _report_text(report: PoemReport, source: str) -> str:
    lines = [f"{source}: {report.verdict}"]
    for f in report.findings:
        loc = ""
        if f.location:
            inner = ", ".join(f"{k} {v}" for k, v in f.location.items())
            loc = f" [{inner}]"
        lines.append(f"  {f.severity}: {f.rule}: {f.message}{loc}")
    return "\n".join(lines) + "\n"


def _cmd_generate(args: argparse.Namespace) -> int:
    try:
        system = construct_sts(args.order, args.seed)
    except InadmissibleOrderError as exc:
        raise CliError(str(exc)) from None
    _write_output(args.output, dump_system(system))
    return 0


def _cmd_resolve(args: argparse.Namespace) -> int:
    loaded = _load_system_arg(args.input)
    outcome = find_resolution(loaded.system, max_nodes=args.max_nodes)
    if outcome.resolved:
        _write_output(
            args.output,
            dump_system(loaded.system, loaded.points, outcome.resolution),
        )
        return 0
    if _want_json(args):
        doc = {"status": outcome.status, "nodes": outcome.nodes, "reason": outcome.reason}
        _write_output(args.output, json.dumps(doc, indent=2) + "\n")
    else:
        sys.stderr.write(f"{outcome.status}: {outcome.reason}\n")
    return FAILURE


def _load_system_arg(path: str):
    text = _read_input(path)
    try:
        return load_document(text)
    except InterchangeError as exc:
        raise CliError(f"bad system document: {exc}") from None


def _cmd_validate(args: argparse.Namespace) -> int:
    text = _read_input(args.poem)
    try:
        poem = parse_poem(text)
    except PoemParseError as exc:
        raise CliError(f"parse error in {args.poem}: {exc}") from None
    if args.rules:
        flags = tuple(f.strip() for f in args.rules.split(",") if f.strip())
        from .poems import RULE_FLAGS

        for f in flags:
            if f not in RULE_FLAGS:
                raise CliError(
                    f"unknown rule flag {f!r}: expected one of {', '.join(RULE_FLAGS)}"
                )
        merged = poem.rules + tuple(f for f in flags if f not in poem.rules)
        poem = type(poem)(
            variant=poem.variant,
            keywords=poem.keywords,
            stanzas=poem.stanzas,
            rules=merged,
            title=poem.title,
            after=poem.after,
            metadata=poem.metadata,
        )
    report = validate_poem(poem)
    if _want_json(args):
        _write_output(args.output, json.dumps(report.to_json(), indent=2) + "\n")
    else:
        source = poem.title or args.poem
        _write_output(args.output, _report_text(report, source))
    return 0 if report.ok else FAILURE


def _cmd_scaffold(args: argparse.Namespace) -> int:
    words: list[str] = []
    for chunk in args.keywords:
        words.extend(w.strip() for w in chunk.split(",") if w.strip())
    try:
        poem = build_scaffold(words, variant=args.variant, seed=args.seed)
    except (InadmissibleOrderError, ValueError) as exc:
        raise CliError(str(exc)) from None
    except ResolvableSearchError as exc:
        sys.stderr.write(f"{exc}\n")
        return FAILURE
    _write_output(args.output, poem_to_text(poem))
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    loaded = _load_system_arg(args.input)
    try:
        decomp = to_decomposition(loaded.system, loaded.points)
        text = export_graph(decomp, args.format)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _write_output(args.output, text)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_server

    host, _, port_text = args.listen.rpartition(":")
    if not host or not port_text.isdigit():
        raise CliError(f"bad --listen value {args.listen!r}: expected host:port")
    run_server(host=host, port=int(port_text), session_dir=args.session_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerpoem",
        description=(
            "Steiner triple systems, triangle decompositions, and triple poems"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a system and print its JSON")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("resolve", help="partition a system into parallel classes")
    p.add_argument("input", nargs="?", default="-", help="system JSON file or -")
    p.add_argument("--max-nodes", type=int, default=5_000_000)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=_cmd_resolve)

    p = sub.add_parser("validate", help="check a poem against its variant")
    p.add_argument("poem", help=".poem file or -")
    p.add_argument("--rules", default=None, help="extra rule flags, comma-separated")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("scaffold", help="emit a skeleton poem for given keywords")
    p.add_argument("keywords", nargs="+", help="keywords (separate args or comma-separated)")
    p.add_argument("--variant", default="pure")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=_cmd_scaffold)

    p = sub.add_parser("export", help="render a system as dot, tikz, or json")
    p.add_argument("input", nargs="?", default="-", help="system JSON file or -")
    p.add_argument("--format", choices=EXPORT_FORMATS, required=True)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=_cmd_export)

    p = sub.add_parser("serve", help="start the composer HTTP service")
    p.add_argument("--listen", default="127.0.0.1:8075")
    p.add_argument("--session-dir", required=True)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except BrokenPipeError:  # pragma: no cover - pipeline convenience
        return 0


if __name__ == "__main__":
    sys.exit(main())
