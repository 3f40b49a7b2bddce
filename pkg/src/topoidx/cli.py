"""``topoidx`` command line.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .closed_forms import closed_form, closed_form_terms, named_terms, render_terms
from .errors import EdgeListParseError, InvalidParameterError, IsolatedVertexError, TopoIdxError
from .factored import FactoredNumber, default_max_digits, to_json
from .families import Benzenoid, Pah
from .generators import generate
from .graph import format_edge_list, read_edge_list
from .indices import NamedIndex, edge_product_power, edge_sum_power, vertex_power
from .verify import (
    DEFAULT_PARAMETERS,
    FORMATTERS,
    ROW_FIELDS,
    Selection,
    SweepConfig,
    evaluate,
    family_grid,
    family_params,
    run_verification,
    selection_label,
    selection_spec,
    sweep_rows,
    value_row,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

NAMED_TOKENS = {idx.value: idx for idx in NamedIndex}
GENERAL_TOKENS = {"gz": edge_sum_power, "gzz": edge_product_power, "wang": vertex_power}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"`` or inclusive ``"LO..HI"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _parse_numbers(text: str | None) -> list[float | int] | None:
    if text is None:
        return None
    out: list[float | int] = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            try:
                out.append(float(tok))
            except ValueError:
                raise UsageError(f"bad parameter value {tok!r}") from None
    return out


def parse_selection(tokens: Sequence[str], a: str | None, s: str | None) -> list[Selection]:
    a_vals, s_vals = _parse_numbers(a), _parse_numbers(s)
    sels: list[Selection] = []
    for tok in tokens:
        for part in tok.split(","):
            part = part.strip().lower()
            if part == "all":
                sels.extend(NamedIndex)
                for name, make in GENERAL_TOKENS.items():
                    vals = s_vals if name == "wang" else a_vals
                    sels.extend(make(v) for v in (vals or DEFAULT_PARAMETERS))
            elif part == "named":
                sels.extend(NamedIndex)
            elif part in NAMED_TOKENS:
                sels.append(NAMED_TOKENS[part])
            elif part in GENERAL_TOKENS:
                flag = "--s" if part == "wang" else "--a"
                vals = s_vals if part == "wang" else a_vals
                if not vals:
                    raise UsageError(f"index {part!r} needs {flag}")
                sels.extend(GENERAL_TOKENS[part](v) for v in vals)
            else:
                raise UsageError(f"unknown index {part!r}")
    seen: set = set()
    unique = []
    for sel in sels:
        if sel not in seen:
            seen.add(sel)
            unique.append(sel)
    return unique


def _family(args) -> Pah | Benzenoid:
    if args.family == "pah":
        return Pah(args.n)
    if args.m is None:
        raise UsageError("benzenoid needs --m")
    return Benzenoid(args.m, args.n)


def _max_digits(args) -> int:
    return args.max_digits if args.max_digits is not None else default_max_digits()


def cmd_generate(args) -> int:
    family = _family(args)
    g = generate(family)
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"{family.label}: {g.vertex_count} vertices, {g.edge_count} edges -> {args.out}")
    else:
        sys.stdout.write(text)
        print(f"{family.label}: {g.vertex_count} vertices, {g.edge_count} edges", file=sys.stderr)
    return EXIT_OK


def _print_rows(rows: list[dict], fmt: str, fields: Sequence[str]) -> None:
    if fmt == "text":
        for r in rows:
            if r.get("error"):
                print(f"{r['index']}: error: {r['error']}")
                continue
            print(f"{r['index']}:")
            for k in ("factors", "log10", "digits", "decimal"):
                if r.get(k, "") != "":
                    print(f"  {k}: {r[k]}")
        return
    sys.stdout.write(FORMATTERS[fmt](rows, fields))


def cmd_compute(args) -> int:
    sels = parse_selection(args.index, args.a, args.s)
    g = read_edge_list(args.graph)
    max_digits = _max_digits(args)
    rows, objs = [], []
    for sel in sels:
        row = {"index": selection_label(sel)}
        obj: dict = {"index": row["index"]}
        try:
            value = evaluate(g, sel)
        except IsolatedVertexError as exc:
            row["error"] = obj["error"] = str(exc)
        else:
            row.update(value_row(value, max_digits))
            obj.update(to_json(value, max_digits) if isinstance(value, FactoredNumber)
                       else {"log10": value})
        rows.append(row)
        objs.append(obj)
    if args.format == "json":
        sys.stdout.write(json.dumps(objs, indent=2) + "\n")
    else:
        _print_rows(rows, args.format, ("index", "factors", "log10", "digits", "decimal", "error"))
    return EXIT_OK


def cmd_closed_form(args) -> int:
    family = _family(args)
    sels = parse_selection(args.index, args.a, args.s)
    max_digits = _max_digits(args)
    rows = []
    for sel in sels:
        spec = selection_spec(sel)
        spec.exact_parameter()
        terms = named_terms(sel, family) if isinstance(sel, NamedIndex) else closed_form_terms(sel, family)
        row = {
            "family": type(family).__name__.lower(),
            "params": family_params(family),
            "index": selection_label(sel),
            "formula": render_terms(terms),
        }
        row.update(value_row(closed_form(spec, family), max_digits))
        rows.append(row)
    if args.format == "text":
        for r in rows:
            print(f"{family.label} {r['index']} = {r['formula']}")
            print(f"  factors: {r['factors']}")
            print(f"  log10: {r['log10']}")
            print(f"  digits: {r['digits']}")
            if r["decimal"]:
                print(f"  decimal: {r['decimal']}")
    else:
        _print_rows(rows, args.format, ROW_FIELDS[:3] + ("formula",) + ROW_FIELDS[3:])
    return EXIT_OK


def _grid(args) -> list:
    if args.family == "benzenoid" and args.m is None:
        raise UsageError("benzenoid needs --m")
    n_range = parse_range(args.n)
    m_range = parse_range(args.m) if args.family == "benzenoid" else None
    return family_grid(args.family, n_range, m_range)


def cmd_verify(args) -> int:
    families = _grid(args)
    sels = parse_selection(args.index, args.a, args.s)
    for sel in sels:
        selection_spec(sel).exact_parameter()
    reports = run_verification(families, sels, jobs=args.jobs)
    bad = [r for r in reports if not r.match]
    if args.format == "json":
        json.dump([r.to_dict() for r in reports], sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        if args.verbose:
            for r in reports:
                status = "ok" if r.match else "MISMATCH"
                print(f"{r.family.label:<12} {selection_label(r.index):<12} {status}")
        for r in bad:
            print(f"MISMATCH {r.family.label} {selection_label(r.index)}")
            print(f"  oracle:      {r.oracle}")
            print(f"  closed form: {r.closed_form}")
        print(f"{len(reports) - len(bad)}/{len(reports)} checks match "
              f"({len(families)} graphs, {len(sels)} indices)")
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        families=tuple(_grid(args)),
        selections=tuple(parse_selection(args.index, args.a, args.s)),
        fmt=args.format,
        max_digits=_max_digits(args),
        source=args.source,
    )
    sys.stdout.write(FORMATTERS[cfg.fmt](sweep_rows(cfg, jobs=args.jobs)))
    return EXIT_OK


def _add_index_args(p: argparse.ArgumentParser, default: str | None = None) -> None:
    p.add_argument("--index", action="append", default=None,
                   help="z1, z2, nk, eliasi, hz1, hz2, gz, gzz, wang, named or all; repeatable")
    p.add_argument("--a", help="exponent(s) for gz/gzz, comma separated")
    p.add_argument("--s", help="exponent(s) for wang, comma separated")
    p.set_defaults(index_default=default)


def _add_family(p: argparse.ArgumentParser, ranged: bool) -> None:
    p.add_argument("family", choices=("pah", "benzenoid"))
    if ranged:
        p.add_argument("--n", required=True, help="N or LO..HI")
        p.add_argument("--m", help="M or LO..HI (benzenoid only)")
    else:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="topoidx", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family member as an edge list")
    _add_family(p, ranged=False)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compute", help="compute indices of an edge-list file")
    p.add_argument("--graph", required=True)
    _add_index_args(p, default="named")
    p.add_argument("--format", choices=("text", "json", "csv", "markdown"), default="text")
    p.add_argument("--max-digits", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("closed-form", help="evaluate a closed-form formula")
    _add_family(p, ranged=False)
    _add_index_args(p, default="named")
    p.add_argument("--format", choices=("text", "json", "csv", "markdown"), default="text")
    p.add_argument("--max-digits", type=int)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("verify", help="check generated graphs against the closed forms")
    _add_family(p, ranged=True)
    _add_index_args(p, default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="tabulate indices over a parameter grid")
    _add_family(p, ranged=True)
    _add_index_args(p, default="named")
    p.add_argument("--format", choices=tuple(FORMATTERS), default="csv")
    p.add_argument("--max-digits", type=int)
    p.add_argument("--source", choices=("graph", "closed-form"), default="graph")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "index", None) is None and hasattr(args, "index_default"):
        args.index = [args.index_default]
    if getattr(args, "max_digits", None) is not None and args.max_digits < 1:
        print("error: --max-digits must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListParseError as exc:
        print(f"error: {args.graph}: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except TopoIdxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # e.g. a malformed TOPOIDX_MAX_DIGITS
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
