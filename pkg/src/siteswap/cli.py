"""Command-line interface.

Exit codes: 0 success, 1 domain-invalid input (an invalid pattern or an
illegal perm/bvec pair), 2 usage or parse error, 3 node budget exceeded,
4 closed form and oracle disagree.
"""

import argparse
import csv
import io
import json
import sys

from . import closed_forms, notation
from .closed_forms import Branch, CountQuery, Method
from .errors import (
    BudgetExceededError,
    CrossCheckError,
    InvalidPatternError,
    NoClosedFormError,
    ParseError,
)
from .exact_math import eulerian_row
from .oracle import ALL, EnumerationSpec, count_patterns_oracle, enumerate_patterns
from .pattern import construct, decompose, validate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4


class UsageError(Exception):
    pass


def _out(text=""):
    sys.stdout.write(text + "\n")


def _err(text):
    sys.stderr.write(f"error: {text}\n")


def _dump_json(doc):
    _out(json.dumps(doc, ensure_ascii=False))


def _int_list(text, what):
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None
    return values


def _fmt_tuple(values):
    return "(" + ",".join(str(v) for v in values) + ")"


def _budget(args):
    return getattr(args, "budget", None)


def _balls(args):
    return ALL if args.all_balls else args.balls


# validate


def cmd_validate(args):
    seq = notation.parse(args.pattern)
    report = validate(seq)
    if args.format == "json":
        _dump_json(
            {
                "pattern": notation.render_auto(seq),
                "heights": list(seq.heights),
                "valid": report.valid,
                "balls": report.balls,
                "collisions": [list(p) for p in report.collisions],
                "remainder": report.remainder,
            }
        )
    else:
        _out(f"{notation.render_auto(seq)}: {report.describe()}")
    return EXIT_OK if report.valid else EXIT_INVALID


# count


def cmd_count(args):
    query = CountQuery(args.period, _balls(args), args.ceiling, Method(args.method))
    result = closed_forms.count(query, budget=_budget(args), workers=args.workers)
    if args.format == "json":
        _dump_json(
            {
                "query": query.as_dict(),
                "count": str(result.count),
                "branch": result.branch.value,
                "cross_checked": result.cross_checked,
            }
        )
    else:
        _out(f"count: {result.count}")
        _out(f"branch: {result.branch.value}")
        _out(f"cross_checked: {str(result.cross_checked).lower()}")
    return EXIT_OK


# enumerate


def cmd_enumerate(args):
    balls = _balls(args)
    if balls == ALL and args.ceiling is None:
        raise UsageError("--all-balls requires --ceiling")
    spec = EnumerationSpec(args.period, balls, args.ceiling)
    shown = []
    truncated = False
    for pattern in enumerate_patterns(spec, budget=_budget(args), workers=args.workers):
        if args.limit is not None and len(shown) >= args.limit:
            truncated = True
            break
        shown.append(pattern)
    if truncated:
        total = count_patterns_oracle(spec, budget=_budget(args), workers=args.workers)
    else:
        total = len(shown)

    if args.format == "json":
        _dump_json(
            {
                "patterns": [notation.render_auto(p) for p in shown],
                "truncated": truncated,
                "total": str(total),
            }
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pattern", "balls"])
        for p in shown:
            writer.writerow([notation.render_auto(p), p.balls])
        sys.stdout.write(buf.getvalue())
        if truncated:
            sys.stderr.write(f"truncated: showing {len(shown)} of {total} patterns\n")
    else:
        for p in shown:
            _out(notation.render_auto(p))
        if truncated:
            _out(f"... truncated: showing {len(shown)} of {total} patterns")
    return EXIT_OK


# decompose / construct


def cmd_decompose(args):
    seq = notation.parse(args.pattern)
    d = decompose(seq)
    if args.format == "json":
        _dump_json(
            {
                "pattern": notation.render_auto(seq),
                "perm": list(d.perm),
                "b_vec": list(d.b_vec),
                "descents": d.descents,
                "balls": d.balls,
            }
        )
    else:
        _out(f"P={_fmt_tuple(d.perm)}, B={_fmt_tuple(d.b_vec)}, k={d.descents}")
    return EXIT_OK


def cmd_construct(args):
    perm = _int_list(args.perm, "--perm")
    b_vec = _int_list(args.bvec, "--bvec")
    pattern = construct(perm, b_vec)
    text = notation.render_auto(pattern)
    if args.format == "json":
        _dump_json({"pattern": text, "heights": list(pattern.heights), "balls": pattern.balls})
    else:
        _out(f"{text}, balls {pattern.balls}")
    return EXIT_OK


# table


def _eulerian_table(args):
    rows = []
    for n in range(1, args.max_n + 1):
        for k, value in enumerate(eulerian_row(n)):
            rows.append({"n": n, "k": k, "value": value})
    return ["n", "k", "value"], rows


def _rook_table(args):
    rows = []
    for n in range(1, args.max_n + 1):
        for s in range(min(3, n - 1) + 1):
            branch, value = closed_forms._small_ceiling_branch(n, n - s - 1, _budget(args))
            rows.append({"s": s, "n": n, "value": value, "branch": branch.value})
    return ["s", "n", "value", "branch"], rows


def _counts_table(args):
    rows = []
    if args.ceiling_form == "an-1":
        max_b = args.max_b if args.max_b is not None else args.max_n
        for n in range(1, args.max_n + 1):
            for a in range(1, args.max_a + 1):
                for b in range(max_b + 1):
                    value = closed_forms.count_ceiling_multiple(n, b, a)
                    rows.append(
                        {"n": n, "a": a, "ceiling": a * n - 1, "balls": b, "count": value,
                         "branch": Branch.THEOREM1_SUM.value}
                    )
        return ["n", "a", "ceiling", "balls", "count", "branch"], rows
    for n in range(1, args.max_n + 1):
        for c in range(n):
            for b in range(c + 1):
                result = closed_forms.count(CountQuery(n, b, c), budget=_budget(args))
                rows.append({"n": n, "ceiling": c, "balls": b, "count": result.count,
                             "branch": result.branch.value})
            result = closed_forms.count(CountQuery(n, ALL, c), budget=_budget(args))
            rows.append({"n": n, "ceiling": c, "balls": "*", "count": result.count,
                         "branch": result.branch.value})
    return ["n", "ceiling", "balls", "count", "branch"], rows


_TABLES = {"eulerian": _eulerian_table, "rook": _rook_table, "counts": _counts_table}
_VALUE_KEYS = {"value", "count"}


def cmd_table(args):
    if args.max_n < 1:
        raise UsageError("--max-n must be >= 1")
    columns, rows = _TABLES[args.kind](args)
    if args.format == "json":
        doc_rows = [
            {key: (str(v) if key in _VALUE_KEYS else v) for key, v in row.items()} for row in rows
        ]
        _dump_json({"kind": args.kind, "columns": columns, "rows": doc_rows})
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    elif args.kind == "eulerian":
        for n in range(1, args.max_n + 1):
            _out(" ".join(str(r["value"]) for r in rows if r["n"] == n))
    else:
        cells = [[str(row[c]) for c in columns] for row in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
        _out("  ".join(c.rjust(w) for c, w in zip(columns, widths)))
        for r in cells:
            _out("  ".join(v.rjust(w) for v, w in zip(r, widths)))
    return EXIT_OK


# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _err(message)
        sys.exit(EXIT_USAGE)


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _add_format(p, choices=("text", "json"), default="text"):
    p.add_argument("--format", choices=choices, default=default)


def _add_search_opts(p):
    p.add_argument("--budget", type=_positive, default=None,
                   help="node budget for brute-force search (overrides SITESWAP_NODE_BUDGET)")
    p.add_argument("--workers", type=_positive, default=1,
                   help="threads for the enumeration oracle")


def _add_balls(p):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--balls", type=_nonneg)
    group.add_argument("--all-balls", action="store_true")


def build_parser():
    parser = _Parser(prog="siteswap", description="Validate, build, enumerate and count siteswaps.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a pattern")
    p.add_argument("pattern")
    _add_format(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("count", help="count patterns")
    p.add_argument("--period", type=_positive, required=True)
    _add_balls(p)
    p.add_argument("--ceiling", type=_nonneg, default=None)
    p.add_argument("--method", choices=["auto", "closed", "closed-form", "oracle", "both"],
                   default="auto")
    _add_search_opts(p)
    _add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list patterns in lexicographic order")
    p.add_argument("--period", type=_positive, required=True)
    _add_balls(p)
    p.add_argument("--ceiling", type=_nonneg, default=None)
    p.add_argument("--limit", type=_nonneg, default=None)
    _add_search_opts(p)
    _add_format(p, choices=("text", "json", "csv"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("decompose", help="split a pattern into P and B")
    p.add_argument("pattern")
    _add_format(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("construct", help="build a pattern from P and B")
    p.add_argument("--perm", required=True)
    p.add_argument("--bvec", required=True)
    _add_format(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("table", help="print tables of Eulerian, rook or pattern counts")
    p.add_argument("--kind", choices=sorted(_TABLES), required=True)
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--ceiling-form", choices=["an-1", "small"], default="an-1")
    p.add_argument("--max-a", type=_positive, default=3)
    p.add_argument("--max-b", type=_nonneg, default=None)
    p.add_argument("--budget", type=_positive, default=None)
    _add_format(p, choices=("text", "json", "csv"))
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "method", None) == "closed":
        args.method = "closed-form"
    try:
        code = args.func(args)
    except ParseError as exc:
        _err(str(exc))
        code = EXIT_USAGE
    except InvalidPatternError as exc:
        _err(str(exc))
        code = EXIT_INVALID
    except BudgetExceededError as exc:
        _err(str(exc))
        code = EXIT_BUDGET
    except CrossCheckError as exc:
        _err(str(exc))
        code = EXIT_MISMATCH
    except (UsageError, NoClosedFormError, ValueError) as exc:
        _err(str(exc))
        code = EXIT_USAGE
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
