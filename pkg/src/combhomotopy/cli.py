"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 inconclusive (a bounded search did
not settle), 3 a check failed.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .core.catalog import DESCRIPTIONS, as_truncated, build_space
from .core.truncated import TruncSymSet, truncated_from_json
from .errors import InputError
from .fundamental import (BudgetExceeded, abelianization, brute_force_classes,
                          edge_path_groupoid, fundamental_category, hom_count, pi0,
                          presentation_count, tietze_reduce, vertex_group)
from .metric import METRICS, StepMetricSpace, eps_sweep, load_points
from .nerves import (FAIL, INCONCLUSIVE, FiniteGroupoid, category_from_json, counit_check,
                     dir_counit_check, span_from_json, vankampen_check)
from .paths import PathSeq, delay_normal_form, strong_normal_form

OK, INPUT_ERROR, UNDECIDED, FAILED = 0, 1, 2, 3


def bundled_names() -> list[str]:
    return sorted(p.name for p in resources.files("combhomotopy.data").iterdir()
                  if p.is_file() and not p.name.startswith("_"))


def resolve(ref: str) -> Path:
    """A file path, or ``bundled:name`` for a data file shipped with the package."""
    if ref.startswith("bundled:"):
        name = ref[len("bundled:"):]
        if name not in bundled_names():
            raise InputError(f"no bundled file {name!r}; have {', '.join(bundled_names())}")
        return Path(str(resources.files("combhomotopy.data") / name))
    return Path(ref)


def read_json(ref: str):
    path = resolve(ref)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None


def load_space(ref: str):
    """Catalog spec (optionally prefixed ``catalog:``) or a truncated-set JSON file."""
    if ref.endswith(".json") or ref.startswith("bundled:"):
        return truncated_from_json(read_json(ref))
    return as_truncated(build_space(ref))


def parse_eps(text: str) -> list[Fraction]:
    """Comma list of rationals; ``a..b`` expands to the integers from a to b."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = (int(x) for x in part.split(".."))
                values.extend(Fraction(k) for k in range(lo, hi + 1))
            else:
                values.append(Fraction(part))
        except ValueError:
            raise InputError(f"bad eps value {part!r}") from None
    if any(a >= b for a, b in zip(values, values[1:])):
        raise InputError("eps list must be strictly increasing")
    return values


def positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


# -- subcommands ----------------------------------------------------------------

def cmd_invariants(args):
    space = load_space(args.space)
    blocks = pi0(space)
    doc = {"space": args.space, "vertices": space.n_vertices, "components": len(blocks)}
    code = OK
    if isinstance(space, TruncSymSet):
        base = blocks[0][0] if args.base is None else args.base
        if not 0 <= base < space.n_vertices:
            raise InputError(f"base {base} outside 0..{space.n_vertices - 1}")
        group = vertex_group(edge_path_groupoid(space), base)
        reduced = tietze_reduce(group, args.budget).presentation
        doc.update(base=base, presentation=group.to_json(), reduced=reduced.to_json(),
                   h1=abelianization(group).to_json(), h1_text=str(abelianization(group)))
    else:
        p = fundamental_category(space)
        table = {}
        for x in range(space.n_vertices):
            for y in range(space.n_vertices):
                try:
                    h = hom_count(p, x, y, args.max_len, args.budget).to_json()
                except BudgetExceeded:
                    h = {"count": None, "exact": False, "saturated": False}
                table[f"{x},{y}"] = h
                if not h["saturated"]:
                    code = UNDECIDED
        doc.update(max_len=args.max_len, homs=table)
    return doc, code


def cmd_adjunction(args):
    c = category_from_json(read_json(args.table))
    if isinstance(c, FiniteGroupoid):
        report = counit_check(c, args.table)
    else:
        report = dir_counit_check(c, args.table, budget=args.budget)
    return report.to_json(), _verdict_code(report.verdict)


def cmd_vankampen(args):
    case, f, g = span_from_json(read_json(args.span))
    report = vankampen_check(f, g, case, args.max_len, args.budget)
    return report.to_json(), _verdict_code(report.verdict)


def cmd_sweep(args):
    cloud = load_points(resolve(args.input), args.input_format, args.threshold, args.metric)
    data = StepMetricSpace(cloud, args.steps) if args.steps else cloud
    report = eps_sweep(data, parse_eps(args.eps), args.base, max_len=args.max_len,
                       budget=args.budget)
    code = OK
    if args.steps and any(r.loops_saturated is False for r in report.rows):
        code = UNDECIDED
    return report, code


def cmd_normalize(args):
    space = load_space(args.space)
    if args.path:
        path = PathSeq.from_json(space, json.loads(args.path))
    else:
        try:
            vertices = [int(v) for v in args.vertices.split(",")]
        except ValueError:
            raise InputError(f"bad vertex list {args.vertices!r}") from None
        path = PathSeq.from_vertices(space, vertices)
    doc = {"path": path.to_json(), "delay_normal_form": delay_normal_form(path).to_json()}
    if isinstance(space, TruncSymSet):
        doc["strong_normal_form"] = strong_normal_form(path).to_json()
    return doc, OK


def cmd_oracle(args):
    space = load_space(args.space)
    n = space.n_vertices
    pairs = [(x, y) for x in range(n) for y in range(n)]
    if args.samples and args.samples < len(pairs):
        pairs = sorted(random.Random(args.seed).sample(pairs, args.samples))
    cases, agree, disagree, skipped = [], 0, 0, 0
    for bound in range(1, args.max_len + 1):
        for x, y in pairs:
            try:
                brute = brute_force_classes(space, x, y, bound, budget=args.budget)
                count, exact = presentation_count(space, x, y, bound, args.budget)
            except BudgetExceeded:
                skipped += 1
                continue
            if not (brute.saturated and exact):
                skipped += 1
                continue
            same = brute.count == count
            agree += same
            disagree += not same
            cases.append({"x": x, "y": y, "max_len": bound, "oracle": brute.count,
                          "presentation": count, "agree": same})
    doc = {"space": args.space, "agree": agree, "disagree": disagree, "skipped": skipped,
           "cases": cases}
    code = FAILED if disagree else (UNDECIDED if not cases else OK)
    return doc, code


def cmd_catalog(args):
    if args.spec is None:
        return {"spaces": dict(sorted(DESCRIPTIONS.items())), "bundled": bundled_names()}, OK
    return as_truncated(build_space(args.spec)).to_json(), OK


def _verdict_code(verdict):
    return {FAIL: FAILED, INCONCLUSIVE: UNDECIDED}.get(verdict, OK)


# -- output -----------------------------------------------------------------------

def _text(doc, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict) and value:
            lines.append(f"{pad}{key}:")
            lines.extend(_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, list) and value and isinstance(value[0], str):
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  - {v}" for v in value)
        else:
            lines.append(f"{pad}{key}: {json.dumps(value)}")
    return lines


def render(result, fmt: str) -> str:
    if hasattr(result, "to_text"):
        return result.to_text() if fmt == "text" else _dumps(result.to_json())
    return "\n".join(_text(result)) + "\n" if fmt == "text" else _dumps(result)


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--max-len", type=positive, default=4, help="word/path length bound")
    common.add_argument("--budget", type=positive, default=200_000, help="search node budget")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled runs")

    parser = argparse.ArgumentParser(prog="combhomotopy",
                                     description="Fundamental groupoids of combinatorial spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="components, vertex group, H1")
    p.add_argument("space", help='catalog spec such as "circle:5", or a truncated-set JSON file')
    p.add_argument("--base", type=int)
    p.set_defaults(run=cmd_invariants)

    p = sub.add_parser("adjunction", parents=[common], help="counit check for a finite category")
    p.add_argument("table", help="category/groupoid JSON file or bundled:name")
    p.set_defaults(run=cmd_adjunction)

    p = sub.add_parser("vankampen", parents=[common], help="pushout versus glued presentations")
    p.add_argument("span", help="span JSON file or bundled:name")
    p.set_defaults(run=cmd_vankampen, max_len=3)

    p = sub.add_parser("sweep", parents=[common], help="invariants of a point set across eps")
    p.add_argument("input", help="CSV or PGM file, or bundled:name")
    p.add_argument("--eps", default="1..4", help='e.g. "1..4" or "1/2,1,2"')
    p.add_argument("--metric", choices=METRICS, default="linf")
    p.add_argument("--threshold", type=int, help="foreground threshold for images")
    p.add_argument("--input-format", choices=("csv", "pgm"))
    p.add_argument("--steps", choices=("coordinatewise", "intensity"),
                   help="also count directed loop classes under this step rule")
    p.add_argument("--base", type=int)
    p.set_defaults(run=cmd_sweep, max_len=6)

    p = sub.add_parser("normalize", parents=[common], help="normal forms of a path")
    p.add_argument("space")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--vertices", help="comma-separated vertex sequence")
    group.add_argument("--path", help='JSON path document {"start", "edges", "base"}')
    p.set_defaults(run=cmd_normalize)

    p = sub.add_parser("oracle", parents=[common], help="brute force versus presentation counts")
    p.add_argument("space")
    p.add_argument("--samples", type=positive, help="check this many random vertex pairs")
    p.set_defaults(run=cmd_oracle, max_len=3)

    p = sub.add_parser("catalog", parents=[common], help="list named spaces or emit one as JSON")
    p.add_argument("spec", nargs="?")
    p.set_defaults(run=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result, code = args.run(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    text = render(result, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
