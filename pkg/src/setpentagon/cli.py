"""Command-line interface.

Exit status: 0 when the command succeeds and every verdict is true, 1 when
a mathematical verdict is false (the report says why), 2 on input errors.
Input errors print ``error[CODE]: message`` on stderr, with codes

* ``E-IO``     unreadable file
* ``E-FORMAT`` malformed table, file or argument value
* ``E-BUDGET`` scan exceeds its budget
* ``E-USAGE``  missing or inconsistent arguments
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .algebra import (
    exact_factorizations,
    factorization,
    subgroup,
)
from .constructions import (
    baaj_skandalis,
    coset,
    constant_solution,
    endo_solution,
    kac_takesaki_s,
    kac_takesaki_t,
    militaru,
    sign_solution,
    zakrzewski,
)
from .enumeration import (
    classify,
    enumerate_by_theorem,
    enumerate_on_group,
    enumerate_raw,
)
from .errors import BudgetExceededError, ParseError, PentagonError
from .groups import CORPUS, load_group
from .io import (
    format_coset_datum,
    format_elements,
    format_pairmap,
    parse_group,
    parse_pairmap,
    read_text,
)
from .pentagon import is_solution_conditions, is_solution_direct, profile
from .theta import decompose, theta_from_pairmap

CONSTRUCTIONS = ("kt-s", "kt-t", "endo", "constant", "militaru", "zakrzewski",
                 "baaj-skandalis", "coset", "sign")
METHODS = ("raw", "theta", "theorem", "both")


class UsageError(PentagonError):
    pass


# inputs -------------------------------------------------------------------

def _load_group(ref: str, base: Path | None = None):
    path = Path(ref)
    if base is not None and not path.is_absolute() and not path.exists():
        path = base / path
    if not path.exists():
        builtin = {k.lower(): k for k in CORPUS}
        if ref.lower() in builtin:
            return load_group(builtin[ref.lower()])
    return parse_group(read_text(path))


def _load_pairmap(path: str, group_ref: str | None):
    s, ref = parse_pairmap(read_text(path))
    ref = group_ref or ref
    base = None if group_ref else Path(path).parent
    g = _load_group(ref, base) if ref else None
    return s, g


def _elements(text: str | None, what: str) -> tuple[int, ...]:
    if text is None:
        raise UsageError(f"missing --{what}")
    try:
        return tuple(int(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise ParseError(f"--{what} must be a list of integers") from None


def _require_group(args):
    if not args.group:
        raise UsageError(f"'{args.command}' needs --group")
    return _load_group(args.group)


# reports ------------------------------------------------------------------

def _flag(v: bool) -> str:
    return "true" if v else "false"


def _render(doc: dict, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(doc, indent=2) + "\n"
    lines = []
    for key, value in doc.items():
        if isinstance(value, bool):
            value = _flag(value)
        elif value is None:
            value = "-"
        elif isinstance(value, (list, tuple)):
            value = format_elements(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


# commands -----------------------------------------------------------------

def cmd_verify(args):
    s, g = _load_pairmap(args.pairmap, args.group)
    direct = is_solution_direct(s)
    cond = is_solution_conditions(s)
    doc = {
        "n": s.n,
        "solution": bool(direct),
        "witness": direct.witness,
        "conditions": bool(cond),
        "condition": cond.condition,
        "condition_witness": cond.witness,
    }
    if g is not None:
        doc["group"] = g.name
        on_group = g.n == s.n and bool((s.dot == g.table).all())
        doc["group_form"] = on_group
        if on_group and direct:
            datum = decompose(theta_from_pairmap(s, g))
            doc["kernel"] = list(datum.K.elements)
            doc["R"] = list(datum.R)
    return (0 if direct else 1), _render(doc, args.format)


def cmd_props(args):
    s, _ = _load_pairmap(args.pairmap, args.group)
    doc = {"n": s.n, **{k: v for k, v in profile(s).as_dict().items()}}
    return 0, _render(doc, args.format)


def cmd_construct(args):
    name = args.name
    if name == "militaru":
        if args.n is None:
            raise UsageError("militaru needs --n")
        s = militaru(args.n, _elements(args.alpha, "alpha"), _elements(args.beta, "beta"))
    elif name == "sign":
        s = sign_solution(args.degree)
    else:
        g = _require_group(args)
        if name == "kt-s":
            s = kac_takesaki_s(g)
        elif name == "kt-t":
            s = kac_takesaki_t(g)
        elif name == "endo":
            s = endo_solution(g.magma, _elements(args.gamma, "gamma"))
        elif name == "constant":
            e = None if args.element is None else int(args.element)
            s = constant_solution(g.magma, e)
        elif name in ("zakrzewski", "baaj-skandalis"):
            f = factorization(g, subgroup(g, _elements(args.A, "A")),
                              subgroup(g, _elements(args.B, "B")))
            s = zakrzewski(g, f) if name == "zakrzewski" else baaj_skandalis(g, f)
        else:
            s = coset(g, _elements(args.K, "K"), _elements(args.R, "R"))
    if args.format == "structured":
        doc = {"name": s.name, "n": s.n, "dot": s.dot.tolist(), "star": s.star.tolist()}
        return 0, json.dumps(doc, indent=2) + "\n"
    ref = args.group if name not in ("militaru", "sign") else None
    return 0, format_pairmap(s, ref)


def _enumerate(args, force_classify=False):
    method = args.method
    budget = args.budget
    if args.group:
        g = _load_group(args.group)
    elif method != "raw":
        raise UsageError(f"method '{method}' needs --group")
    else:
        g = None
    if method == "raw":
        if g is None and args.n is None:
            raise UsageError("raw enumeration needs --group or --n")
        report = enumerate_raw(args.n, g.magma if g else None, budget)
        agree = None
    elif method == "theta":
        report, agree = enumerate_on_group(g, budget), None
    elif method == "theorem":
        report, agree = enumerate_by_theorem(g), None
    else:
        scanned = enumerate_on_group(g, budget)
        report = enumerate_by_theorem(g)
        agree = scanned.same_solutions(report)
    if args.classify or force_classify:
        report = classify(report, workers=args.workers)
    code = 1 if agree is False else 0
    if args.format == "structured":
        doc = report.to_dict()
        if agree is not None:
            doc = {"agreement": agree, "methods": ["theta-scan", "theorem"], **doc}
        return code, json.dumps(doc, indent=2) + "\n"
    head = "" if agree is None else f"agreement: {_flag(agree)}\nmethods: theta-scan theorem\n"
    return code, head + report.to_text()


def cmd_enumerate(args):
    return _enumerate(args)


def cmd_classify(args):
    return _enumerate(args, force_classify=True)


def cmd_decompose(args):
    s, g = _load_pairmap(args.pairmap, args.group)
    if g is None:
        raise UsageError("decompose needs --group (or a 'group' field in the file)")
    try:
        gs = theta_from_pairmap(s, g)
    except PentagonError as exc:
        return 1, _render({"group_solution": False, "reason": str(exc)}, args.format)
    datum = decompose(gs)
    if args.format == "structured":
        doc = {"group": g.name, "K": list(datum.K.elements), "R": list(datum.R),
               "mu": list(datum.mu)}
        return 0, json.dumps(doc, indent=2) + "\n"
    return 0, format_coset_datum(datum.K, datum.R, args.group)


def cmd_factorize(args):
    g = _require_group(args)
    facts = exact_factorizations(g)
    if args.format == "structured":
        doc = {"group": g.name, "count": len(facts),
               "factorizations": [{"A": list(f.A.elements), "B": list(f.B.elements)}
                                  for f in facts]}
        return 0, json.dumps(doc, indent=2) + "\n"
    lines = [f"group: {g.name}", f"count: {len(facts)}"]
    lines += [f"factorization {i}: A={format_elements(f.A)} B={format_elements(f.B)}"
              for i, f in enumerate(facts)]
    return 0, "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="setpentagon",
                                description="Set-theoretical solutions of the pentagon equation.")
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--group", help="group table file, or a built-in name such as Z6")
    sub = p.add_subparsers(dest="command", required=True)

    for verb, fn, helptext in (("verify", cmd_verify, "check the pentagon identity"),
                               ("props", cmd_props, "print the solution profile"),
                               ("decompose", cmd_decompose, "recover kernel and representatives")):
        sp = sub.add_parser(verb, parents=[common], help=helptext)
        sp.add_argument("pairmap")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("construct", parents=[common], help="build a named solution")
    sp.add_argument("name", choices=CONSTRUCTIONS)
    sp.add_argument("--n", type=int)
    for flag in ("gamma", "alpha", "beta", "A", "B", "K", "R"):
        sp.add_argument(f"--{flag}", help="element list, e.g. '0 2 4'")
    sp.add_argument("--element", type=int)
    sp.add_argument("--degree", type=int, default=3)
    sp.set_defaults(func=cmd_construct)

    for verb, fn in (("enumerate", cmd_enumerate), ("classify", cmd_classify)):
        sp = sub.add_parser(verb, parents=[common], help=f"{verb} all solutions")
        sp.add_argument("--n", type=int)
        sp.add_argument("--method", choices=METHODS, default="theorem" if verb == "classify" else "both")
        sp.add_argument("--classify", action="store_true")
        sp.add_argument("--budget", type=int)
        sp.add_argument("--workers", type=int, default=1)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("factorize", parents=[common], help="list exact factorizations")
    sp.set_defaults(func=cmd_factorize)
    return p


def _fail(code: str, message: str) -> int:
    print(f"error[{code}]: {message}", file=sys.stderr)
    return 2


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, text = args.func(args)
    except OSError as exc:
        return _fail("E-IO", str(exc))
    except BudgetExceededError as exc:
        return _fail("E-BUDGET", str(exc))
    except UsageError as exc:
        return _fail("E-USAGE", str(exc))
    except PentagonError as exc:
        return _fail("E-FORMAT", str(exc))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
