"""Command-line front end.

Exit codes: 0 computed (whatever the verdict), 1 input error, 2 refused precondition.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from . import __version__
from .codec import braid_closure, parse_braid, parse_gauss, parse_pd
from .errors import InputError, PreconditionError
from .fourmanifold import parse_framed_link, parse_int_matrix, summarize
from .invariants import UnitComplexSample, alexander, arf, lt_signature
from .obstructions import (
    deep_slice_certificate,
    family_rules,
    mt_obstruct,
    rohlin_bound,
    universal_refute,
)
from .reports import dumps_record, make_report, render_text, reverify
from .seifert import SeifertMatrix, matrix_from_literal, seifert_circles, seifert_matrix
from .wall import mu_from_double_points, normalize, parse_terms

_GAUSS_TOKEN = re.compile(r"^[OU]\d+[+-]$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems are input errors, not refusals
        raise InputError(message)


def _read_source(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _file_or_literal(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if os.path.isfile(value):
        return _read_source(value)
    return value


def detect_notation(text: str) -> str:
    body = text.strip()
    tokens = body.replace(",", " ").split()
    if body.startswith(("X", "PD")) or body == "U":
        return "pd"
    if tokens and all(_GAUSS_TOKEN.match(t.replace("−", "-")) for t in tokens):
        return "gauss"
    if re.match(r"^\d+\s*:", body) or re.match(r"^s\d", body):
        return "braid"
    if re.fullmatch(r"[\s\d,;\[\]\-]*", body):
        return "matrix"
    raise InputError("cannot tell the knot notation; pass --notation")


def load_knot(text: str, notation: str = "auto") -> tuple[SeifertMatrix, int, str]:
    """Seifert matrix, surface genus and a description of a knot given in any notation."""
    if notation == "auto":
        notation = detect_notation(text)
    if notation == "matrix":
        v = matrix_from_literal(text)
        return v, v.size // 2, "Seifert matrix literal"
    if notation == "pd":
        d = parse_pd(text)
    elif notation == "gauss":
        d = parse_gauss(text)
    elif notation == "braid":
        d = braid_closure(parse_braid(text))
    else:
        raise InputError(f"unknown notation {notation!r}")
    surface = seifert_circles(d)
    return seifert_matrix(surface), surface.genus, f"{notation}: {d.to_pd() or 'U'}"


def _parse_vector(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in body.replace(",", " ").split())
    except ValueError as exc:
        raise InputError(f"bad class vector {text!r}") from exc


# ---------------------------------------------------------------------------
# subcommands; each returns (source text, result dict, warnings)


def cmd_knot_invariants(args):
    src = _read_source(args.input)
    v, genus, desc = load_knot(src, args.notation)
    omegas = [UnitComplexSample.parse(w) for w in (args.omega or ["1/2"])]
    alex = alexander(v)
    sigs, warnings = [], []
    for w in omegas:
        entry = {"omega": str(w), "certified": w.exceptional_ok}
        try:
            entry["signature"] = lt_signature(v, w)
        except PreconditionError as exc:
            entry["signature"] = None
            warnings.append(f"omega {w}: {exc}")
        sigs.append(entry)
        if not w.exceptional_ok:
            warnings.append(f"omega {w} uncertified: order {w.m} is not a prime power")
    result = {
        "knot": desc,
        "seifert_matrix": [list(r) for r in v.rows],
        "genus_of_surface": genus,
        "alexander": alex.record(),
        "alexander_text": str(alex),
        "alexander_at_minus_one": int(alex(-1)),
        "signatures": sigs,
        "arf": arf(v),
    }
    return src, result, warnings


def cmd_deep_slice(args):
    src = _read_source(args.input)
    cert = deep_slice_certificate(parse_framed_link(src))
    if not cert.verify():
        raise AssertionError("certificate failed its own check")
    return src, cert.record(), list(cert.notes[:1]) if cert.case == "ROHLIN_CONDITIONAL" else []


def cmd_rohlin(args):
    q = parse_int_matrix(_file_or_literal(args.matrix))
    psi = _parse_vector(args.klass)
    cert = rohlin_bound(q, psi)
    return f"{q}|{psi}", cert.record(), []


def cmd_mt_obstruct(args):
    omega = UnitComplexSample.parse(args.omega)
    if not omega.exceptional_ok:
        raise PreconditionError(f"omega = {omega} is not certified (order {omega.m} is not a prime power)")
    if (args.knot is None) == (args.sigma is None):
        raise InputError("give exactly one of --knot or --sigma")
    warnings = []
    if args.knot is not None:
        v, _, desc = load_knot(_file_or_literal(args.knot), args.notation)
        sigma = lt_signature(v, omega)
    else:
        sigma, desc = args.sigma, "signature given directly"
    if args.manifold is not None:
        if args.sign is not None or args.chi is not None:
            raise InputError("--manifold excludes --sign/--chi")
        q = parse_int_matrix(_file_or_literal(args.manifold))
        closed = summarize(q)
        warnings.append("capped closure assumes the boundary of X is the 3-sphere")
    else:
        if args.sign is None or args.chi is None:
            raise InputError("give --manifold or both --sign and --chi")
        if not args.h1_trivial:
            raise PreconditionError("closed manifold data needs --h1-trivial (H_1(X) = 0)")
        closed = (args.sign, args.chi)
    verdict = mt_obstruct(sigma, omega, closed)
    result = {"knot": desc, **verdict.record()}
    return f"{desc}|{omega}|{closed}", result, warnings


def cmd_universal_refute(args):
    w = universal_refute(args.sign, args.chi, args.h1_gens)
    return f"{args.sign}|{args.chi}|{args.h1_gens}", w.record(), list(w.notes)


def cmd_family_rule(args):
    v = family_rules(args.name, args.k)
    return f"{args.name}|{args.k}", v.record(), []


def cmd_wall_calc(args):
    src = _read_source(args.input)
    rank, terms = parse_terms(src)
    el = mu_from_double_points(terms, rank) if args.mu else normalize(terms, rank)
    result = {"rank": rank, "normalized": el.record(), "text": str(el), "zero": el.is_zero()}
    return src, result, []


def cmd_verify(args):
    src = _read_source(args.input)
    try:
        report = json.loads(src)
    except json.JSONDecodeError as exc:
        raise InputError(f"not a record: {exc}") from exc
    ok = reverify(report)
    return src, {"checked_command": report.get("command"), "consistent": ok}, []


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="deepslice", description="Knot and 2-handlebody invariants with checkable certificates.")
    p.add_argument("--format", choices=("text", "record"), default="text")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("knot-invariants", help="Alexander polynomial, signatures, Arf")
    s.add_argument("input", nargs="?", help="file with a PD / Gauss / braid / matrix knot (default stdin)")
    s.add_argument("--notation", choices=("auto", "pd", "gauss", "braid", "matrix"), default="auto")
    s.add_argument("--omega", action="append", help="a/m for omega = exp(2 pi i a/m); repeatable; default 1/2")
    s.set_defaults(func=cmd_knot_invariants)

    s = sub.add_parser("deep-slice", help="deep slice certificate for a framed-link 2-handlebody")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_deep_slice)

    s = sub.add_parser("rohlin", help="genus bound for an even class")
    s.add_argument("matrix")
    s.add_argument("--class", dest="klass", required=True)
    s.set_defaults(func=cmd_rohlin)

    s = sub.add_parser("mt-obstruct", help="signature obstruction to null-homologous slicing")
    s.add_argument("--knot")
    s.add_argument("--sigma", type=int)
    s.add_argument("--notation", choices=("auto", "pd", "gauss", "braid", "matrix"), default="auto")
    s.add_argument("--omega", default="1/2")
    s.add_argument("--manifold")
    s.add_argument("--sign", type=int)
    s.add_argument("--chi", type=int)
    s.add_argument("--h1-trivial", action="store_true")
    s.set_defaults(func=cmd_mt_obstruct)

    s = sub.add_parser("universal-refute", help="witness knot against universal slicing")
    s.add_argument("--sign", type=int, required=True)
    s.add_argument("--chi", type=int, required=True)
    s.add_argument("--h1-gens", type=int, required=True)
    s.set_defaults(func=cmd_universal_refute)

    s = sub.add_parser("family-rule", help="static rules for 1-handlebodies and S2xD2 sums")
    s.add_argument("name")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_family_rule)

    s = sub.add_parser("wall-calc", help="normalize a signed sum of free-group words")
    s.add_argument("input", nargs="?")
    s.add_argument("--mu", action="store_true", help="treat lines as double points (coefficients must be +-1)")
    s.set_defaults(func=cmd_wall_calc)

    s = sub.add_parser("verify", help="re-check the arithmetic of a structured record")
    s.add_argument("input", nargs="?")
    s.set_defaults(func=cmd_verify)
    return p


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        source, result, warnings = args.func(args)
    except InputError as exc:
        err.write(f"input error: {exc}\n")
        return 1
    except PreconditionError as exc:
        err.write(f"refused: {exc}\n")
        return 2
    report = make_report(args.command, source, result, warnings)
    out.write(dumps_record(report) + "\n" if args.format == "record" else render_text(report))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
