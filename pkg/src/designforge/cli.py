"""Command-line surface.

Every verification is a scriptable subcommand with machine-readable output
on stdout (JSON by default, CSV via --format csv) and diagnostics on
stderr.  Exit codes: 0 success / all verified, 1 verification mismatch,
2 invalid parameters.  Identical inputs give byte-identical JSON no matter
how many worker threads run the enumeration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import golden
from .codebuild import CodeSpec, TooLarge
from .designs import blocks_of_weight, full_design_report
from .gf2m import Field, NonPrimitivePolynomial, UnsupportedM
from .invariance import affine_orbit_check, closure_check
from .polyops import defining_set_of_family, poly_str
from .spectrum import (
    InapplicableParameters,
    WeightDistribution,
    closed_form_c1,
    closed_form_c2_extended,
    cyclic_weight_distribution,
    pless_verify,
    weight_distribution,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_PARAMS = 2


def _default_threads() -> int:
    env = os.environ.get("DESIGN_FORGE_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _parse_poly(text: str) -> int:
    return int(text, 16)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _emit_csv(rows: list[list], header: list[str]) -> None:
    print(",".join(header))
    for row in rows:
        print(",".join("" if x is None else str(x) for x in row))


def _spec_from_args(args) -> CodeSpec:
    return CodeSpec(args.family, args.s, getattr(args, "l", None))


def _field_for(spec: CodeSpec, poly: int | None) -> Field:
    return Field(spec.m, poly)


def _dist_rows(dist: WeightDistribution) -> list[list]:
    return [[w, dist.entries[w]] for w in dist.weights()]


def cmd_field(args) -> int:
    f = Field(args.m, args.poly)
    obj = {
        "m": f.m,
        "s": f.s,
        "q": f.q,
        "n": f.n,
        "poly": f"{f.poly:#x}",
        "poly_terms": poly_str(f.poly),
        "alpha_order": f.n,
    }
    if args.format == "csv":
        _emit_csv([[obj[k] for k in ("m", "s", "q", "n", "poly", "alpha_order")]],
                  ["m", "s", "q", "n", "poly", "alpha_order"])
    else:
        _emit(obj)
    return EXIT_OK


def cmd_weights(args) -> int:
    spec = _spec_from_args(args)
    f = _field_for(spec, args.poly)
    if args.cyclic:
        dist = cyclic_weight_distribution(spec, f, threads=args.threads)
    else:
        dist = weight_distribution(spec, f, threads=args.threads)
    match = None
    if args.closed_form:
        if args.cyclic:
            raise InapplicableParameters("--closed-form compares the extended code only")
        if spec.family == "c1":
            closed = closed_form_c1(spec.s)
        else:
            closed = closed_form_c2_extended(spec.s, spec.l)
        match = closed == dist
    obj = {
        "family": spec.family,
        "s": spec.s,
        "l": spec.l,
        "cyclic": args.cyclic,
        "distribution": dist.to_json_obj(),
        "closed_form_match": match,
    }
    if args.format == "csv":
        _emit_csv(_dist_rows(dist), ["w", "count"])
    else:
        _emit(obj)
    if match is False:
        print("closed form disagrees with enumeration", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_designs(args) -> int:
    spec = _spec_from_args(args)
    f = _field_for(spec, args.poly)
    if args.export_blocks:
        if args.weight is None:
            raise InapplicableParameters("--export-blocks needs --weight")
        for mask in blocks_of_weight(spec, f, args.weight):
            support = []
            while mask:
                low = mask & -mask
                support.append(low.bit_length() - 1)
                mask ^= low
            print(" ".join(map(str, support)))
        return EXIT_OK
    weights = [args.weight] if args.weight is not None else None
    reports = full_design_report(
        spec, f, t=args.t, threads=args.threads, exhaustive=args.exhaustive, weights=weights
    )
    for r in reports:
        if r.skipped:
            print(f"weight {r.k}: skipped ({r.b} blocks; rerun with --exhaustive)", file=sys.stderr)
    obj = {
        "family": spec.family,
        "s": spec.s,
        "l": spec.l,
        "t": args.t,
        "v": spec.length,
        "reports": [r.to_json_obj() for r in reports],
    }
    if args.format == "csv":
        rows = [[r.t, r.v, r.k, r.b, r.lam, r.verified, r.theorem_lambda, r.match,
                 r.skipped] for r in reports]
        _emit_csv(rows, ["t", "v", "k", "b", "lambda", "verified", "theorem_lambda", "match", "skipped"])
    else:
        _emit(obj)
    active = [r for r in reports if not r.skipped]
    ok = all(r.verified and r.match in (True, None) for r in active)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_invariance(args) -> int:
    spec = _spec_from_args(args)
    closed, witness = closure_check(set(defining_set_of_family(spec)), spec.m)
    orbit_checked = False
    orbit_invariant = None
    if spec.m <= 6:
        f = _field_for(spec, args.poly)
        orbit_invariant = affine_orbit_check(spec, f)
        orbit_checked = True
    else:
        print(f"orbit check skipped: m={spec.m} > 6", file=sys.stderr)
    obj = {
        "closure": closed,
        "witness": list(witness) if witness else None,
        "orbit_checked": orbit_checked,
        "orbit_invariant": orbit_invariant,
        "dual_inherits": closed,
    }
    if args.format == "csv":
        wit_csv = "" if witness is None else f"{witness[0]};{witness[1]}"
        _emit_csv([[closed, wit_csv, orbit_checked, orbit_invariant]],
                  ["closure", "witness", "orbit_checked", "orbit_invariant"])
    else:
        _emit(obj)
    ok = closed and orbit_invariant is not False
    return EXIT_OK if ok else EXIT_MISMATCH


def _run_example(ex_id: str, threads: int) -> dict:
    info = golden.EXAMPLES[ex_id]
    spec = CodeSpec(info["family"], info["s"], info["l"])
    f = Field(spec.m)
    dist = weight_distribution(spec, f, threads=threads)
    expected = info["enumerator"]
    match = dist.entries == expected and dist.dimension == info["params"][1]
    return {
        "example": ex_id,
        "code": f"[{dist.length}, {dist.dimension}, {dist.min_distance()}]",
        "match": match,
    }


def _run_pless(case, threads: int) -> dict:
    ex_id, s, n, k = case
    spec = CodeSpec("c1", s)
    f = Field(spec.m)
    dist = cyclic_weight_distribution(spec, f, threads=threads)
    ok = dist.length == n and dist.dimension == k and bool(pless_verify(dist, n, k))
    return {"example": ex_id, "code": f"[{n}, {k}]", "match": ok}


def cmd_reproduce(args) -> int:
    targets = list(golden.EXAMPLES) + [c[0] for c in golden.PLESS_CASES]
    if args.example is not None:
        if args.example not in targets:
            raise InapplicableParameters(
                f"unknown example {args.example!r}; choose from {', '.join(targets)}"
            )
        targets = [args.example]
    results = []
    for ex_id in targets:
        if ex_id in golden.EXAMPLES:
            results.append(_run_example(ex_id, args.threads))
        else:
            case = next(c for c in golden.PLESS_CASES if c[0] == ex_id)
            results.append(_run_pless(case, args.threads))
    all_match = all(r["match"] for r in results)
    if args.format == "csv":
        _emit_csv([[r["example"], r["code"], r["match"]] for r in results],
                  ["example", "code", "match"])
    else:
        _emit({"results": results, "all_match": all_match})
    return EXIT_OK if all_match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="designforge",
        description="Exact weight distributions, affine invariance, and design "
        "verification for two families of extended binary cyclic codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, family=False):
        p.add_argument("--poly", type=_parse_poly, default=None,
                       help="primitive polynomial as hex (LSB = constant term)")
        p.add_argument("--threads", type=int, default=_default_threads(),
                       help="worker threads (env DESIGN_FORGE_THREADS)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        if family:
            p.add_argument("--family", choices=("c1", "c2"), required=True)
            p.add_argument("--s", type=int, required=True)
            p.add_argument("--l", type=int, default=None)

    p = sub.add_parser("field", help="field summary and primitivity check")
    p.add_argument("--m", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("weights", help="weight distribution by enumeration")
    add_common(p, family=True)
    p.add_argument("--closed-form", action="store_true", dest="closed_form",
                   help="compare against the closed-form table")
    p.add_argument("--cyclic", action="store_true", help="length-n cyclic relative")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("designs", help="brute-force t-design verification")
    add_common(p, family=True)
    p.add_argument("--t", type=int, default=2, choices=(2, 3))
    p.add_argument("--weight", type=int, default=None, help="verify one weight class")
    p.add_argument("--exhaustive", action="store_true",
                   help="verify classes beyond the cost gate")
    p.add_argument("--export-blocks", action="store_true", dest="export_blocks",
                   help="print blocks (needs --weight), one per line")
    p.set_defaults(func=cmd_designs)

    p = sub.add_parser("invariance", help="affine-invariance checks")
    add_common(p, family=True)
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser("reproduce", help="golden suite of published examples")
    add_common(p)
    p.add_argument("--all", action="store_true", help="run every example (default)")
    p.add_argument("--example", default=None, help="run one example by id")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedM, NonPrimitivePolynomial, InapplicableParameters, TooLarge, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMS


if __name__ == "__main__":
    sys.exit(main())
