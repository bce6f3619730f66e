"""Command-line interface: build, decode, verify, analyze and roundtrip.

Exit codes: 0 success, 1 verification failure, 2 configuration or parse
error, 3 internal contract violation (a missing locator, failed stuffing).
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from .code import NotCorrectable
from .config import (ConfigError, dump_tables, fixture_names, load_tables, load_tables_text,
                     parse_elements, resolve_config)
from .decoder import EvaluatorMissing, build_tables, decode, predict_weight, verify_exhaustive
from .gf import FieldError, ParseError
from .ideals import LocatorMissing, StuffingFailed, analyze_spec, compute_t_bounds

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG, EXIT_CONTRACT = 0, 1, 2, 3


def _spec_from_args(args):
    cc = resolve_config(args.config)
    order = args.coordinate_order.split(",") if getattr(args, "coordinate_order", None) else None
    variant = getattr(args, "variant", None)
    return cc, cc.spec(variant=variant, coordinate_order=[v.strip() for v in order] if order else None)


def cmd_build(args) -> int:
    cc, spec = _spec_from_args(args)
    t0 = time.perf_counter()
    tables = build_tables(spec, args.flavor, evaluator=args.evaluator)
    text = dump_tables(cc, tables)
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}: {tables.flavor} locators, degrees {tables.locators.degrees}, "
              f"{time.perf_counter() - t0:.1f}s")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_decode(args) -> int:
    cc, tables = load_tables(args.tables)
    F = tables.code.field
    if args.syndrome:
        s = parse_elements(F, args.syndrome)
        res = decode(tables, syndrome=s)
    else:
        word = parse_elements(F, args.word)
        res = decode(tables, word=word)
        s = tables.code.syndrome(word)
    print(f"syndrome: {','.join(F.format_int(v) for v in s)}")
    print(f"status: {res.status}")
    if res.pattern is not None:
        for p, v in res.pattern.entries:
            P = ",".join(F.format_int(c) for c in tables.code.points[p])
            print(f"error: P{p + 1} = ({P}) value {F.format_int(v)}")
    for alt in res.alternatives:
        print(f"candidate: {tables.code.describe_pattern(alt)}")
    if args.trace:
        for pre, roots in res.trace:
            r = "vanishes" if roots is None else ",".join(F.format_int(v) for v in roots)
            pre = ",".join(F.format_int(v) for v in pre)
            print(f"trace: prefix ({pre}) roots {r}")
    if tables.evaluator is not None and any(s):
        mu, vals = predict_weight(tables, s)
        print(f"predicted weight: {mu} values {','.join(F.format_int(v) for v in vals)}")
    return EXIT_OK if res.ok else EXIT_VERIFY


def cmd_verify(args) -> int:
    cc, tables = load_tables(args.tables)
    rep = verify_exhaustive(tables)
    print(f"{tables.code.name} ({tables.flavor}): {rep.summary()}")
    for e, status in rep.mismatches[: args.show]:
        print(f"  mismatch: {tables.code.describe_pattern(e)} -> {status}")
    if rep.ok:
        print(f"{rep.exact} ok")
        return EXIT_OK
    return EXIT_VERIFY


def cmd_analyze(args) -> int:
    cc, spec = _spec_from_args(args)
    code = spec.code
    F = code.field
    print(f"code {cc.name}: n={code.n} r={code.r} t={code.t} over GF({F.q}); "
          f"ideal {spec.variant}, ghost {spec.ghost and ','.join(F.format_int(v) for v in spec.ghost)}")
    if spec.ghost is not None:
        print(f"locator degree bounds: {compute_t_bounds(code, spec.ghost, spec.coords)}")
    rep = analyze_spec(spec)
    for line in rep.lines():
        print(line)
    ok = rep.zeta_equals_eta and rep.unique_pure_power_tops
    print(f"GB structure (zeta=eta, one pure-power top per slot): {'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_roundtrip(args) -> int:
    cc, spec = _spec_from_args(args)
    tables = build_tables(spec, args.flavor)
    _, again = load_tables_text(dump_tables(cc, tables))
    rep = verify_exhaustive(again)
    print(f"{cc.name}: built {tables.flavor} tables "
          f"(basis {tables.meta.get('basis_size')}, degrees {tables.locators.degrees}); "
          f"verify {rep.summary()}")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_fixtures(args) -> int:
    for name in fixture_names():
        print(name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="avcodes", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def config_args(p):
        p.add_argument("--config", required=True, help="config file or bundled fixture name")
        p.add_argument("--coordinate-order", help="comma list, e.g. y,x")
        p.add_argument("--variant", choices=["FL", "HAT", "STAR"])

    p = sub.add_parser("build", help="compute decoder tables from a config")
    config_args(p)
    p.add_argument("--out")
    p.add_argument("--flavor", choices=["weak", "stuffed"], default="stuffed")
    p.add_argument("--evaluator", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("decode", help="decode a syndrome or received word")
    p.add_argument("--tables", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--syndrome")
    g.add_argument("--word")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="decode every correctable pattern")
    p.add_argument("--tables", required=True)
    p.add_argument("--show", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="stratification report of the decoding ideal")
    config_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("roundtrip", help="build, serialize, reload and verify")
    config_args(p)
    p.add_argument("--flavor", choices=["weak", "stuffed"], default="stuffed")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("fixtures", help="list bundled example configs")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ConfigError, ParseError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (LocatorMissing, StuffingFailed, EvaluatorMissing) as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except (ValueError, NotCorrectable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
