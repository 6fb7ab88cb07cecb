"""Command-line entry point: ``wellcovered {classify,census,table,verify-shelling}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from .cache import CensusCache
from .circulant import ConnectionSet, SpecError, build_circulant, enumerate_connection_sets
from .classify import ClassificationRecord, classify, sort_key
from .decomp import DEFAULT_BUDGET, ShellingError, parse_certificate, shelling_violation
from .homology import field_name, parse_field
from .simplex import independence_complex, is_pure
from .table import compare, golden_path, load_golden

EXIT_OK, EXIT_DIFF, EXIT_PARSE, EXIT_UNKNOWN, EXIT_NO_GOLDEN = 0, 1, 2, 3, 4

log = logging.getLogger("wellcovered")


def render(rec: ClassificationRecord) -> str:
    lines = [
        f"{rec.spec.pretty()}{'' if rec.connected else '*'}",
        f"  connected        {rec.connected}",
        f"  well-covered     {rec.well_covered}",
        f"  label            {rec.label}" + ("  (shelling search hit budget)" if rec.status != "ok" else ""),
        f"  1-well-covered   {rec.one_well_covered}",
        f"  CIS              {rec.cis}",
        f"  alpha, omega     {rec.alpha}, {rec.omega}",
        f"  f                {rec.f}",
        f"  h                {rec.h}",
        f"  field            {field_name(rec.field)}",
    ]
    return "\n".join(lines)


def render_row(rec: ClassificationRecord) -> str:
    name = rec.spec.pretty() + ("" if rec.connected else "*")
    flag = "1" if rec.one_well_covered else "-"
    status = "" if rec.status == "ok" else "  UNKNOWN(budget)"
    return f"{name:<28} {rec.label:<16} {flag}  alpha={rec.alpha} omega={rec.omega} cis={int(rec.cis)}{status}"


def _classify_job(args: tuple[ConnectionSet, int, int]) -> ClassificationRecord:
    spec, field, budget = args
    return classify(build_circulant(spec), field, budget)


def collect(n_min: int, n_max: int, field: int = 0, budget: int = DEFAULT_BUDGET, jobs: int = 1,
            cache: CensusCache | None = None, force: bool = False) -> list[ClassificationRecord]:
    """Classify one representative per multiplier class for each n, reusing cached rows."""
    specs = [s for n in range(n_min, n_max + 1) for s in enumerate_connection_sets(n)]
    done: list[ClassificationRecord] = []
    todo: list[ConnectionSet] = []
    for s in specs:
        hit = None if (cache is None or force) else cache.get(s.n, s.S, field)
        if hit is not None:
            done.append(hit)
        else:
            todo.append(s)
    work = [(s, field, budget) for s in todo]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_classify_job, work, chunksize=4)
            for rec in results:
                if cache is not None:
                    cache.put(rec)
                done.append(rec)
    else:
        for item in work:
            rec = _classify_job(item)
            if cache is not None:
                cache.put(rec)
            done.append(rec)
    return sorted(done, key=sort_key)


def _spec_error(exc: SpecError) -> int:
    where = f" (token {exc.token!r} at position {exc.position})" if exc.position is not None else ""
    print(f"error: {exc}{where}", file=sys.stderr)
    return EXIT_PARSE


def _cache(args) -> CensusCache | None:
    if getattr(args, "no_cache", False):
        return None
    return CensusCache(args.cache_dir)


def cmd_classify(args) -> int:
    try:
        spec = ConnectionSet.parse(args.spec)
    except SpecError as exc:
        return _spec_error(exc)
    rec = classify(build_circulant(spec), args.field, args.budget)
    print(json.dumps(rec.to_dict()) if args.json else render(rec))
    return EXIT_UNKNOWN if rec.status != "ok" else EXIT_OK


def cmd_census(args) -> int:
    if not 3 <= args.n_min <= args.n_max:
        print("error: need 3 <= n-min <= n-max", file=sys.stderr)
        return EXIT_PARSE
    records = collect(args.n_min, args.n_max, args.field, args.budget, args.jobs, _cache(args), args.force)
    if args.well_covered_only:
        records = [r for r in records if r.well_covered]
    for rec in records:
        print(json.dumps(rec.to_dict(), sort_keys=True) if args.json else render_row(rec))
    return EXIT_UNKNOWN if any(r.status != "ok" for r in records) else EXIT_OK


def cmd_table(args) -> int:
    path = Path(args.golden) if args.golden else golden_path()
    if not path.exists():
        print(f"error: golden file {path} not found", file=sys.stderr)
        return EXIT_NO_GOLDEN
    golden = load_golden(path, args.n_max)
    records = collect(3, args.n_max, args.field, args.budget, args.jobs, _cache(args), args.force)
    report = compare(records, golden)
    for m in report.merges:
        print(m)
    for line in report.diff:
        print(line)
    unknown = [r for r in records if r.status != "ok"]
    for r in unknown:
        print(f"unknown (budget): {r.spec.pretty()}")
    print(f"{report.compared} rows compared, {report.differences} differences")
    return EXIT_DIFF if report.differences else EXIT_OK


def cmd_verify_shelling(args) -> int:
    try:
        spec = ConnectionSet.parse(args.spec)
    except SpecError as exc:
        return _spec_error(exc)
    c = independence_complex(build_circulant(spec))
    if not is_pure(c):
        print(f"error: {spec.pretty()} is not well-covered", file=sys.stderr)
        return EXIT_PARSE
    try:
        order = parse_certificate(Path(args.certificate).read_text(), c.dim + 1)
        violation = shelling_violation(c, order)
    except (OSError, ValueError, ShellingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if violation is None:
        print(f"PASS: {len(order)} facets form a shelling of Ind({spec.pretty()})")
        return EXIT_OK
    i, j = violation
    print(f"FAIL: facet {i} has no earlier facet K with F_{i} \\ K = {{x}} and x outside facet {j}")
    return EXIT_DIFF


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wellcovered", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cache=True):
        p.add_argument("--field", type=parse_field, default=0, help="0 / QQ for rationals, or a prime p")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="shelling search node budget")
        if cache:
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--force", action="store_true", help="recompute cached rows")
            p.add_argument("--no-cache", action="store_true")
            p.add_argument("--cache-dir", default=None, help="overrides $WELLCOVERED_CACHE_DIR")

    p = sub.add_parser("classify", help="classify one circulant given as n:a1,...,at")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    common(p, cache=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify every circulant for n in a range")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--well-covered-only", action="store_true")
    p.add_argument("--json", action="store_true")
    common(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("table", help="diff the census against the published table")
    p.add_argument("--n-max", type=int, default=16)
    p.add_argument("--golden", default=None)
    common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify-shelling", help="check a shelling certificate file")
    p.add_argument("spec")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify_shelling)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
