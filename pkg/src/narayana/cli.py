"""Command line interface.

Subcommands: ``poly`` (compute one polynomial with analysis flags),
``enumerate`` (stream words, tableaux, or paths), ``verify`` (exhaustive
identity sweeps), and ``analyze`` (coefficient diagnostics for arbitrary
input). Every command is deterministic.

Exit codes: 0 success, 1 verification counterexample, 2 usage error,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .cache import (
    CACHE_ENV_VAR,
    DEFAULT_CACHE_PATH,
    PolynomialCache,
    narayana_key,
    wpoly_key,
)
from .combinatorics import (
    BudgetExceededError,
    Partition,
    enumerate_lattice_words,
    enumerate_partitions,
    enumerate_syt,
)
from .bijections import word_to_path
from .generating import (
    narayana_polynomial,
    rectangular_catalan,
    verify_sulanke_equidistribution,
    verify_tableau_identity,
)
from .polynomials import IntPolynomial, is_log_concave, is_real_rooted, is_unimodal, newton_inequalities_hold
from .posets import (
    LabeledPoset,
    antichain_poset,
    column_strict_ferrers_poset,
    verify_ferrers_eulerian_identity,
    verify_order_gf,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SUITE_NAMES = ("theorem21", "sulanke", "eq33", "ordergf")
SUITE_DEFAULT_CELLS = {"theorem21": 16, "sulanke": 16, "eq33": 10, "ordergf": 7}
SUITE_HARD_CAPS = {"theorem21": 22, "sulanke": 22, "eq33": 12, "ordergf": 8}

CONFIG_KEYS = ("cache", "jobs", "max_cells", "series_terms", "format")


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narayana",
        description="Exact rectangular Narayana polynomials, descent statistics, "
        "and real-rootedness certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--config",
        metavar="FILE",
        help="JSON file with defaults for cache, jobs, max_cells, series_terms, format",
    )
    commands = parser.add_subparsers(dest="command", metavar="command")

    poly = commands.add_parser(
        "poly", help="compute one polynomial with analysis flags"
    )
    poly.add_argument("--n", type=_nonnegative, required=True, help="symbol quota")
    poly.add_argument("--m", type=_nonnegative, required=True, help="alphabet size")
    poly.add_argument(
        "--format", choices=("plain", "json", "csv"), default=None,
        help="output format (default plain)",
    )
    poly.add_argument("--max-cells", type=_positive, default=None, dest="max_cells")
    _add_cache_flags(poly)
    poly.set_defaults(func=cmd_poly)

    enum = commands.add_parser("enumerate", help="stream objects one per line")
    enum.add_argument("--kind", choices=("words", "syt", "paths"), required=True)
    enum.add_argument("--n", type=_nonnegative)
    enum.add_argument("--m", type=_nonnegative)
    enum.add_argument("--shape", help='partition as row lengths, e.g. "3,2,1"')
    enum.add_argument("--limit", type=_positive, default=None)
    enum.add_argument("--max-cells", type=_positive, default=None, dest="max_cells")
    enum.set_defaults(func=cmd_enumerate)

    verify = commands.add_parser(
        "verify", help="run exhaustive identity sweeps; nonzero exit on failure"
    )
    verify.add_argument(
        "--suite", choices=SUITE_NAMES + ("all",), required=True
    )
    verify.add_argument(
        "--max-cells",
        type=_positive,
        default=None,
        dest="max_cells",
        help="sweep ceiling (each suite also respects its own hard cap)",
    )
    verify.add_argument(
        "--series-terms",
        type=_nonnegative,
        default=None,
        dest="series_terms",
        help="series coefficients compared by the ordergf suite (default 10)",
    )
    verify.add_argument(
        "--jobs", type=_positive, default=None, help="worker processes (default 1)"
    )
    verify.add_argument(
        "--poset",
        metavar="FILE",
        help="JSON poset description; restricts the ordergf suite to that poset",
    )
    _add_cache_flags(verify)
    verify.set_defaults(func=cmd_verify)

    analyze = commands.add_parser(
        "analyze", help="diagnostics for an arbitrary integer coefficient list"
    )
    analyze.add_argument(
        "--coeffs", required=True, help='coefficients low to high, e.g. "1,3,1"'
    )
    analyze.add_argument(
        "--format", choices=("plain", "json"), default=None,
        help="output format (default plain)",
    )
    analyze.set_defaults(func=cmd_analyze)

    return parser


def _add_cache_flags(subparser: argparse.ArgumentParser) -> None:
    subparser.add_argument(
        "--cache",
        metavar="PATH",
        default=None,
        help=f"cache file (default {DEFAULT_CACHE_PATH}, or ${CACHE_ENV_VAR})",
    )
    subparser.add_argument(
        "--no-cache", action="store_true", dest="no_cache", help="disable persistence"
    )


def _load_config(argv: list[str]) -> dict:
    path = None
    for i, token in enumerate(argv):
        if token == "--config" and i + 1 < len(argv):
            path = argv[i + 1]
        elif token.startswith("--config="):
            path = token.split("=", 1)[1]
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemExit(f"error: cannot read config {path}: {exc}")
    if not isinstance(data, dict):
        raise SystemExit(f"error: config {path} must hold a JSON object")
    return {key: data[key] for key in CONFIG_KEYS if key in data}


def _open_cache(args, config: dict) -> PolynomialCache:
    path = args.cache or os.environ.get(CACHE_ENV_VAR) or config.get("cache") or DEFAULT_CACHE_PATH
    return PolynomialCache(path, enabled=not args.no_cache, version=__version__)


def _analysis_flags(poly: IntPolynomial) -> dict:
    return {
        "real_rooted": bool(is_real_rooted(poly)),
        "log_concave": is_log_concave(poly),
        "unimodal": is_unimodal(poly),
    }


def cmd_poly(args) -> int:
    cache = _open_cache(args, args._config)
    key = narayana_key(args.n, args.m)
    catalan = rectangular_catalan(args.n, args.m)
    coefficients = cache.get_coefficients(key)
    if coefficients is not None and sum(coefficients) != catalan:
        print(f"warning: cache entry {key!r} fails the count check, recomputing", file=sys.stderr)
        coefficients = None
    if coefficients is None:
        poly = narayana_polynomial(args.n, args.m, max_cells=args.max_cells)
    else:
        poly = IntPolynomial(coefficients)
    flags = _analysis_flags(poly)
    cache.put(key, poly.coefficients, flags=flags)
    cache.save()
    if args.format == "plain":
        print(" ".join(str(c) for c in poly.coefficients))
    elif args.format == "csv":
        print("exponent,coefficient")
        for exponent, coefficient in enumerate(poly.coefficients):
            print(f"{exponent},{coefficient}")
    else:
        payload = {
            "n": args.n,
            "m": args.m,
            "coefficients": [str(c) for c in poly.coefficients],
            "degree": poly.degree,
            "catalan": str(catalan),
            **flags,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def cmd_enumerate(args) -> int:
    if args.kind in ("words", "paths"):
        if args.n is None or args.m is None:
            return _usage_error(f"--kind {args.kind} needs --n and --m")
        stream = enumerate_lattice_words(args.n, args.m, max_cells=args.max_cells)
        if args.kind == "paths":
            stream = (word_to_path(word) for word in stream)
    else:
        if args.shape:
            try:
                shape = Partition.from_string(args.shape)
            except ValueError as exc:
                return _usage_error(str(exc))
        elif args.n is not None and args.m is not None:
            shape = Partition.rectangle(args.n, args.m)
        else:
            return _usage_error("--kind syt needs --shape or both --n and --m")
        stream = enumerate_syt(shape, max_cells=args.max_cells)
    emitted = 0
    for item in stream:
        print(str(item))
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return EXIT_OK


def _sweep_pairs(max_cells: int) -> list[tuple[int, int]]:
    return sorted(
        (n, m)
        for n in range(1, max_cells + 1)
        for m in range(1, max_cells // n + 1)
    )


def _case_theorem21(pair: tuple[int, int]):
    n, m = pair
    return verify_tableau_identity(n, m, max_cells=n * m)


def _case_sulanke(pair: tuple[int, int]):
    n, m = pair
    return verify_sulanke_equidistribution(n, m, max_cells=n * m)


def _case_eq33(parts: tuple[int, ...]):
    return verify_ferrers_eulerian_identity(Partition(parts))


def _case_ordergf(payload: tuple[dict, int]):
    description, terms = payload
    return verify_order_gf(LabeledPoset.from_dict(description), terms=terms)


def _run_cases(runner, case_args, jobs: int) -> list:
    if jobs > 1 and len(case_args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(runner, case_args))
    return [runner(arg) for arg in case_args]


def _suite_cases(suite: str, args):
    ceiling = SUITE_HARD_CAPS[suite]
    cells = min(args.max_cells or SUITE_DEFAULT_CELLS[suite], ceiling)
    if suite in ("theorem21", "sulanke"):
        pairs = _sweep_pairs(cells)
        labels = [f"n={n} m={m}" for n, m in pairs]
        runner = _case_theorem21 if suite == "theorem21" else _case_sulanke
        return labels, runner, pairs
    if suite == "eq33":
        shapes = [
            shape.parts
            for total in range(1, cells + 1)
            for shape in enumerate_partitions(total)
        ]
        labels = [f"shape={','.join(map(str, parts))}" for parts in shapes]
        return labels, _case_eq33, shapes
    # ordergf
    terms = args.series_terms
    if args.poset:
        with open(args.poset, "r", encoding="utf-8") as handle:
            poset = LabeledPoset.from_json(handle.read())
        return [f"poset p={poset.size} terms={terms}"], _case_ordergf, [
            (poset.to_dict(), terms)
        ]
    cases = []
    labels = []
    for total in range(1, cells + 1):
        for shape in enumerate_partitions(total):
            poset = column_strict_ferrers_poset(shape)
            cases.append((poset.to_dict(), terms))
            labels.append(f"shape={shape} terms={terms}")
    cases.append((antichain_poset(3).to_dict(), terms))
    labels.append(f"antichain p=3 terms={terms}")
    return labels, _case_ordergf, cases


def cmd_verify(args) -> int:
    suites = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    cache = _open_cache(args, args._config)
    all_passed = True
    first_failure = None
    for suite in suites:
        labels, runner, case_args = _suite_cases(suite, args)
        reports = _run_cases(runner, case_args, args.jobs)
        passed = 0
        for label, report in zip(labels, reports):
            if report:
                passed += 1
                print(f"{suite} {label}: PASS")
            else:
                all_passed = False
                print(f"{suite} {label}: FAIL ({report.detail()})")
                if first_failure is None:
                    first_failure = f"{suite} {label}: {report.detail()}"
        if suite == "eq33":
            for parts, report in zip(case_args, reports):
                if report:
                    poset = column_strict_ferrers_poset(Partition(parts))
                    cache.put(
                        wpoly_key(poset),
                        report.left,
                        flags={"matches_tableau_polynomial": True},
                    )
        print(f"suite {suite}: {passed}/{len(labels)} passed")
    cache.save()
    if not all_passed:
        print(f"first counterexample: {first_failure}")
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_analyze(args) -> int:
    try:
        coefficients = [int(chunk.strip()) for chunk in args.coeffs.split(",")]
    except ValueError:
        print(f"error: cannot parse coefficient list {args.coeffs!r}", file=sys.stderr)
        return EXIT_USAGE
    poly = IntPolynomial(coefficients)
    if poly.is_zero:
        print("error: the zero polynomial is not analyzable", file=sys.stderr)
        return EXIT_USAGE
    certificate = is_real_rooted(poly)
    results = {
        "degree": poly.degree,
        "real_rooted": certificate.real_rooted,
        "distinct_real_roots": certificate.distinct_real_roots,
        "log_concave": is_log_concave(poly),
        "unimodal": is_unimodal(poly),
        "newton": newton_inequalities_hold(poly),
    }
    if args.format == "json":
        print(json.dumps(results, indent=2, sort_keys=True))
    else:
        for name, value in results.items():
            rendered = str(value).lower() if isinstance(value, bool) else value
            print(f"{name}={rendered}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    config = _load_config(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    args._config = config
    # explicit flags win over config values, which win over built-in defaults
    if getattr(args, "max_cells", None) is None and "max_cells" in config:
        args.max_cells = int(config["max_cells"])
    if hasattr(args, "jobs"):
        args.jobs = args.jobs or int(config.get("jobs", 1))
    if hasattr(args, "series_terms") and args.series_terms is None:
        args.series_terms = int(config.get("series_terms", 10))
    if hasattr(args, "format"):
        args.format = args.format or config.get("format", "plain")
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    raise SystemExit(main())
