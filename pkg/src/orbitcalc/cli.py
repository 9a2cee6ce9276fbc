"""orbitcalc command line."""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .classes import nonequivariant_class, series_class, weighted_orbit_class
from .errors import (
    CodimNegative,
    DegenerateBasis,
    InvalidTree,
    NotDivisible,
    OrbitCalcError,
    ParseError,
    WeightMismatch,
)
from .io import dump_json, load_profile, load_series, load_tree, parse_profile_text, profile_from_text
from .schubert import profile_exists
from .series import RamificationProfile, boundary_orbits, full_weight, ramification_profile, wronskian
from .special import decompose, predegree, predegree_brute_force, validate_tree

EXIT_PARSE = 1
EXIT_WEIGHT = 2
EXIT_NOT_DIVISIBLE = 3
EXIT_DEPENDENT = 4
EXIT_INVALID_TREE = 5
EXIT_VERIFY = 6
EXIT_TABLE = 7

DEFAULT_MAX_DEGREE = 64

# Base-point-free quartic pencils: a_1 values at the ramification points and
# the expected coefficients of O[3] and O[2,1].
QUARTIC_PENCILS = (
    ("2,2,2,2,2,2", 24, 48),
    ("3,2,2,2,2", 16, 40),
    ("4,2,2,2", 12, 24),
    ("3,3,2,2", 8, 32),
    ("3,3,3", 0, 24),
    ("4,3,2", 4, 16),
)


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _max_degree() -> int:
    raw = os.environ.get("ORBITCALC_MAX_DEGREE", str(DEFAULT_MAX_DEGREE))
    try:
        return int(raw)
    except ValueError:
        raise _Fail(EXIT_PARSE, f"ORBITCALC_MAX_DEGREE must be an integer, got {raw!r}")


def _check_size(r: int, d: int) -> None:
    if r < 0 or d < r:
        raise _Fail(EXIT_PARSE, f"need 0 <= r <= d, got r={r}, d={d}")
    cap = _max_degree()
    if (r + 1) * (d + 1) > cap:
        raise _Fail(EXIT_PARSE, f"(r+1)(d+1) = {(r + 1) * (d + 1)} exceeds ORBITCALC_MAX_DEGREE={cap}")


def _worb_one(job: tuple) -> tuple[int, str]:
    """Render one profile; returns (exit code, text).  Runs in worker processes."""
    profile, output = job
    try:
        cls = weighted_orbit_class(profile)
    except (WeightMismatch, CodimNegative) as exc:
        return EXIT_WEIGHT, f"error: {exc}"
    except NotDivisible as exc:
        return EXIT_NOT_DIVISIBLE, f"error: numerator not divisible: {exc}"
    if output == "polynomial":
        return 0, cls.to_text()
    sch = nonequivariant_class(cls)
    if output == "schubert":
        return 0, sch.to_text()
    lines = [
        f"profile: {profile}",
        f"r={profile.r} d={profile.d} points={profile.size} codim={cls.codim}",
        f"infinite stabiliser: {'yes' if cls.infinite_stabiliser else 'no'}",
        f"weighted class: {cls.to_text()}",
        f"schubert: {sch.to_text()}",
    ]
    return 0, "\n".join(lines)


def _profiles_from_args(args) -> list[RamificationProfile]:
    profiles = []
    for path in args.profile_file or []:
        p = load_profile(path)
        _check_size(p.r, p.d)
        profiles.append(p)
    if args.profile:
        if args.r is None or args.d is None:
            raise _Fail(EXIT_PARSE, "--profile needs --r and --d")
        _check_size(args.r, args.d)
        profiles.extend(profile_from_text(args.r, args.d, text) for text in args.profile)
    if not profiles:
        raise _Fail(EXIT_PARSE, "give --profile or --profile-file")
    return profiles


def cmd_worb(args) -> int:
    profiles = _profiles_from_args(args)
    jobs = [(p, args.output) for p in profiles]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_worb_one, jobs))
    else:
        results = [_worb_one(j) for j in jobs]
    code = 0
    for i, (rc, text) in enumerate(results):
        if len(results) > 1 and args.output == "report" and i:
            print()
        (sys.stderr if rc else sys.stdout).write(text + "\n")
        code = code or rc
    return code


def cmd_analyze(args) -> int:
    try:
        S = load_series(args.series)
    except DegenerateBasis as exc:
        raise _Fail(EXIT_DEPENDENT, f"dependent basis: {exc}")
    _check_size(S.r, S.d)
    W = wronskian(S)
    profile = ramification_profile(S)
    lines = [
        f"series: r={S.r} d={S.d}",
        f"wronskian: {W.to_text()}",
        f"profile: {profile}",
        "ramification points:",
    ]
    for pt in profile.points:
        lines.append(f"  {pt.point.to_text()}: {pt.sequence!r} multiplicity {pt.multiplicity}")
    lines.append("boundary orbits: " + ", ".join(f"{s!r}:{dim}" for s, dim in boundary_orbits(S)))
    if full_weight(S.r, S.d) < 3:
        lines.append("weighted class: undefined, (r+1)(d-r) < 3")
    else:
        cls = series_class(S)
        lines.append(f"weighted class: {cls.to_text()}")
        if args.output != "polynomial":
            lines.append(f"schubert: {nonequivariant_class(cls).to_text()}")
    print("\n".join(lines))
    return 0


def cmd_specialize(args) -> int:
    tree = load_tree(args.tree)
    _check_size(tree.r, tree.d)
    report = validate_tree(tree)
    if not report.ok:
        raise _Fail(EXIT_INVALID_TREE, f"invalid tree: {report}")
    try:
        rel = decompose(tree)
    except InvalidTree as exc:
        raise _Fail(EXIT_INVALID_TREE, f"invalid tree: {exc}")
    print(rel.to_text())
    if not args.verify:
        if args.certificate:
            _write(args.certificate, dump_json({"relation": rel.to_json()}))
        return 0
    v = rel.verify()
    if args.certificate:
        _write(args.certificate, dump_json(v.to_json()))
    if v.ok:
        print("PASS")
        return 0
    print("FAIL")
    print(f"difference: {v.difference.to_text()}")
    return EXIT_VERIFY


def _write(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text + "\n")


def cmd_exists(args) -> int:
    _check_size(args.r, args.d)
    profile = RamificationProfile(args.r, args.d, tuple(parse_profile_text(args.profile)))
    print("yes" if profile_exists(profile) else "no")
    return 0


def cmd_predegree(args) -> int:
    m = args.multiplicities
    if any(x < 1 for x in m):
        raise _Fail(EXIT_PARSE, "multiplicities must be positive")
    value = predegree(m)
    if args.check and value != predegree_brute_force(m):
        print(f"mismatch: closed form {value}, brute force {predegree_brute_force(m)}", file=sys.stderr)
        return EXIT_VERIFY
    print(value)
    return 0


def quartic_pencil_rows() -> list[tuple[str, str, str, bool]]:
    """(label, computed, expected, ok) for each base-point-free quartic pencil profile."""
    rows = []
    for label, c3, c21 in QUARTIC_PENCILS:
        text = ",".join(f"(0,{a})" for a in label.split(","))
        cls = nonequivariant_class(weighted_orbit_class(profile_from_text(1, 4, text)))
        got = (cls[(3,)], cls[(2, 1)])
        rest = {lam: c for lam, c in cls.coeffs if lam not in {(3,), (2, 1)}}
        expected = f"{c3}*O[3] + {c21}*O[2,1]" if c3 else f"{c21}*O[2,1]"
        rows.append((label, cls.to_text(), expected, got == (c3, c21) and not rest))
    return rows


def cmd_table(args) -> int:
    rows = quartic_pencil_rows()
    width = max(len(label) for label, *_ in rows)
    for label, got, _, ok in rows:
        print(f"{label.ljust(width)}  {got}  {'ok' if ok else 'MISMATCH'}")
    bad = [label for label, _, _, ok in rows if not ok]
    if bad:
        for label, got, want, ok in rows:
            if not ok:
                print(f"row {label}: expected {want}, got {got}", file=sys.stderr)
        return EXIT_TABLE
    return 0


class _Parser(argparse.ArgumentParser):
    # usage errors share the parse-error exit code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="orbitcalc", description="Orbit classes of linear series on P^1.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("worb", help="weighted orbit class of a ramification profile")
    w.add_argument("--r", type=int)
    w.add_argument("--d", type=int)
    w.add_argument("--profile", action="append", help='e.g. "(0,2)x6"; repeatable')
    w.add_argument("--profile-file", action="append", help="JSON profile file; repeatable")
    w.add_argument("--output", choices=["polynomial", "schubert", "report"], default="polynomial")
    w.add_argument("--jobs", type=int, default=1)
    w.set_defaults(func=cmd_worb)

    a = sub.add_parser("analyze", help="Wronskian, ramification and class of a series file")
    a.add_argument("series")
    a.add_argument("--output", choices=["polynomial", "schubert", "report"], default="report")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("specialize", help="relation from a labelled tree")
    s.add_argument("tree")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--certificate", help="write a JSON certificate here")
    s.set_defaults(func=cmd_specialize)

    e = sub.add_parser("exists", help="does some series have this profile")
    e.add_argument("--r", type=int, required=True)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--profile", required=True)
    e.set_defaults(func=cmd_exists)

    p = sub.add_parser("predegree", help="pre-degree of a binary form with root multiplicities")
    p.add_argument("multiplicities", type=int, nargs="+")
    p.add_argument("--check", action="store_true", help="compare with the ordered-triple sum")
    p.set_defaults(func=cmd_predegree)

    t = sub.add_parser("table", help="reproduce a built-in table")
    t.add_argument("name", choices=["quartic-pencils"], nargs="?", default="quartic-pencils")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (WeightMismatch, CodimNegative) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WEIGHT
    except NotDivisible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_DIVISIBLE
    except DegenerateBasis as exc:
        print(f"error: dependent basis: {exc}", file=sys.stderr)
        return EXIT_DEPENDENT
    except InvalidTree as exc:
        print(f"error: invalid tree: {exc}", file=sys.stderr)
        return EXIT_INVALID_TREE
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OrbitCalcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
