"""Command-line entry point.

Subcommands expose the enumerations, orbit computations, verification suites
and Gaudin spectra as reproducible batch runs.  Lists come out as JSON lines,
reports as a single JSON object; output is byte-identical for fixed arguments
and seed.  Exit codes: 0 pass, 1 property failure, 2 usage or bound errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .cactus import (
    CactusWord,
    act_on_decgd_gen,
    act_on_syt,
    act_on_word,
    check_equivariance,
    generator_images,
    minimal_frame,
    orbits_of,
)
from .gaudin import joint_spectrum
from .growth import DEFAULT_BOUND, enumerate_cgds, enumerate_decgds
from .tableaux import (
    RectangleFrame,
    enumerate_syt,
    normalize,
    partitions_of,
    syt_count,
)
from .taquin import evacuation, partial_evacuation, xi_ssyt
from .words import (
    enumerate_words,
    format_word,
    lr_coefficient,
    parse_word,
    rsk,
    star,
    weight,
)

MAX_N = 6


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_shape(s: str):
    try:
        data = json.loads(s)
        return tuple(normalize(p) for p in data)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad shape JSON {s!r}: {exc}") from exc


def _parse_partition(s: str):
    try:
        return normalize(json.loads(s))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad partition JSON {s!r}: {exc}") from exc


def _parse_z(s: str):
    try:
        return [Fraction(part.strip()) for part in s.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"bad rational list {s!r}: {exc}") from exc


def _frame(args) -> RectangleFrame:
    if args.rank is None or args.degree is None:
        raise UsageError("this command needs --rank and --degree")
    try:
        return RectangleFrame(args.rank, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_bound(value: int, limit: int, what: str, acknowledged: bool):
    if value > limit and not acknowledged:
        raise UsageError(
            f"{what} = {value} exceeds the default bound {limit}; "
            f"pass --i-know-this-is-big to proceed")


def cmd_rsk(args) -> int:
    word = parse_word(args.word)
    if any(x < 1 for x in word):
        raise UsageError(f"letters must be positive, got {args.word!r}")
    p, q = rsk(word)
    _emit([_dump({"p": p.to_json(), "q": q.to_json()})], args.out)
    return 0


def cmd_enumerate(args) -> int:
    frame = _frame(args)
    bound = args.bound if args.bound is not None else DEFAULT_BOUND
    _check_bound(frame.cells, bound, "r(d-r)", args.i_know_this_is_big)
    eff_bound = max(frame.cells, bound)
    lines = []
    if args.kind == "cgd":
        diagrams = enumerate_cgds(frame, eff_bound)
        payloads = sorted(_dump(d.to_json()) for d in diagrams)
        lines.extend(payloads)
        summary = {"kind": "cgd", "count": len(diagrams),
                   "expected": syt_count(frame.rect), "seed": args.seed}
    else:
        if args.shape is None:
            raise UsageError("decgd enumeration needs --shape")
        shape = _parse_shape(args.shape)
        if sum(sum(p) for p in shape) != frame.cells:
            raise UsageError(
                f"shape sizes sum to {sum(sum(p) for p in shape)}, "
                f"expected r(d-r) = {frame.cells}")
        diagrams = enumerate_decgds(frame, shape, eff_bound)
        payloads = sorted(_dump(d.to_json()) for d in diagrams)
        lines.extend(payloads)
        summary = {"kind": "decgd", "count": len(diagrams),
                   "lr_coefficient": lr_coefficient(frame.rect, shape),
                   "seed": args.seed}
    lines.append(_dump(summary))
    _emit(lines, args.out)
    return 0


def _orbit_report(elements, element_json, images, extras):
    report = {
        "elements": [element_json(e) for e in elements],
        "orbits": orbits_of(elements, images),
        "generator_images": {k: list(v) for k, v in images.items()},
        "basepoint_ordering": "identity",
    }
    report.update(extras)
    return report


def cmd_orbits(args) -> int:
    bound = args.bound if args.bound is not None else MAX_N
    if args.realization == "words":
        if args.length is None or args.rank is None:
            raise UsageError("words orbits need --length and --rank")
        n, r = args.length, args.rank
        _check_bound(n, bound, "length", args.i_know_this_is_big)
        if args.weight:
            mu = tuple(json.loads(args.weight))
            mu = mu + (0,) * (r - len(mu))
        else:
            raise UsageError("words orbits need --weight")
        elements = [w for w in enumerate_words(n, r) if weight(w, r) == mu]
        qs = range(2, n + 1)
        images = generator_images(
            elements, lambda w, q: act_on_word(CactusWord(n, ((1, q),)), w, r), qs)
        orbit_list = orbits_of(elements, images)
        fingerprints = []
        for orb in orbit_list:
            ps = sorted({_dump(rsk(elements[i]).p.to_json()) for i in orb})
            qsym = sorted({_dump(rsk(elements[i]).q.to_json()) for i in orb})
            fingerprints.append({"p_symbols": ps, "q_symbols": qsym})
        report = _orbit_report(elements, format_word, images,
                               {"realization": "words", "length": n, "rank": r,
                                "weight": list(mu), "orbit_fingerprints": fingerprints,
                                "seed": args.seed})
    elif args.realization == "syt":
        if args.weight is None:
            raise UsageError("syt orbits need --weight (the tableau shape)")
        mu = _parse_partition(args.weight)
        n = sum(mu)
        _check_bound(n, bound, "|mu|", args.i_know_this_is_big)
        elements = sorted(enumerate_syt(mu), key=lambda t: t.rows)
        images = generator_images(
            elements, lambda t, q: partial_evacuation(t, q), range(2, n + 1))
        report = _orbit_report(elements, lambda t: t.to_json(), images,
                               {"realization": "syt", "weight": list(mu),
                                "seed": args.seed})
    else:
        frame = _frame(args)
        if args.shape is None:
            raise UsageError("decgd orbits need --shape")
        shape = _parse_shape(args.shape)
        _check_bound(frame.cells, max(bound, DEFAULT_BOUND), "r(d-r)",
                     args.i_know_this_is_big)
        elements = list(enumerate_decgds(frame, shape, max(frame.cells, DEFAULT_BOUND)))
        n = len(shape) - 1
        images = generator_images(
            elements, lambda d, q: _find(elements, act_on_decgd_gen(1, q, d)),
            range(2, n + 1)) if n >= 2 else {}
        report = _orbit_report(elements, lambda d: d.to_json(), images,
                               {"realization": "decgd", "shape": [list(p) for p in shape],
                                "seed": args.seed})
    _emit([_dump(report)], args.out)
    return 0


def _find(elements, target):
    for e in elements:
        if e == target:
            return e
    raise AssertionError("action left the enumerated set")


def _suite_duality(args) -> dict:
    max_len = args.max_length or 6
    max_rank = args.max_rank or 3
    failures = []
    cases = 0
    for r in range(1, max_rank + 1):
        for n in range(1, max_len + 1):
            for w in enumerate_words(n, r):
                cases += 1
                p, q = rsk(w)
                ps, qs = rsk(star(w, r))
                if ps != xi_ssyt(p, r) or qs != evacuation(q):
                    failures.append({"word": format_word(w), "rank": r})
    return {"suite": "duality", "max_length": max_len, "max_rank": max_rank,
            "cases": cases, "failures": failures, "passed": not failures}


def _suite_equivariance(args) -> dict:
    reports = []
    failures = []
    cases = 0
    if args.shape is not None:
        shape = _parse_shape(args.shape)
        mu = _parse_partition(args.weight) if args.weight else None
        if mu is None:
            raise UsageError("equivariance with --shape needs --weight")
        frame = (_frame(args) if args.rank is not None else minimal_frame(shape, mu))
        rep = check_equivariance(frame, shape, mu, bound=max(frame.cells, DEFAULT_BOUND))
        reports.append(rep)
    else:
        max_n = args.max_n or 5
        for n in range(2, max_n + 1):
            shape = ((1,),) * n
            for mu in partitions_of(n):
                frame = minimal_frame(shape, mu)
                rep = check_equivariance(frame, shape, mu,
                                         bound=max(frame.cells, DEFAULT_BOUND))
                reports.append(rep)
    for rep in reports:
        cases += rep["cases"]
        failures.extend(rep["failures"])
    return {"suite": "equivariance", "cases": cases, "runs": len(reports),
            "failures": failures, "passed": not failures}


def _suite_gaudin(args) -> dict:
    rng = random.Random(args.seed)
    failures = []
    runs = []
    if args.z:
        zs = _parse_z(args.z)
        mu = _parse_partition(args.weight) if args.weight else None
        if mu is None:
            raise UsageError("gaudin with --z needs --weight")
        n = len(zs)
        r = args.max_rank or max(len(mu), 2)
        res = joint_spectrum(zs, n, r, mu)
        runs.append(res)
        if not res["simple"] or res["dimension"] != res["expected_dimension"]:
            failures.append(res)
    else:
        max_n = args.max_n or 4
        max_rank = args.max_rank or 3
        draws = args.cases or 10
        for n in range(2, max_n + 1):
            for r in range(2, max_rank + 1):
                for mu in partitions_of(n, max_rows=r):
                    for _ in range(draws):
                        zs = [Fraction(x) for x in rng.sample(range(-50, 51), n)]
                        res = joint_spectrum(zs, n, r, mu)
                        runs.append(res)
                        if not res["simple"] or res["dimension"] != res["expected_dimension"]:
                            failures.append(res)
    min_sep = min((res["min_separation"] for res in runs
                   if res["min_separation"] is not None), default=None)
    return {"suite": "gaudin", "cases": len(runs), "min_separation": min_sep,
            "failures": failures, "passed": not failures, "seed": args.seed}


def cmd_check(args) -> int:
    suites = {"duality": _suite_duality, "equivariance": _suite_equivariance,
              "gaudin": _suite_gaudin}
    if args.suite not in suites:
        raise UsageError(f"unknown suite {args.suite!r}; pick from {sorted(suites)}")
    report = suites[args.suite](args)
    report["seed"] = args.seed
    _emit([_dump(report)], args.out)
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cactusgd",
        description="growth diagrams, cactus-group actions and Gaudin spectra")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--rank", type=int, default=None, help="frame rows r")
        p.add_argument("--degree", type=int, default=None, help="frame degree d")
        p.add_argument("--shape", default=None, help="JSON list of partitions")
        p.add_argument("--weight", default=None, help="JSON partition / weight")
        p.add_argument("--z", default=None, help="comma-separated rationals")
        p.add_argument("--bound", type=int, default=None, help="size bound")
        p.add_argument("--seed", type=int, default=0, help="seed for random sweeps")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--i-know-this-is-big", action="store_true",
                       dest="i_know_this_is_big",
                       help="acknowledge exceeding the default bounds")

    p_rsk = sub.add_parser("rsk", help="RSK pair of a word")
    p_rsk.add_argument("word", help="word as a digit string")
    common(p_rsk)
    p_rsk.set_defaults(func=cmd_rsk)

    p_enum = sub.add_parser("enumerate", help="enumerate cgds or decgds")
    p_enum.add_argument("--kind", choices=("cgd", "decgd"), required=True)
    common(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_orb = sub.add_parser("orbits", help="cactus-group orbits")
    p_orb.add_argument("--realization", choices=("words", "syt", "decgd"),
                       required=True)
    p_orb.add_argument("--length", type=int, default=None, help="word length")
    common(p_orb)
    p_orb.set_defaults(func=cmd_orbits)

    p_chk = sub.add_parser("check", help="run a verification suite")
    p_chk.add_argument("--suite", choices=("duality", "equivariance", "gaudin"),
                       required=True)
    p_chk.add_argument("--max-length", type=int, default=None)
    p_chk.add_argument("--max-rank", type=int, default=None)
    p_chk.add_argument("--max-n", type=int, default=None)
    p_chk.add_argument("--cases", type=int, default=None,
                       help="random draws per gaudin case")
    common(p_chk)
    p_chk.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
