"""Command line front end: h*-vectors by three methods, partition streaming,
and identity verification sweeps.

Output is deterministic: identical flags produce byte-identical output.
Integers that do not fit in an IEEE double (beyond 2**53 - 1) are serialized
as decimal strings in JSON payloads.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from .coeffcore import eulerian, eulerian_by_enumeration
from .dosp import (
    PolytopeSpec,
    dosp_from_winding_vector,
    format_dosp,
    is_r_hypersimplicial,
    winding_vector,
)
from .enumeration import (
    count_dosps,
    enumerate_winding_vectors,
    hstar_combinatorial,
)
from .hstar import check_lemma1, check_prop1, hstar_closed_form
from .oracle import hstar_from_oracle
from .sieve import (
    check_prop3,
    check_prop4,
    dosp_from_second_winding_vector,
    enumerate_second_winding_vectors,
    run_free_family,
    second_winding_vector,
    sieve_term,
    sieve_term_closed_form,
)

_JSON_SAFE_MAX = 2**53 - 1

_METHODS = {
    "formula": hstar_closed_form,
    "enum": hstar_combinatorial,
    "oracle": hstar_from_oracle,
}


def _encode_int(x: int):
    """Integers beyond 2**53 - 1 go out as decimal strings."""
    return x if -_JSON_SAFE_MAX <= x <= _JSON_SAFE_MAX else str(x)


def _print_json(payload) -> None:
    print(json.dumps(payload, separators=(",", ":"), sort_keys=False))


def _parse_spec(args) -> PolytopeSpec:
    return PolytopeSpec(args.r, args.k, args.n)


def cmd_hstar(args) -> int:
    try:
        spec = _parse_spec(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    names = list(_METHODS) if args.method == "all" else [args.method]
    results = {name: _METHODS[name](spec).entries for name in names}
    spec_payload = {"r": spec.r, "k": spec.k, "n": spec.n}
    agree = len({entries for entries in results.values()}) == 1
    if args.format == "json":
        for name in names:
            _print_json(
                {
                    "spec": spec_payload,
                    "method": name,
                    "hstar": [_encode_int(e) for e in results[name]],
                }
            )
        if args.method == "all":
            summary = {"spec": spec_payload, "method": "all", "agree": agree}
            if agree:
                summary["hstar"] = [_encode_int(e) for e in results[names[0]]]
            _print_json(summary)
    else:
        print("r,k,n,method,d,value")
        for name in names:
            for d, value in enumerate(results[name]):
                print(f"{spec.r},{spec.k},{spec.n},{name},{d},{value}")
        if args.method == "all":
            print(f"{spec.r},{spec.k},{spec.n},agree,,{str(agree).lower()}")
    if args.method == "all" and not agree:
        print("error: methods disagree", file=sys.stderr)
        return 2
    return 0


def cmd_enum(args) -> int:
    if args.k < 1 or args.n < 1 or args.d < 0 or args.r < 1:
        print("error: k, n and r must be positive and d nonnegative", file=sys.stderr)
        return 1
    count = 0
    truncated = False
    for wv in enumerate_winding_vectors(args.k, args.n, args.d):
        partition = dosp_from_winding_vector(wv)
        if args.hypersimplicial and not is_r_hypersimplicial(partition, args.r):
            continue
        if args.limit is not None and count >= args.limit:
            truncated = True
            break
        if args.format == "json":
            _print_json(
                {
                    "blocks": [sorted(b) for b in partition.blocks],
                    "gaps": list(partition.gaps),
                    "d": args.d,
                    "winding_vector": list(wv.w),
                }
            )
        else:
            print(f"{format_dosp(partition)} w=({','.join(map(str, wv.w))})")
        count += 1
    if args.format == "json":
        _print_json({"count": count, "truncated": truncated})
    else:
        suffix = " truncated" if truncated else ""
        print(f"count={count}{suffix}")
    return 0


def _sweep(checks) -> tuple[bool, str]:
    """Run (params, ok) pairs; report the count or the first counterexample."""
    total = 0
    for params, ok in checks:
        if not ok:
            return False, f"first counterexample {params}"
        total += 1
    return True, f"{total} cases"


def _suite_lemma1(max_n, max_k, max_r):
    return _sweep(
        ((n, m, a), check_lemma1(n, m, a))
        for n in range(1, max_n + 1)
        for m in range(1, max_n + 1)
        for a in range(1, max_k + 1)
    )


def _suite_prop1(max_n, max_k, max_r):
    return _sweep(
        ((s, a, n), check_prop1(s, a, n, max_degree=10))
        for s in range(0, 6)
        for a in range(1, max_k + 1)
        for n in range(s, max_n + 1)
    )


def _check_prop2(k, n, d) -> bool:
    vectors = list(enumerate_winding_vectors(k, n, d))
    partitions = [dosp_from_winding_vector(wv) for wv in vectors]
    if len(set(partitions)) != len(vectors):
        return False
    if len(vectors) != count_dosps(k, n, d):
        return False
    return all(winding_vector(p) == wv for p, wv in zip(partitions, vectors))


def _suite_prop2(max_n, max_k, max_r):
    return _sweep(
        ((k, n, d), _check_prop2(k, n, d))
        for k in range(1, max_k + 1)
        for n in range(1, max_n + 1)
        for d in range(0, n)
    )


def _suite_prop3(max_n, max_k, max_r):
    return _sweep(
        ((k, n, r, d), check_prop3(k, n, r, d))
        for r in range(1, max_r + 1)
        for n in range(2, max_n + 1)
        for k in range(1, min(max_k, r * n - 1) + 1)
        for d in range(0, n)
    )


def _grounds(n: int, max_size: int):
    for size in range(1, max_size + 1):
        for combo in combinations(range(1, n), size):
            yield frozenset(combo)


def _suite_prop4(max_n, max_k, max_r):
    return _sweep(
        ((k, n, r, d, tuple(sorted(ground))), check_prop4(k, n, d, r, ground))
        for r in range(1, max_r + 1)
        for n in range(2, max_n + 1)
        for k in range(1, min(max_k, r * n - 1) + 1)
        for ground in _grounds(n, 3)
        for d in range(0, n)
    )


def _check_prop5(k, n, d, r, ground) -> bool:
    members = run_free_family(k, n, d, r, ground)
    vectors = list(enumerate_second_winding_vectors(k, n, d, r, ground))
    if len(members) != len(vectors):
        return False
    seen = set()
    for p in members:
        v = second_winding_vector(p, r, ground)
        if dosp_from_second_winding_vector(v) != p:
            return False
        seen.add(v)
    return seen == set(vectors)


def _suite_prop5(max_n, max_k, max_r):
    return _sweep(
        ((k, n, r, d, tuple(sorted(ground))), _check_prop5(k, n, d, r, ground))
        for r in range(1, max_r + 1)
        for n in range(2, max_n + 1)
        for k in range(1, max_k + 1)
        for ground in _grounds(n, 2)
        for d in range(0, n)
    )


def _suite_eq6(max_n, max_k, max_r):
    return _sweep(
        (
            (k, n, r, d, tuple(sorted(ground))),
            sieve_term(k, n, d, r, ground)
            == sieve_term_closed_form(k, n, d, r, len(ground)),
        )
        for r in range(1, max_r + 1)
        for n in range(2, max_n + 1)
        for k in range(1, max_k + 1)
        for ground in _grounds(n, 3)
        for d in range(0, n)
    )


def _suite_eulerian(max_n, max_k, max_r):
    def checks():
        for n in range(2, max_n + 1):
            for k in range(1, n):
                total = hstar_closed_form(PolytopeSpec(1, k, n)).total()
                yield (("volume", k, n), total == eulerian(k, n - 1))
        for n in range(1, min(max_n, 7) + 1):
            for k in range(1, n + 1):
                yield (("bruteforce", k, n), eulerian(k, n) == eulerian_by_enumeration(k, n))

    return _sweep(checks())


# suite -> (runner, default max_n, default max_k, default max_r)
_SUITES = {
    "lemma1": (_suite_lemma1, 12, 6, 1),
    "prop1": (_suite_prop1, 8, 4, 1),
    "prop2": (_suite_prop2, 5, 4, 1),
    "prop3": (_suite_prop3, 5, 5, 2),
    "prop4": (_suite_prop4, 5, 4, 2),
    "prop5": (_suite_prop5, 6, 6, 2),
    "eq6": (_suite_eq6, 6, 6, 2),
    "eulerian": (_suite_eulerian, 9, 0, 0),
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    all_ok = True
    for name in names:
        runner, def_n, def_k, def_r = _SUITES[name]
        max_n = args.max_n if args.max_n is not None else def_n
        max_k = args.max_k if args.max_k is not None else def_k
        max_r = args.max_r if args.max_r is not None else def_r
        ok, detail = runner(max_n, max_k, max_r)
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hstar-lab",
        description="Ehrhart h*-vectors of hypersimplices and cube cross sections",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_hstar = sub.add_parser("hstar", help="compute the h*-vector of a slice")
    p_hstar.add_argument("--r", type=int, required=True, help="coordinate cap")
    p_hstar.add_argument("--k", type=int, required=True, help="slice level")
    p_hstar.add_argument("--n", type=int, required=True, help="ambient dimension")
    p_hstar.add_argument(
        "--method",
        choices=["formula", "enum", "oracle", "all"],
        default="all",
        help="computation route; all compares the three",
    )
    p_hstar.add_argument("--format", choices=["json", "csv"], default="json")
    p_hstar.set_defaults(func=cmd_hstar)

    p_enum = sub.add_parser("enum", help="stream partitions of a type and winding number")
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--d", type=int, required=True)
    p_enum.add_argument("--r", type=int, default=1, help="cap used by --hypersimplicial")
    p_enum.add_argument(
        "--hypersimplicial",
        action="store_true",
        help="keep only r-hypersimplicial partitions",
    )
    p_enum.add_argument("--limit", type=int, default=None, help="emit at most this many records")
    p_enum.add_argument("--format", choices=["text", "json"], default="text")
    p_enum.set_defaults(func=cmd_enum)

    p_verify = sub.add_parser("verify", help="run identity sweeps")
    p_verify.add_argument("--suite", choices=[*_SUITES, "all"], default="all")
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--max-k", type=int, default=None)
    p_verify.add_argument("--max-r", type=int, default=None)
    p_verify.add_argument(
        "--seed",
        type=int,
        default=None,
        help="accepted for reproducibility scripting; every sweep is exhaustive",
    )
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
